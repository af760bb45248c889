#include "etgds/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace etgds {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") references a vertex outside 0.." +
                                  std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.edge_count_ += adj.size();
  }
  g.edge_count_ /= 2;
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
  auto adj = neighbors(v);
  std::vector<Vertex> out;
  out.reserve(adj.size() + 1);
  auto it = std::lower_bound(adj.begin(), adj.end(), v);
  out.insert(out.end(), adj.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, adj.end());
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

bool Graph::is_connected() const {
  if (adjacency_.empty()) return true;
  std::vector<bool> seen(adjacency_.size(), false);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == adjacency_.size();
}

bool Graph::is_tree() const {
  return !adjacency_.empty() && edge_count_ + 1 == adjacency_.size() && is_connected();
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path_graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3 to be simple");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(leaves + 1, edges);
}

Graph spider_graph(std::size_t legs, std::size_t leg_length) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t leg = 0; leg < legs; ++leg) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < leg_length; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edge_list(next, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  if (n > 5) throw std::invalid_argument("enumerate_connected_graphs supports n <= 5");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  const std::uint32_t subsets = 1u << pairs.size();
  std::vector<Edge> chosen;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1u << i)) chosen.push_back(pairs[i]);
    }
    Graph g = Graph::from_edge_list(n, chosen);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree needs n >= 1");
  if (n == 1) return Graph::from_edge_list(1, {});
  if (n == 2) {
    const Edge e{0, 1};
    return Graph::from_edge_list(2, std::span(&e, 1));
  }
  std::mt19937_64 engine(seed);
  std::vector<Vertex> prufer(n - 2);
  for (auto& p : prufer) p = static_cast<Vertex>(engine() % n);

  std::vector<std::size_t> remaining(n, 1);
  for (Vertex p : prufer) ++remaining[p];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex p : prufer) {
    Vertex leaf = 0;
    while (remaining[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
    --remaining[leaf];
    --remaining[p];
  }
  Vertex a = 0;
  while (remaining[a] != 1) ++a;
  Vertex b = a + 1;
  while (remaining[b] != 1) ++b;
  edges.emplace_back(a, b);
  return Graph::from_edge_list(n, edges);
}

}  // namespace etgds
