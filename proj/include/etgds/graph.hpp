#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace etgds {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency lists are sorted and symmetric. A Graph is immutable once built:
 * vertex degrees fix the threshold domains of every state bound to it.
 */
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range ids throw std::invalid_argument.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// n[v]: v together with its neighbors, ascending.
  std::vector<Vertex> closed_neighborhood(Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool has_edge(Vertex u, Vertex v) const;
  bool is_connected() const;
  bool is_tree() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Center 0 joined to `leaves` leaf vertices.
Graph star_graph(std::size_t leaves);
/// Center 0 with `legs` disjoint paths of `leg_length` vertices hanging off it.
Graph spider_graph(std::size_t legs, std::size_t leg_length);
Graph complete_graph(std::size_t n);

/// Every connected simple graph on n labeled vertices, n <= 5, each once.
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

/**
 * Deterministic random labeled tree on n vertices.
 *
 * Draws a Prüfer sequence of length n-2 from std::mt19937_64 seeded with
 * `seed`, taking each entry as `engine() % n`, then decodes it with the
 * standard smallest-leaf rule. Both steps are fully specified, so the same
 * (n, seed) gives the same tree on every platform.
 */
Graph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace etgds
