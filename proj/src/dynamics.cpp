#include "etgds/dynamics.hpp"

#include <cmath>

namespace etgds {

std::uint32_t sigma(const Graph& g, const ExtendedState& s, Vertex v) {
  std::uint32_t count = s.at(v).x;
  for (Vertex u : g.neighbors(v)) count += s[u].x;
  return count;
}

bool tau(std::uint32_t k, std::span<const std::uint8_t> bits) {
  std::uint32_t ones = 0;
  for (auto b : bits) ones += b != 0;
  return ones >= k;
}

std::uint32_t next_threshold(Rule rule, std::uint8_t x, std::uint32_t k, std::uint32_t sig) {
  const bool raises = x == 0 && sig >= k;
  const bool lowers = x == 1 && sig < k;
  switch (rule) {
    case Rule::Static: return k;
    case Rule::Increasing: return raises ? k + 1 : k;
    case Rule::Decreasing: return lowers ? k - 1 : k;
    case Rule::Mixed: return raises ? k + 1 : (lowers ? k - 1 : k);
  }
  return k;
}

namespace {

VertexState vertex_function(const Graph& g, Rule rule, const ExtendedState& s, Vertex v) {
  const auto sig = sigma(g, s, v);
  const auto& cur = s[v];
  return {static_cast<std::uint8_t>(sig >= cur.k), next_threshold(rule, cur.x, cur.k, sig)};
}

}  // namespace

void apply_local_update(const Graph& g, Rule rule, ExtendedState& s, Vertex v) {
  s[v] = vertex_function(g, rule, s, v);
}

ExtendedState local_update(const Graph& g, Rule rule, ExtendedState s, Vertex v) {
  apply_local_update(g, rule, s, v);
  return s;
}

ExtendedState sds_step(const Graph& g, Rule rule, const std::vector<Vertex>& order, ExtendedState s) {
  if (!is_permutation_of_vertices(order, g.order())) {
    throw std::invalid_argument("update order is not a permutation of the graph's vertices");
  }
  for (Vertex v : order) apply_local_update(g, rule, s, v);
  return s;
}

ExtendedState gca_step(const Graph& g, Rule rule, const ExtendedState& s) {
  ExtendedState next(s.size());
  for (Vertex v = 0; v < s.size(); ++v) next[v] = vertex_function(g, rule, s, v);
  return next;
}

ExtendedState step(const Graph& g, const RuleScheme& rs, const ExtendedState& s) {
  if (rs.scheme.is_parallel()) return gca_step(g, rs.rule, s);
  return sds_step(g, rs.rule, rs.scheme.order(), s);
}

ExtendedState psi(const Graph& g, const ExtendedState& s) {
  ExtendedState out(s.size());
  for (Vertex v = 0; v < s.size(); ++v) {
    out[v].x = static_cast<std::uint8_t>(1 - s[v].x);
    out[v].k = static_cast<std::uint32_t>(g.degree(v)) + 2 - s[v].k;
  }
  return out;
}

std::uint64_t vertex_potential(const Graph& g, const ExtendedState& s) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < s.size(); ++v) {
    total += s[v].x ? s[v].k : g.degree(v) + 2 - s[v].k;
  }
  return total;
}

std::uint64_t edge_potential(const Graph& g, const ExtendedState& s) {
  std::uint64_t total = 0;
  for (const auto& [u, v] : g.edges()) total += s[u].x != s[v].x;
  return total;
}

std::uint64_t potential(const Graph& g, const ExtendedState& s) {
  return vertex_potential(g, s) + edge_potential(g, s);
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::Identity: return "identity";
    case Direction::Up: return "up";
    case Direction::Down: return "down";
    case Direction::Mixed: return "mixed-direction";
  }
  return "?";
}

Direction classify_transition(const ExtendedState& s, const ExtendedState& next) {
  if (s.size() != next.size()) throw std::invalid_argument("states differ in length");
  bool up = false;
  bool down = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    up |= s[i].x == 0 && next[i].x == 1;
    down |= s[i].x == 1 && next[i].x == 0;
  }
  if (up && down) return Direction::Mixed;
  if (up) return Direction::Up;
  if (down) return Direction::Down;
  return Direction::Identity;
}

SymmetricWeights::SymmetricWeights(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw std::invalid_argument("weight matrix must have n*n entries");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (values_[i * n_ + j] != values_[j * n_ + i]) {
        throw std::invalid_argument("weight matrix is not symmetric at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
    }
  }
}

SymmetricWeights SymmetricWeights::closed_neighborhood_indicator(const Graph& g) {
  const auto n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    a[v * n + v] = 1.0;
    for (Vertex u : g.neighbors(v)) a[v * n + u] = 1.0;
  }
  return SymmetricWeights(n, std::move(a));
}

std::size_t WeightedStateHash::operator()(const WeightedState& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    h ^= static_cast<std::size_t>(s.k[i]) * 2 + s.x[i];
    h *= 1099511628211ull;
  }
  return h;
}

WeightedState weighted_mixed_gca_step(const WeightedState& s, const SymmetricWeights& w) {
  const auto n = w.size();
  if (s.x.size() != n || s.k.size() != n) {
    throw std::invalid_argument("weighted state dimension does not match the weight matrix");
  }
  WeightedState next = s;
  for (std::size_t i = 0; i < n; ++i) {
    double field = 0.0;
    for (std::size_t j = 0; j < n; ++j) field += w(i, j) * s.x[j];
    const bool on = field >= static_cast<double>(s.k[i]);
    if (s.x[i] == 0 && on) {
      next.x[i] = 1;
      next.k[i] = s.k[i] + 1;
    } else if (s.x[i] == 1 && !on) {
      next.x[i] = 0;
      next.k[i] = s.k[i] - 1;
    }
  }
  return next;
}

}  // namespace etgds
