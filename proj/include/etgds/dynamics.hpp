#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "etgds/graph.hpp"
#include "etgds/state.hpp"

namespace etgds {

/// σ(x[v]): number of 1-states on the closed neighborhood of v.
std::uint32_t sigma(const Graph& g, const ExtendedState& s, Vertex v);

/// τ_k: 1 iff at least k of the inputs are 1.
bool tau(std::uint32_t k, std::span<const std::uint8_t> bits);

/// Threshold evolution g_v, evaluated on the pre-update pair (x_v, σ).
std::uint32_t next_threshold(Rule rule, std::uint8_t x, std::uint32_t k, std::uint32_t sig);

/// Vertex update F_v applied in place.
void apply_local_update(const Graph& g, Rule rule, ExtendedState& s, Vertex v);
ExtendedState local_update(const Graph& g, Rule rule, ExtendedState s, Vertex v);

/// SDS map F_π: vertex updates in order π, π_1 first.
ExtendedState sds_step(const Graph& g, Rule rule, const std::vector<Vertex>& order, ExtendedState s);
/// GCA map F: all vertices computed from s, then written together.
ExtendedState gca_step(const Graph& g, Rule rule, const ExtendedState& s);
ExtendedState step(const Graph& g, const RuleScheme& rs, const ExtendedState& s);

/// Conjugation map ψ: (x, k) -> (1 - x, d(v) - k + 2) per vertex.
ExtendedState psi(const Graph& g, const ExtendedState& s);

/// P(s) = Σ_v [x_v ? k_v : d(v) + 2 - k_v] + #{edges with unequal x}.
std::uint64_t potential(const Graph& g, const ExtendedState& s);
std::uint64_t vertex_potential(const Graph& g, const ExtendedState& s);
std::uint64_t edge_potential(const Graph& g, const ExtendedState& s);

enum class Direction { Identity, Up, Down, Mixed };
std::string_view to_string(Direction d);

/// Classifies the x-flips of s -> next. Throws on length mismatch.
Direction classify_transition(const ExtendedState& s, const ExtendedState& next);

// ---------------------------------------------------------------------------
// Weighted (neural-network) mixed dynamics.

/// Dense symmetric n×n weight matrix, row-major.
class SymmetricWeights {
 public:
  /// Throws std::invalid_argument if `values` is not n×n or not symmetric.
  SymmetricWeights(std::size_t n, std::vector<double> values);

  /// a_ij = 1 on edges and on the diagonal, 0 elsewhere.
  static SymmetricWeights closed_neighborhood_indicator(const Graph& g);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

struct WeightedState {
  std::vector<std::uint8_t> x;
  std::vector<std::int64_t> k;

  bool operator==(const WeightedState&) const = default;
};

struct WeightedStateHash {
  std::size_t operator()(const WeightedState& s) const noexcept;
};

/// Synchronous mixed update with weighted sums Σ_j a_ij x_j against k_i.
/// Thresholds are plain integers, not clamped to any domain.
WeightedState weighted_mixed_gca_step(const WeightedState& s, const SymmetricWeights& w);

// ---------------------------------------------------------------------------
// Orbits.

class OrbitCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class State>
struct Orbit {
  std::vector<State> transient;  ///< states before the cycle is entered
  std::vector<State> cycle;      ///< the limit cycle, starting at its first visited state
};

/**
 * Forward orbit of `start` under `step`, split into transient prefix and
 * cycle. Visited states are kept in a hash map, so the split is exact.
 * Throws OrbitCapExceeded if no state repeats within `cap` steps.
 */
template <class State, class Hash = std::hash<State>, class Step>
Orbit<State> orbit(const State& start, Step&& step, std::size_t cap) {
  std::vector<State> path;
  std::unordered_map<State, std::size_t, Hash> first_seen;
  State current = start;
  for (std::size_t t = 0;; ++t) {
    auto [it, inserted] = first_seen.emplace(current, path.size());
    if (!inserted) {
      Orbit<State> out;
      const auto entry = static_cast<std::ptrdiff_t>(it->second);
      out.transient.assign(path.begin(), path.begin() + entry);
      out.cycle.assign(path.begin() + entry, path.end());
      return out;
    }
    if (t >= cap) {
      throw OrbitCapExceeded("orbit did not close within " + std::to_string(cap) + " steps");
    }
    path.push_back(current);
    current = step(current);
  }
}

inline Orbit<ExtendedState> orbit(const Graph& g, const RuleScheme& rs, const ExtendedState& start,
                                  std::size_t cap) {
  return orbit<ExtendedState, ExtendedStateHash>(
      start, [&](const ExtendedState& s) { return step(g, rs, s); }, cap);
}

}  // namespace etgds
