#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "etgds/bigcount.hpp"
#include "etgds/graph.hpp"
#include "etgds/phase_space.hpp"
#include "etgds/state.hpp"

namespace etgds {

// The six maps (three rules, parallel or sequential) share one fixed-point set:
// every vertex has x_v = 0 with σ(x[v]) < k_v, or x_v = 1 with σ(x[v]) >= k_v.

bool is_fixed_point(const Graph& g, const ExtendedState& s);

/// Sweep of the predicate over every state, using the block kernels.
BigCount count_fixed_brute(const Graph& g, const BuildOptions& options = {});

/**
 * Depth-first assignment of (x_v, k_v) along `vertex_order`. A partial
 * assignment is cut as soon as some vertex has its whole closed neighborhood
 * assigned and fails the local condition. An empty order means breadth-first
 * from vertex 0 (then the remaining components in index order).
 */
BigCount count_fixed_backtrack(const Graph& g, std::vector<Vertex> vertex_order = {});
std::vector<Vertex> breadth_first_order(const Graph& g);

BigCount fib(std::size_t n);
BigCount lucas(std::size_t n);

/// |Fix| over P_n: 2 Fib(3n - 1).
BigCount count_fixed_path(std::size_t n);
/// Fix(n+1) = 5 Fix(n-1) + 4 (Fix(n) - Fix(n-1)).
BigCount path_recursion_step(const BigCount& fix_n, const BigCount& fix_n_minus_1);

/// |Fix| over C_n: 2 + Luc(3n). Requires n >= 3.
BigCount count_fixed_cycle(std::size_t n);
/// L_n = 6 L_{n-1} - 8 L_{n-2} + 2 L_{n-3} + L_{n-4}, seeded with L_3..L_6.
/// This is the recurrence of x^4 - 6x^3 + 8x^2 - 2x - 1, the nonzero-root
/// factor of the transfer matrix's characteristic polynomial.
BigCount count_fixed_cycle_recursion(std::size_t n);

/// (1 - 1/√5)(2 + √5)^n.
double path_scaling_estimate(std::size_t n);

// ---------------------------------------------------------------------------
// Transfer matrix for C_n.

/// Three consecutive extended states (s_{i-1}, s_i, s_{i+1}) on a cycle, with
/// the center satisfying the local fixed-point condition (degree 2).
struct LocalFixedPoint {
  std::array<VertexState, 3> window;
  bool operator==(const LocalFixedPoint&) const = default;
};

struct TransferMatrix {
  std::vector<LocalFixedPoint> nodes;
  /// Row-major 0/1 adjacency: entry (a, b) is 1 iff nodes[a] ◁ nodes[b].
  std::vector<std::uint8_t> adjacency;

  std::size_t dimension() const { return nodes.size(); }
  bool edge(std::size_t a, std::size_t b) const { return adjacency[a * nodes.size() + b] != 0; }
};

TransferMatrix build_transfer_matrix();
/// trace(A^n) by exact repeated squaring.
BigCount count_fixed_cycle_transfer(std::size_t n);
/// trace(A^n) for n = first..last, by stepping A^n -> A^{n+1}.
std::vector<BigCount> cycle_counts_transfer(std::size_t first, std::size_t last);

/**
 * Smallest k <= max_k with A^k p(A) = 0 for the transfer matrix A, where p is
 * the monic polynomial x^m + c[0] x^{m-1} + ... + c[m-1]. Empty if there is
 * none. A^k p(A) = 0 means every entry sequence of A^n, and so the cycle
 * counts, obeys the recurrence with characteristic polynomial p from n = k + m on.
 */
std::optional<std::size_t> transfer_annihilator_shift(const std::vector<BigCount>& c, std::size_t max_k);

// ---------------------------------------------------------------------------
// Paths, marked vertices and one-vertex unions.
//
// χ(v; X) counts fixed points of X with s_v = (0, d(v) + 1); ζ(W; X) counts
// those with that state at every vertex of W. Positions are 1-based.

BigCount chi_path(std::size_t n, std::size_t position);
/// Throws std::invalid_argument on an empty, unsorted or out-of-range mark list.
BigCount zeta_path(std::size_t n, const std::vector<std::size_t>& marked_positions);

/// Fix(X1 ∪ X2) for X1 ∩ X2 = {v}: χ1 Fix2 + (Fix1 - 2 χ1) χ2.
BigCount merge_at_vertex(const BigCount& fix1, const BigCount& chi1, const BigCount& fix2,
                         const BigCount& chi2);

// ---------------------------------------------------------------------------
// Trees.

/**
 * A tree written as a base path plus branch paths. Each branch starts at a
 * vertex already covered by the base path or an earlier branch and shares only
 * that vertex with them.
 */
struct PathDecomposition {
  struct Branch {
    Vertex attach;              ///< == path.front()
    std::vector<Vertex> path;  ///< attach, then new vertices out to a leaf
  };
  std::vector<Vertex> base;
  std::vector<Branch> branches;
};

struct DecompositionOptions {
  /// Endpoints of the base path; defaults to the longest leaf-to-leaf path.
  std::optional<std::pair<Vertex, Vertex>> base_endpoints;
  /// If set, neighbor visiting order during branch discovery is shuffled with
  /// this seed; otherwise neighbors are visited in ascending order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Throws std::invalid_argument if `t` is not a tree.
PathDecomposition decompose_tree(const Graph& t, const DecompositionOptions& options = {});
/// Throws std::invalid_argument describing the first violated condition.
void validate_decomposition(const Graph& t, const PathDecomposition& d);

/// Fix(T) from the path decomposition by one-vertex merges.
BigCount count_fixed_tree(const Graph& t);
BigCount count_fixed_tree(const Graph& t, const PathDecomposition& d);

/// Fix(T_0), ..., Fix(T_m) where T_0 is the base path and T_i adds branch i.
std::vector<BigCount> tree_fixed_point_trace(const Graph& t, const PathDecomposition& d);

/// Subgraph covered by the base path and the first `branches` branches,
/// relabeled 0..m-1 in order of first appearance. Used to check T_i.
Graph decomposition_prefix(const PathDecomposition& d, std::size_t branches);

// ---------------------------------------------------------------------------
// Per-vertex state statistics over Fix.

struct FixedPointCensus {
  BigCount total;
  std::vector<BigCount> ones_at;  ///< fixed points with x_v = 1, per vertex
  std::vector<BigCount> marked_at;  ///< fixed points with s_v = (0, d(v)+1)
};

/// Scalar sweep over all states within `cap`.
FixedPointCensus fixed_point_census(const Graph& g, std::uint64_t cap = kDefaultStateCap);

/// Every fixed point of g, in index order (codec of g).
std::vector<std::uint64_t> fixed_point_indices(const Graph& g, std::uint64_t cap = kDefaultStateCap);

}  // namespace etgds
