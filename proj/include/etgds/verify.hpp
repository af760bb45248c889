#pragma once

// Exhaustive checks of the structural properties of extended threshold systems
// on small graphs. A failed check is a result, not an exception.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etgds/graph.hpp"
#include "etgds/phase_space.hpp"
#include "etgds/state.hpp"

namespace etgds {

struct CheckResult {
  std::string check;
  std::string subject;
  bool passed = true;
  std::string detail;
  std::optional<std::string> counterexample;
};

struct VerifyOptions {
  std::uint64_t cap = kDefaultStateCap;
  std::size_t workers = 1;
  /// Up to this many vertices every permutation is swept; above it a seeded
  /// sample of kSampledPermutations orders is used.
  std::size_t exhaustive_permutation_limit = 5;
  std::uint64_t permutation_seed = 0;
};

inline constexpr std::size_t kSampledPermutations = 120;

/// All n! orders for small n, else a deterministic Fisher-Yates sample.
std::vector<std::vector<Vertex>> update_orders(std::size_t n, const VerifyOptions& options = {});

/// Short text form for reports: "n=3 edges=0-1,1-2".
std::string describe_graph(const Graph& g);

enum class SchemeFamily { Sequential, Parallel };

/// Sequential: every order has only fixed points as limit sets.
/// Parallel: no periodic orbit longer than 2.
CheckResult verify_limit_cycles(const Graph& g, Rule rule, SchemeFamily family,
                                 const VerifyOptions& options = {});

/// ψ ∘ F↑ = F↓ ∘ ψ state for state (so ψ is a digraph isomorphism between the
/// two phase spaces), and ψ ∘ ψ = id.
CheckResult verify_conjugacy(const Graph& g, const UpdateScheme& scheme,
                             const VerifyOptions& options = {});

/// Every mixed vertex update that flips x_v lowers P by at least 1.
CheckResult verify_potential_descent(const Graph& g, const VerifyOptions& options = {});

/// The predicate's fixed points equal the fixed points of all six maps
/// (increasing, decreasing, mixed; parallel and every update order).
CheckResult verify_fixed_sets(const Graph& g, const VerifyOptions& options = {});

/// Each vertex has x_v = 1 in exactly half of the fixed points, and ψ maps the
/// fixed-point set onto itself.
CheckResult verify_half_ones(const Graph& g, const VerifyOptions& options = {});

/// For sequential increasing, decreasing and mixed maps: once a transition is
/// unidirectional, later transitions go the same way or change nothing.
CheckResult verify_unidirectional(const Graph& g, const VerifyOptions& options = {});

struct WeightedCheckOptions {
  std::size_t matrices = 50;
  std::size_t max_n = 6;
  std::int64_t weight_bound = 3;       ///< entries drawn from [-bound, bound]
  std::size_t thresholds_per_matrix = 8;
  std::uint64_t seed = 0;
  std::size_t orbit_cap = 1'000'000;
};

/// Weighted mixed parallel dynamics on seeded random symmetric integer
/// matrices: every orbit from every x in {0,1}^n (with seeded thresholds)
/// closes into a cycle of length at most 2.
CheckResult verify_weighted_period(const WeightedCheckOptions& options = {});

/// The closed-neighborhood indicator weights reproduce the unweighted mixed
/// parallel map on every state of g.
CheckResult verify_weighted_agreement(const Graph& g, const VerifyOptions& options = {});

}  // namespace etgds
