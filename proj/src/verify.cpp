#include "etgds/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "etgds/codec.hpp"
#include "etgds/dynamics.hpp"
#include "etgds/fixed_points.hpp"

namespace etgds {
namespace {

BuildOptions build_options(const VerifyOptions& options) {
  BuildOptions b;
  b.cap = options.cap;
  b.workers = options.workers;
  return b;
}

std::string order_text(const std::vector<Vertex>& order) {
  return UpdateScheme::sequential(order).describe();
}

CheckResult make_result(std::string check, const Graph& g) {
  CheckResult r;
  r.check = std::move(check);
  r.subject = describe_graph(g);
  return r;
}

// ψ as a permutation of state indices.
std::vector<std::uint32_t> psi_index_map(const Graph& g, const StateCodec& codec) {
  std::vector<std::uint32_t> map(codec.size());
  for (std::uint64_t i = 0; i < codec.size(); ++i) {
    map[i] = static_cast<std::uint32_t>(codec.encode(psi(g, codec.decode(i))));
  }
  return map;
}

}  // namespace

std::vector<std::vector<Vertex>> update_orders(std::size_t n, const VerifyOptions& options) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<Vertex>> out;
  if (n <= options.exhaustive_permutation_limit) {
    do {
      out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
  }
  std::mt19937_64 engine(options.permutation_seed);
  for (std::size_t s = 0; s < kSampledPermutations; ++s) {
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[engine() % i]);
    out.push_back(order);
  }
  return out;
}

std::string describe_graph(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " edges=";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  if (first) out += "none";
  return out;
}

CheckResult verify_limit_cycles(const Graph& g, Rule rule, SchemeFamily family,
                                 const VerifyOptions& options) {
  auto result = make_result(std::string("limits/") + std::string(to_string(rule)) +
                                (family == SchemeFamily::Sequential ? "/sequential" : "/parallel"),
                            g);
  const std::uint64_t bound = family == SchemeFamily::Sequential ? 1 : 2;
  std::vector<UpdateScheme> schemes;
  if (family == SchemeFamily::Parallel) {
    schemes.push_back(UpdateScheme::parallel());
  } else {
    for (auto& order : update_orders(g.order(), options)) {
      schemes.push_back(UpdateScheme::sequential(std::move(order)));
    }
  }
  std::uint64_t observed = 0;
  for (const auto& scheme : schemes) {
    const auto ps = build_phase_space(g, {rule, scheme}, build_options(options));
    const auto detail = classify_states(ps);
    const auto longest = detail.summary.max_cycle_length();
    observed = std::max(observed, longest);
    if (longest > bound && result.passed) {
      result.passed = false;
      const auto it = std::find(detail.cycle_length_of.begin(), detail.cycle_length_of.end(),
                                static_cast<std::uint32_t>(longest));
      const auto index = static_cast<std::uint64_t>(it - detail.cycle_length_of.begin());
      result.counterexample = scheme.describe() + " " + format_state(ps.codec().decode(index)) +
                              " lies on a cycle of length " + std::to_string(longest);
    }
  }
  result.detail = "max cycle length " + std::to_string(observed) + " (bound " +
                  std::to_string(bound) + ") over " + std::to_string(schemes.size()) + " scheme(s)";
  return result;
}

CheckResult verify_conjugacy(const Graph& g, const UpdateScheme& scheme, const VerifyOptions& options) {
  auto result = make_result("conjugacy/" + scheme.describe(), g);
  const auto up = build_phase_space(g, {Rule::Increasing, scheme}, build_options(options));
  const auto down = build_phase_space(g, {Rule::Decreasing, scheme}, build_options(options));
  const auto& codec = up.codec();
  const auto map = psi_index_map(g, codec);
  for (std::uint64_t i = 0; i < codec.size(); ++i) {
    if (map[map[i]] != i) {
      result.passed = false;
      result.counterexample = "psi(psi(s)) != s for s = " + format_state(codec.decode(i));
      break;
    }
    if (map[up.successor(i)] != down.successor(map[i])) {
      result.passed = false;
      result.counterexample = "psi(F_up(s)) != F_down(psi(s)) for s = " + format_state(codec.decode(i));
      break;
    }
  }
  result.detail = std::to_string(codec.size()) + " states checked";
  return result;
}

CheckResult verify_potential_descent(const Graph& g, const VerifyOptions& options) {
  auto result = make_result("potential", g);
  const auto size = state_space_size(g);
  if (size > options.cap) throw CapExceeded(size, options.cap);
  const StateCodec codec(g);
  std::optional<std::uint64_t> min_drop;
  std::uint64_t flips = 0;
  for (std::uint64_t i = 0; i < codec.size() && result.passed; ++i) {
    const auto s = codec.decode(i);
    const auto before = potential(g, s);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto next = local_update(g, Rule::Mixed, s, v);
      if (next[v].x == s[v].x) continue;
      ++flips;
      const auto after = potential(g, next);
      if (after + 1 > before) {
        result.passed = false;
        result.counterexample = "updating vertex " + std::to_string(v) + " of " + format_state(s) +
                                " moves P from " + std::to_string(before) + " to " +
                                std::to_string(after);
        break;
      }
      const auto drop = before - after;
      min_drop = min_drop ? std::min(*min_drop, drop) : drop;
    }
  }
  result.detail = std::to_string(flips) + " flipping updates, minimum drop " +
                  (min_drop ? std::to_string(*min_drop) : std::string("n/a"));
  return result;
}

CheckResult verify_fixed_sets(const Graph& g, const VerifyOptions& options) {
  auto result = make_result("fixsets", g);
  const auto expected = fixed_point_indices(g, options.cap);
  std::vector<UpdateScheme> schemes{UpdateScheme::parallel()};
  for (auto& order : update_orders(g.order(), options)) {
    schemes.push_back(UpdateScheme::sequential(std::move(order)));
  }
  std::size_t maps = 0;
  for (Rule rule : {Rule::Increasing, Rule::Decreasing, Rule::Mixed}) {
    for (const auto& scheme : schemes) {
      const auto ps = build_phase_space(g, {rule, scheme}, build_options(options));
      std::vector<std::uint64_t> fixed;
      for (std::uint64_t i = 0; i < ps.size(); ++i) {
        if (ps.successor(i) == i) fixed.push_back(i);
      }
      ++maps;
      if (fixed != expected && result.passed) {
        result.passed = false;
        std::vector<std::uint64_t> diff;
        std::set_symmetric_difference(fixed.begin(), fixed.end(), expected.begin(), expected.end(),
                                      std::back_inserter(diff));
        result.counterexample = std::string(to_string(rule)) + " " + scheme.describe() +
                                " disagrees with the predicate at " +
                                format_state(ps.codec().decode(diff.front()));
      }
    }
  }
  result.detail = std::to_string(expected.size()) + " fixed points, " + std::to_string(maps) +
                  " maps compared";
  return result;
}

CheckResult verify_half_ones(const Graph& g, const VerifyOptions& options) {
  auto result = make_result("half-ones", g);
  const auto census = fixed_point_census(g, options.cap);
  if (census.total % 2 != 0) {
    result.passed = false;
    result.counterexample = "fixed-point count " + to_decimal(census.total) + " is odd";
  }
  for (Vertex v = 0; v < g.order() && result.passed; ++v) {
    if (2 * census.ones_at[v] != census.total) {
      result.passed = false;
      result.counterexample = "vertex " + std::to_string(v) + " is 1 in " +
                              to_decimal(census.ones_at[v]) + " of " + to_decimal(census.total);
    }
  }
  if (result.passed) {
    const StateCodec codec(g);
    for (auto i : fixed_point_indices(g, options.cap)) {
      const auto image = psi(g, codec.decode(i));
      if (!is_fixed_point(g, image)) {
        result.passed = false;
        result.counterexample = "psi maps fixed point " + format_state(codec.decode(i)) +
                                " outside Fix";
        break;
      }
    }
  }
  result.detail = to_decimal(census.total) + " fixed points, " + to_decimal(census.total / 2) +
                  " fixed points have x_v = 1 at each vertex";
  return result;
}

CheckResult verify_unidirectional(const Graph& g, const VerifyOptions& options) {
  auto result = make_result("unidirectional", g);
  const auto orders = update_orders(g.order(), options);
  std::uint64_t directed = 0;
  for (Rule rule : {Rule::Increasing, Rule::Decreasing, Rule::Mixed}) {
    for (const auto& order : orders) {
      const auto ps = build_phase_space(g, {rule, UpdateScheme::sequential(order)},
                                        build_options(options));
      const auto& codec = ps.codec();
      std::vector<Direction> dir(ps.size());
      for (std::uint64_t i = 0; i < ps.size(); ++i) {
        dir[i] = classify_transition(codec.decode(i), codec.decode(ps.successor(i)));
      }
      // One step suffices: an identity transition means a fixed point, and an
      // agreeing step hands the same obligation to the next state.
      for (std::uint64_t i = 0; i < ps.size(); ++i) {
        if (dir[i] != Direction::Up && dir[i] != Direction::Down) continue;
        ++directed;
        const auto next = dir[ps.successor(i)];
        if (next != dir[i] && next != Direction::Identity) {
          result.passed = false;
          result.counterexample = std::string(to_string(rule)) + " " + order_text(order) + " " +
                                  format_state(codec.decode(i)) + " steps " +
                                  std::string(to_string(dir[i])) + " then " +
                                  std::string(to_string(next));
          break;
        }
      }
      if (!result.passed) break;
    }
    if (!result.passed) break;
  }
  result.detail = std::to_string(directed) + " unidirectional transitions over " +
                  std::to_string(orders.size()) + " order(s) x 3 rules";
  return result;
}

CheckResult verify_weighted_agreement(const Graph& g, const VerifyOptions& options) {
  auto result = make_result("weighted-agreement", g);
  const auto size = state_space_size(g);
  if (size > options.cap) throw CapExceeded(size, options.cap);
  const StateCodec codec(g);
  const auto weights = SymmetricWeights::closed_neighborhood_indicator(g);
  for (std::uint64_t i = 0; i < codec.size(); ++i) {
    const auto s = codec.decode(i);
    WeightedState ws;
    for (const auto& vs : s) {
      ws.x.push_back(vs.x);
      ws.k.push_back(vs.k);
    }
    const auto expected = gca_step(g, Rule::Mixed, s);
    const auto got = weighted_mixed_gca_step(ws, weights);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (got.x[v] != expected[v].x || got.k[v] != static_cast<std::int64_t>(expected[v].k)) {
        result.passed = false;
        result.counterexample = "state " + format_state(s) + " differs at vertex " + std::to_string(v);
        break;
      }
    }
    if (!result.passed) break;
  }
  result.detail = std::to_string(codec.size()) + " states compared";
  return result;
}

CheckResult verify_weighted_period(const WeightedCheckOptions& options) {
  CheckResult result;
  result.check = "weighted-period";
  result.subject = std::to_string(options.matrices) + " random symmetric matrices, n <= " +
                   std::to_string(options.max_n) + ", seed " + std::to_string(options.seed);
  std::mt19937_64 engine(options.seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::size_t longest = 0;
  std::uint64_t orbits = 0;
  for (std::size_t m = 0; m < options.matrices && result.passed; ++m) {
    const auto n = static_cast<std::size_t>(draw(1, static_cast<std::int64_t>(options.max_n)));
    std::vector<double> a(n * n);
    std::int64_t reach = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const auto w = draw(-options.weight_bound, options.weight_bound);
        a[i * n + j] = a[j * n + i] = static_cast<double>(w);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t row = 0;
      for (std::size_t j = 0; j < n; ++j) row += std::abs(static_cast<std::int64_t>(a[i * n + j]));
      reach = std::max(reach, row);
    }
    const SymmetricWeights weights(n, a);
    for (std::size_t t = 0; t < options.thresholds_per_matrix && result.passed; ++t) {
      std::vector<std::int64_t> k(n);
      for (auto& ki : k) ki = draw(-reach - 1, reach + 1);
      for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        WeightedState start;
        start.k = k;
        for (std::size_t i = 0; i < n; ++i) start.x.push_back(static_cast<std::uint8_t>((bits >> i) & 1));
        const auto o = orbit<WeightedState, WeightedStateHash>(
            start, [&](const WeightedState& s) { return weighted_mixed_gca_step(s, weights); },
            options.orbit_cap);
        ++orbits;
        longest = std::max(longest, o.cycle.size());
        if (o.cycle.size() > 2) {
          result.passed = false;
          result.counterexample = "matrix " + std::to_string(m) + " has a cycle of length " +
                                  std::to_string(o.cycle.size());
          break;
        }
      }
    }
  }
  result.detail = std::to_string(orbits) + " orbits, longest cycle " + std::to_string(longest);
  return result;
}

}  // namespace etgds
