#include <algorithm>
#include <set>

#include "doctest.h"
#include "etgds/verify.hpp"
#include "support.hpp"

using namespace etgds;

TEST_CASE("update orders") {
  CHECK(update_orders(0).size() == 1);
  CHECK(update_orders(4).size() == 24);
  CHECK(update_orders(5).size() == 120);
  const auto sampled = update_orders(7);
  CHECK(sampled.size() == kSampledPermutations);
  for (const auto& o : sampled) CHECK(is_permutation_of_vertices(o, 7));
  CHECK(sampled == update_orders(7));
  VerifyOptions other;
  other.permutation_seed = 9;
  CHECK(sampled != update_orders(7, other));
  const std::set<std::vector<Vertex>> distinct(sampled.begin(), sampled.end());
  CHECK(distinct.size() > 100);
}

TEST_CASE("describe_graph") {
  CHECK(describe_graph(path_graph(3)) == "n=3 edges=0-1,1-2");
  CHECK(describe_graph(path_graph(1)) == "n=1 edges=none");
}

TEST_CASE("structural checks pass on the small-graph corpus") {
  for (const auto& g : support::small_graphs()) {
    CAPTURE(describe_graph(g));
    for (Rule rule : support::kAllRules) {
      CHECK(verify_limit_cycles(g, rule, SchemeFamily::Sequential).passed);
      CHECK(verify_limit_cycles(g, rule, SchemeFamily::Parallel).passed);
    }
    CHECK(verify_conjugacy(g, UpdateScheme::parallel()).passed);
    CHECK(verify_conjugacy(g, UpdateScheme::sequential_identity(g.order())).passed);
    CHECK(verify_potential_descent(g).passed);
    CHECK(verify_fixed_sets(g).passed);
    CHECK(verify_half_ones(g).passed);
    CHECK(verify_unidirectional(g).passed);
  }
}

TEST_CASE("the parallel bound is attained on C4") {
  const auto ps = build_phase_space(cycle_graph(4), {Rule::Mixed, UpdateScheme::parallel()});
  CHECK(attractors(ps).max_cycle_length() == 2);
  const auto r = verify_limit_cycles(cycle_graph(4), Rule::Mixed, SchemeFamily::Parallel);
  CHECK(r.passed);
  CHECK(r.detail.find("max cycle length 2") != std::string::npos);
}

TEST_CASE("half-ones on P3") {
  const auto r = verify_half_ones(path_graph(3));
  CHECK(r.passed);
  CHECK(r.detail.find("42 fixed points, 21") == 0);
}

TEST_CASE("weighted period check") {
  const auto r = verify_weighted_period();
  CHECK(r.passed);
  CHECK_FALSE(r.counterexample.has_value());
  WeightedCheckOptions other;
  other.seed = 3;
  other.matrices = 20;
  CHECK(verify_weighted_period(other).passed);
}

TEST_CASE("caps propagate") {
  VerifyOptions tight;
  tight.cap = 10;
  CHECK_THROWS_AS(verify_potential_descent(path_graph(3), tight), CapExceeded);
  CHECK_THROWS_AS(verify_conjugacy(path_graph(3), UpdateScheme::parallel(), tight), CapExceeded);
}
