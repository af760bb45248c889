#include <set>

#include "doctest.h"
#include "etgds/graph.hpp"
#include "etgds/io.hpp"

using namespace etgds;

TEST_CASE("edge list construction normalizes and validates") {
  const Edge edges[] = {{2, 1}, {0, 1}, {1, 2}};
  const auto g = Graph::from_edge_list(3, edges);
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.degree(1) == 2);
  CHECK(g.closed_neighborhood(1) == std::vector<Vertex>{0, 1, 2});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.is_connected());
  CHECK(g.is_tree());

  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph::from_edge_list(2, loop), std::invalid_argument);
  const Edge outside[] = {{0, 5}};
  CHECK_THROWS_AS(Graph::from_edge_list(3, outside), std::invalid_argument);
  CHECK_THROWS_AS(g.neighbors(3), std::out_of_range);
}

TEST_CASE("generators") {
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(path_graph(5).is_tree());
  const auto c = cycle_graph(5);
  CHECK(c.edge_count() == 5);
  CHECK_FALSE(c.is_tree());
  CHECK(c.has_edge(0, 4));
  CHECK_THROWS(cycle_graph(2));

  const auto s = star_graph(4);
  CHECK(s.order() == 5);
  CHECK(s.degree(0) == 4);
  CHECK(s.is_tree());

  const auto sp = spider_graph(3, 2);
  CHECK(sp.order() == 7);
  CHECK(sp.degree(0) == 3);
  CHECK(sp.is_tree());

  CHECK(complete_graph(4).edge_count() == 6);

  const Edge split[] = {{0, 1}, {2, 3}};
  CHECK_FALSE(Graph::from_edge_list(4, split).is_connected());
}

TEST_CASE("connected labeled graph enumeration matches known counts") {
  // Connected labeled graphs on n vertices: 1, 1, 4, 38, 728.
  const std::size_t expected[] = {1, 1, 4, 38, 728};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto graphs = enumerate_connected_graphs(n);
    CHECK(graphs.size() == expected[n - 1]);
    std::set<std::vector<Edge>> distinct;
    for (const auto& g : graphs) {
      CHECK(g.is_connected());
      distinct.insert(g.edges());
    }
    CHECK(distinct.size() == graphs.size());
  }
}

TEST_CASE("random trees are trees and reproducible") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (std::size_t n : {1, 2, 3, 8, 30}) {
      const auto t = random_tree(n, seed);
      CHECK(t.order() == n);
      CHECK(t.is_tree());
      CHECK(t == random_tree(n, seed));
    }
  }
  CHECK(random_tree(12, 1) != random_tree(12, 2));
}

TEST_CASE("edge list and JSON round trip") {
  const auto g = spider_graph(3, 2);
  CHECK(parse_edge_list(format_edge_list(g)) == g);
  CHECK(parse_graph_json(format_graph_json(g)) == g);
  CHECK(format_edge_list(path_graph(3)) == "3 2\n0 1\n1 2\n");
  CHECK(format_graph_json(path_graph(3)) == R"({"edges":[[0,1],[1,2]],"n":3})");

  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_json("{"), std::invalid_argument);
}

TEST_CASE("graph specs") {
  CHECK(graph_from_spec("path:4") == path_graph(4));
  CHECK(graph_from_spec("cycle:5") == cycle_graph(5));
  CHECK(graph_from_spec("star:3") == star_graph(3));
  CHECK(graph_from_spec("random-tree:9:4") == random_tree(9, 4));
  CHECK_THROWS_AS(graph_from_spec("path"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("path:x"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("wheel:5"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("random-tree:5"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_spec("file:/nonexistent/graph.txt"), std::invalid_argument);
}
