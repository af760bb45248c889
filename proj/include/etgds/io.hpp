#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "etgds/graph.hpp"
#include "etgds/phase_space.hpp"

namespace etgds {

/// "n m" then m lines "u v", 0-based. Throws std::invalid_argument on bad input.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// {"n": int, "edges": [[u, v], ...]}.
Graph parse_graph_json(std::string_view text);
std::string format_graph_json(const Graph& g);

/// JSON if the first non-blank character is '{', edge list otherwise.
Graph read_graph_file(const std::string& path);

/**
 * Graph source spec: "path:n", "cycle:n", "star:n", "random-tree:n:seed",
 * "file:PATH" or "tree-file:PATH" (the latter must hold a tree).
 */
Graph graph_from_spec(std::string_view spec);

/// One node per state (by index, labeled with the state literal), one edge per transition.
void write_phase_space_dot(std::ostream& out, const PhaseSpace& ps);
/// {"graph", "rule", "scheme", "successors", "summary"}.
void write_phase_space_json(std::ostream& out, const PhaseSpace& ps, const AttractorSummary& summary);

}  // namespace etgds
