#include "etgds/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace etgds {
namespace {

using nlohmann::json;

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw std::invalid_argument("edge list must start with 'n m'");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v) || u < 0 || v < 0) {
      throw std::invalid_argument("edge list line " + std::to_string(i + 2) + " is not 'u v'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing data after " + std::to_string(m) + " edges");
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_unsigned() ||
      !j["edges"].is_array()) {
    throw std::invalid_argument(R"(graph JSON must look like {"n": 3, "edges": [[0,1],[1,2]]})");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw std::invalid_argument("graph JSON edge " + e.dump() + " is not [u, v]");
    }
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph::from_edge_list(j["n"].get<std::size_t>(), edges);
}

std::string format_graph_json(const Graph& g) { return graph_to_json(g).dump(); }

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

Graph graph_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("graph spec '" + std::string(spec) + "' has no ':'");
  }
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (kind == "file") return read_graph_file(std::string(rest));
  if (kind == "tree-file") {
    auto g = read_graph_file(std::string(rest));
    if (!g.is_tree()) throw std::invalid_argument("'" + std::string(rest) + "' is not a tree");
    return g;
  }
  const auto parts = split(rest, ':');
  if (kind == "random-tree") {
    if (parts.size() != 2) throw std::invalid_argument("expected random-tree:n:seed");
    return random_tree(parse_count(parts[0], "vertex count"), parse_count(parts[1], "seed"));
  }
  if (parts.size() != 1) throw std::invalid_argument("expected " + std::string(kind) + ":n");
  const auto n = parse_count(parts[0], "vertex count");
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "star") return star_graph(n);
  throw std::invalid_argument("unknown graph kind '" + std::string(kind) + "'");
}

void write_phase_space_dot(std::ostream& out, const PhaseSpace& ps) {
  const auto& codec = ps.codec();
  out << "digraph phase_space {\n";
  for (std::uint64_t i = 0; i < ps.size(); ++i) {
    out << "  " << i << " [label=\"" << format_state(codec.decode(i)) << "\"];\n";
  }
  for (std::uint64_t i = 0; i < ps.size(); ++i) {
    out << "  " << i << " -> " << ps.successor(i) << ";\n";
  }
  out << "}\n";
}

void write_phase_space_json(std::ostream& out, const PhaseSpace& ps, const AttractorSummary& summary) {
  json cycles = json::object();
  for (const auto& [length, count] : summary.cycle_lengths) cycles[std::to_string(length)] = count;
  const json doc = {
      {"graph", graph_to_json(ps.graph())},
      {"rule", std::string(to_string(ps.rule_scheme().rule))},
      {"scheme", ps.rule_scheme().scheme.describe()},
      {"successors", ps.successors()},
      {"summary",
       {{"states", ps.size()},
        {"fixed", summary.fixed_points},
        {"periodic", summary.periodic_states},
        {"transient", summary.transient_states},
        {"cycles", cycles}}},
  };
  out << doc.dump() << "\n";
}

}  // namespace etgds
