#pragma once

#include <vector>

#include "etgds/codec.hpp"
#include "etgds/graph.hpp"
#include "etgds/state.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::State to_oracle(const etgds::ExtendedState& s) {
  oracle::State out;
  for (const auto& v : s) out.emplace_back(v.x, static_cast<int>(v.k));
  return out;
}

inline etgds::ExtendedState from_oracle(const oracle::State& s) {
  etgds::ExtendedState out;
  for (const auto& [x, k] : s) out.push_back({static_cast<std::uint8_t>(x), static_cast<std::uint32_t>(k)});
  return out;
}

inline oracle::Rule to_oracle(etgds::Rule r) {
  switch (r) {
    case etgds::Rule::Static: return oracle::Rule::Static;
    case etgds::Rule::Increasing: return oracle::Rule::Increasing;
    case etgds::Rule::Decreasing: return oracle::Rule::Decreasing;
    case etgds::Rule::Mixed: return oracle::Rule::Mixed;
  }
  return oracle::Rule::Static;
}

inline std::vector<int> to_oracle(const std::vector<etgds::Vertex>& order) {
  return {order.begin(), order.end()};
}

inline constexpr etgds::Rule kAllRules[] = {etgds::Rule::Static, etgds::Rule::Increasing,
                                            etgds::Rule::Decreasing, etgds::Rule::Mixed};

/// Small graphs used across suites: every connected graph up to 3 vertices,
/// plus a few of order 4 and 5.
inline std::vector<etgds::Graph> small_graphs() {
  using namespace etgds;
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
  }
  out.push_back(path_graph(4));
  out.push_back(cycle_graph(4));
  out.push_back(star_graph(3));
  out.push_back(complete_graph(4));
  const Edge paw[] = {{0, 1}, {1, 2}, {2, 0}, {2, 3}};
  out.push_back(Graph::from_edge_list(4, paw));
  out.push_back(path_graph(5));
  return out;
}

}  // namespace support
