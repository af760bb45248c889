#include "etgds/phase_space.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace etgds {

CapExceeded::CapExceeded(const BigCount& size, std::uint64_t cap)
    : std::runtime_error("state space has " + to_decimal(size) + " states, above the cap of " +
                         std::to_string(cap)),
      size_(size),
      cap_(cap) {}

PhaseSpace::PhaseSpace(Graph graph, RuleScheme rule_scheme, std::vector<std::uint32_t> successor)
    : graph_(std::move(graph)),
      rule_scheme_(std::move(rule_scheme)),
      codec_(graph_),
      successor_(std::move(successor)) {
  if (successor_.size() != codec_.size()) {
    throw std::invalid_argument("successor array does not cover the state space");
  }
}

namespace {

void sweep_range(const kernels::KernelSet& ks, const kernels::Topology& topo, Rule rule,
                 std::span<const Vertex> order, std::uint64_t begin, std::uint64_t end,
                 std::uint32_t* successors) {
  kernels::StateBlock in;
  kernels::StateBlock out;
  in.reshape(topo.n, kernels::kBlockLanes);
  out.reshape(topo.n, kernels::kBlockLanes);
  for (auto first = begin; first < end; first += kernels::kBlockLanes) {
    const auto count = static_cast<std::size_t>(std::min<std::uint64_t>(kernels::kBlockLanes, end - first));
    kernels::decode_block(topo, first, count, in);
    ks.step(topo, rule, order, in, out, successors + first);
  }
}

}  // namespace

PhaseSpace build_phase_space(const Graph& g, const RuleScheme& rs, const BuildOptions& options) {
  const auto size = state_space_size(g);
  if (size > options.cap) throw CapExceeded(size, options.cap);
  if (!rs.scheme.is_parallel() && !is_permutation_of_vertices(rs.scheme.order(), g.order())) {
    throw std::invalid_argument("update order is not a permutation of the graph's vertices");
  }
  const auto topo = kernels::Topology::build(g);
  const auto& ks = kernels::kernels_for(options.isa.value_or(kernels::best_isa()));
  std::span<const Vertex> order;
  if (!rs.scheme.is_parallel()) order = rs.scheme.order();

  std::vector<std::uint32_t> successor(topo.size);
  const auto workers = std::max<std::size_t>(1, options.workers);
  if (workers == 1 || topo.size < 2 * kernels::kBlockLanes) {
    sweep_range(ks, topo, rs.rule, order, 0, topo.size, successor.data());
  } else {
    // Chunk boundaries are block-aligned; each worker writes a disjoint slice.
    const std::uint64_t blocks = (topo.size + kernels::kBlockLanes - 1) / kernels::kBlockLanes;
    const std::uint64_t per = (blocks + workers - 1) / workers;
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const auto begin = std::min<std::uint64_t>(topo.size, w * per * kernels::kBlockLanes);
      const auto end = std::min<std::uint64_t>(topo.size, (w + 1) * per * kernels::kBlockLanes);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        sweep_range(ks, topo, rs.rule, order, begin, end, successor.data());
      });
    }
  }
  return PhaseSpace(g, rs, std::move(successor));
}

AttractorDetail classify_states(const PhaseSpace& ps) {
  const auto n = ps.size();
  AttractorDetail out;
  out.cycle_length_of.assign(n, 0);
  // 0 = unvisited, 1 = on the current walk, 2 = resolved.
  std::vector<std::uint8_t> color(n, 0);
  std::vector<std::uint32_t> walk;
  for (std::uint64_t start = 0; start < n; ++start) {
    if (color[start]) continue;
    walk.clear();
    auto cur = static_cast<std::uint32_t>(start);
    while (color[cur] == 0) {
      color[cur] = 1;
      walk.push_back(cur);
      cur = ps.successor(cur);
    }
    if (color[cur] == 1) {
      // Closed a new cycle at `cur`.
      std::uint32_t length = 1;
      for (auto s = ps.successor(cur); s != cur; s = ps.successor(s)) ++length;
      auto s = cur;
      do {
        out.cycle_length_of[s] = length;
        s = ps.successor(s);
      } while (s != cur);
      ++out.summary.cycle_lengths[length];
      out.summary.periodic_states += length;
      if (length == 1) ++out.summary.fixed_points;
    }
    for (auto w : walk) color[w] = 2;
  }
  out.summary.transient_states = n - out.summary.periodic_states;
  return out;
}

AttractorSummary attractors(const PhaseSpace& ps) { return classify_states(ps).summary; }

}  // namespace etgds
