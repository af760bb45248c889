#include "etgds/kernels.hpp"

namespace etgds::kernels {
namespace {

void step_scalar(const Topology& topo, Rule rule, std::span<const Vertex> order,
                 const StateBlock& in, StateBlock& out, std::uint32_t* successors) {
  const auto lanes = in.lanes;
  if (out.lanes != lanes || out.x.size() != in.x.size()) out.reshape(topo.n, lanes);
  out.active = in.active;
  out.x = in.x;
  out.k = in.k;
  const bool raise = rule == Rule::Increasing || rule == Rule::Mixed;
  const bool lower = rule == Rule::Decreasing || rule == Rule::Mixed;

  // Parallel reads every neighborhood from `in`; sequential reads the
  // partially updated `out`.
  const bool parallel = order.empty();
  const auto& src_x = parallel ? in.x : out.x;
  auto update_vertex = [&](std::uint32_t v) {
    const auto* nb = topo.neighbors.data() + topo.offsets[v];
    const auto nd = topo.offsets[v + 1] - topo.offsets[v];
    for (std::size_t j = 0; j < lanes; ++j) {
      const std::uint8_t x = src_x[v * lanes + j];
      const std::uint8_t k = out.k[v * lanes + j];
      unsigned sig = x;
      for (std::uint32_t i = 0; i < nd; ++i) sig += src_x[nb[i] * lanes + j];
      const bool on = sig >= k;
      std::uint8_t nk = k;
      if (raise && x == 0 && on) ++nk;
      if (lower && x == 1 && !on) --nk;
      out.x[v * lanes + j] = on ? 1 : 0;
      out.k[v * lanes + j] = nk;
    }
  };
  if (parallel) {
    for (std::uint32_t v = 0; v < topo.n; ++v) update_vertex(v);
  } else {
    for (Vertex v : order) update_vertex(v);
  }

  for (std::size_t j = 0; j < in.active; ++j) {
    std::uint32_t index = 0;
    for (std::uint32_t v = 0; v < topo.n; ++v) {
      const std::uint32_t digit = out.x[v * lanes + j] + 2u * (out.k[v * lanes + j] - 1u);
      index += digit * topo.place[v];
    }
    successors[j] = index;
  }
}

std::size_t count_fixed_scalar(const Topology& topo, const StateBlock& in) {
  const auto lanes = in.lanes;
  std::size_t count = 0;
  for (std::size_t j = 0; j < in.active; ++j) {
    bool fixed = true;
    for (std::uint32_t v = 0; v < topo.n && fixed; ++v) {
      const std::uint8_t x = in.x[v * lanes + j];
      unsigned sig = x;
      for (auto i = topo.offsets[v]; i < topo.offsets[v + 1]; ++i) {
        sig += in.x[topo.neighbors[i] * lanes + j];
      }
      fixed = (x == 1) == (sig >= in.k[v * lanes + j]);
    }
    count += fixed;
  }
  return count;
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", &step_scalar, &count_fixed_scalar};
  return set;
}

}  // namespace etgds::kernels
