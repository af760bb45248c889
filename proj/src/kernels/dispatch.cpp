#include <cstdlib>
#include <stdexcept>
#include <string>

#include "etgds/kernels.hpp"

namespace etgds::kernels {

Topology Topology::build(const Graph& g) {
  Topology t;
  t.n = static_cast<std::uint32_t>(g.order());
  t.offsets.reserve(t.n + 1);
  t.offsets.push_back(0);
  for (Vertex v = 0; v < t.n; ++v) {
    const auto d = g.degree(v);
    if (d > kMaxKernelDegree) {
      throw std::length_error("vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                              ", above the kernel limit of " + std::to_string(kMaxKernelDegree));
    }
    for (Vertex u : g.neighbors(v)) t.neighbors.push_back(u);
    t.offsets.push_back(static_cast<std::uint32_t>(t.neighbors.size()));
    t.degree.push_back(static_cast<std::uint8_t>(d));
    const auto r = static_cast<std::uint32_t>(2 * (d + 1));
    t.radix.push_back(r);
    t.place.push_back(static_cast<std::uint32_t>(t.size));
    t.size *= r;
    if (t.size > 0xFFFFFFFFull) {
      throw std::length_error("state space exceeds 32-bit indexing");
    }
  }
  return t;
}

void StateBlock::reshape(std::size_t n, std::size_t lane_capacity) {
  lanes = (lane_capacity + kLaneWidth - 1) / kLaneWidth * kLaneWidth;
  x.assign(n * lanes, 0);
  k.assign(n * lanes, 1);
  active = 0;
}

void decode_block(const Topology& topo, std::uint64_t first, std::size_t count, StateBlock& block) {
  if (block.lanes < count || block.x.size() != topo.n * block.lanes) {
    block.reshape(topo.n, count);
  }
  block.active = count;
  const auto lanes = block.lanes;
  // Decode the first index, then walk an odometer across the lanes.
  std::vector<std::uint32_t> digit(topo.n);
  auto rest = first;
  for (std::uint32_t v = 0; v < topo.n; ++v) {
    digit[v] = static_cast<std::uint32_t>(rest % topo.radix[v]);
    rest /= topo.radix[v];
  }
  for (std::size_t j = 0; j < lanes; ++j) {
    if (j < count) {
      for (std::uint32_t v = 0; v < topo.n; ++v) {
        block.x[v * lanes + j] = static_cast<std::uint8_t>(digit[v] & 1u);
        block.k[v * lanes + j] = static_cast<std::uint8_t>(digit[v] / 2 + 1);
      }
      for (std::uint32_t v = 0; v < topo.n; ++v) {
        if (++digit[v] < topo.radix[v]) break;
        digit[v] = 0;
      }
    } else {
      for (std::uint32_t v = 0; v < topo.n; ++v) {
        block.x[v * lanes + j] = 0;
        block.k[v * lanes + j] = 1;
      }
    }
  }
}

std::string_view to_string(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(ETGDS_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelSet& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::runtime_error(std::string("kernel ISA not available: ") + std::string(to_string(isa)));
  }
#if defined(ETGDS_HAVE_AVX2_KERNEL)
  if (isa == Isa::Avx2) return avx2_kernels();
#endif
  return scalar_kernels();
}

Isa best_isa() {
  if (const char* forced = std::getenv("ETGDS_ISA"); forced && std::string(forced) == "scalar") {
    return Isa::Scalar;
  }
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

const KernelSet& active_kernels() {
  static const KernelSet& chosen = kernels_for(best_isa());
  return chosen;
}

}  // namespace etgds::kernels
