#include <vector>

#include "doctest.h"
#include "etgds/dynamics.hpp"
#include "etgds/fixed_points.hpp"
#include "etgds/kernels.hpp"
#include "etgds/verify.hpp"
#include "support.hpp"

using namespace etgds;
namespace k = etgds::kernels;

namespace {

std::vector<Graph> kernel_graphs() {
  auto out = support::small_graphs();
  out.push_back(cycle_graph(5));
  out.push_back(star_graph(6));      // degree 6 at the center
  out.push_back(spider_graph(3, 2));
  out.push_back(random_tree(7, 3));
  return out;
}

// Successors from the reference engine, index by index.
std::vector<std::uint32_t> engine_successors(const Graph& g, Rule rule, const std::vector<Vertex>& order) {
  const StateCodec codec(g);
  std::vector<std::uint32_t> out(codec.size());
  for (std::uint64_t i = 0; i < codec.size(); ++i) {
    const auto s = codec.decode(i);
    out[i] = static_cast<std::uint32_t>(codec.encode(order.empty() ? gca_step(g, rule, s) : sds_step(g, rule, order, s)));
  }
  return out;
}

std::vector<std::uint32_t> kernel_successors(const k::KernelSet& ks, const Graph& g, Rule rule,
                                             const std::vector<Vertex>& order, std::size_t lanes) {
  const auto topo = k::Topology::build(g);
  std::vector<std::uint32_t> out(topo.size);
  k::StateBlock in, next;
  in.reshape(topo.n, lanes);
  next.reshape(topo.n, lanes);
  for (std::uint64_t first = 0; first < topo.size; first += lanes) {
    const auto count = static_cast<std::size_t>(std::min<std::uint64_t>(lanes, topo.size - first));
    k::decode_block(topo, first, count, in);
    ks.step(topo, rule, order, in, next, out.data() + first);
  }
  return out;
}

std::vector<const k::KernelSet*> all_kernel_sets() {
  std::vector<const k::KernelSet*> sets{&k::scalar_kernels()};
#if defined(ETGDS_HAVE_AVX2_KERNEL)
  if (k::isa_available(k::Isa::Avx2)) sets.push_back(&k::avx2_kernels());
#endif
  return sets;
}

}  // namespace

TEST_CASE("decode_block matches the codec and pads with (0,1)") {
  const auto g = star_graph(3);
  const auto topo = k::Topology::build(g);
  const StateCodec codec(g);
  CHECK(topo.size == codec.size());
  k::StateBlock block;
  block.reshape(topo.n, 64);
  CHECK(block.lanes == 64);
  k::decode_block(topo, 100, 40, block);
  CHECK(block.active == 40);
  for (std::size_t j = 0; j < 64; ++j) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (j < 40) {
        const auto s = codec.decode(100 + j);
        CHECK(block.x[v * block.lanes + j] == s[v].x);
        CHECK(block.k[v * block.lanes + j] == s[v].k);
      } else {
        CHECK(block.x[v * block.lanes + j] == 0);
        CHECK(block.k[v * block.lanes + j] == 1);
      }
    }
  }
}

TEST_CASE("topology limits") {
  CHECK_THROWS_AS(k::Topology::build(star_graph(127)), std::length_error);
  CHECK_THROWS_AS(k::Topology::build(path_graph(14)), std::length_error);  // 16 * 6^12 states
  CHECK_NOTHROW(k::Topology::build(path_graph(7)));
}

TEST_CASE("every kernel set reproduces the engine on every state") {
  const auto sets = all_kernel_sets();
  MESSAGE("kernel sets under test: " << sets.size() << ", active: " << k::active_kernels().name);
  for (const auto& g : kernel_graphs()) {
    CAPTURE(describe_graph(g));
    std::vector<std::vector<Vertex>> orders{{}};
    std::vector<Vertex> identity(g.order());
    for (Vertex v = 0; v < g.order(); ++v) identity[v] = v;
    orders.push_back(identity);
    orders.emplace_back(identity.rbegin(), identity.rend());
    for (Rule rule : support::kAllRules) {
      for (const auto& order : orders) {
        const auto expected = engine_successors(g, rule, order);
        for (const auto* ks : sets) {
          CAPTURE(ks->name);
          // 32 exercises single-register blocks; 96 leaves ragged tails.
          for (std::size_t lanes : {32, 96, 256}) {
            REQUIRE(kernel_successors(*ks, g, rule, order, lanes) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("fixed-point counting kernels agree with the predicate") {
  for (const auto& g : kernel_graphs()) {
    CAPTURE(describe_graph(g));
    const auto expected = fixed_point_indices(g).size();
    for (const auto* ks : all_kernel_sets()) {
      const auto topo = k::Topology::build(g);
      k::StateBlock block;
      block.reshape(topo.n, 96);
      std::uint64_t count = 0;
      for (std::uint64_t first = 0; first < topo.size; first += 96) {
        const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(96, topo.size - first));
        k::decode_block(topo, first, n, block);
        count += ks->count_fixed(topo, block);
      }
      CHECK(count == expected);
    }
  }
}

TEST_CASE("dispatch") {
  CHECK(k::isa_available(k::Isa::Scalar));
  CHECK(k::kernels_for(k::Isa::Scalar).name == k::scalar_kernels().name);
  CHECK(k::to_string(k::Isa::Scalar) == "scalar");
  if (!k::isa_available(k::Isa::Avx2)) CHECK_THROWS(k::kernels_for(k::Isa::Avx2));
}
