// Built with -mavx2; only reached through the runtime dispatch table.

#include <immintrin.h>

#include <algorithm>
#include <cstring>

#include "etgds/kernels.hpp"

namespace etgds::kernels {
namespace {

inline __m256i load(const std::uint8_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint8_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Unsigned a >= b on bytes.
inline __m256i ge_epu8(__m256i a, __m256i b) {
  return _mm256_cmpeq_epi8(_mm256_max_epu8(a, b), a);
}

inline __m256i neighborhood_sum(const Topology& topo, const std::uint8_t* x, std::size_t lanes,
                                std::uint32_t v, std::size_t j) {
  __m256i sig = load(x + v * lanes + j);
  for (auto i = topo.offsets[v]; i < topo.offsets[v + 1]; ++i) {
    sig = _mm256_add_epi8(sig, load(x + topo.neighbors[i] * lanes + j));
  }
  return sig;
}

void step_avx2(const Topology& topo, Rule rule, std::span<const Vertex> order,
               const StateBlock& in, StateBlock& out, std::uint32_t* successors) {
  const auto lanes = in.lanes;
  if (out.lanes != lanes || out.x.size() != in.x.size()) out.reshape(topo.n, lanes);
  out.active = in.active;
  std::memcpy(out.x.data(), in.x.data(), in.x.size());
  std::memcpy(out.k.data(), in.k.data(), in.k.size());

  const __m256i one = _mm256_set1_epi8(1);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i all = _mm256_set1_epi8(-1);
  const __m256i raise_on = (rule == Rule::Increasing || rule == Rule::Mixed) ? all : zero;
  const __m256i lower_on = (rule == Rule::Decreasing || rule == Rule::Mixed) ? all : zero;

  const bool parallel = order.empty();
  const std::uint8_t* src_x = parallel ? in.x.data() : out.x.data();
  std::uint8_t* dst_x = out.x.data();
  std::uint8_t* dst_k = out.k.data();

  auto update_vertex = [&](std::uint32_t v) {
    for (std::size_t j = 0; j < lanes; j += kLaneWidth) {
      const __m256i x = load(src_x + v * lanes + j);
      const __m256i k = load(dst_k + v * lanes + j);
      const __m256i sig = neighborhood_sum(topo, src_x, lanes, v, j);
      const __m256i on = ge_epu8(sig, k);
      const __m256i x_zero = _mm256_cmpeq_epi8(x, zero);
      const __m256i inc = _mm256_and_si256(_mm256_and_si256(x_zero, on), raise_on);
      const __m256i dec = _mm256_andnot_si256(_mm256_or_si256(x_zero, on), lower_on);
      const __m256i nk = _mm256_sub_epi8(_mm256_add_epi8(k, _mm256_and_si256(inc, one)),
                                         _mm256_and_si256(dec, one));
      store(dst_x + v * lanes + j, _mm256_and_si256(on, one));
      store(dst_k + v * lanes + j, nk);
    }
  };
  if (parallel) {
    for (std::uint32_t v = 0; v < topo.n; ++v) update_vertex(v);
  } else {
    for (Vertex v : order) update_vertex(v);
  }

  alignas(32) std::uint32_t index[kLaneWidth];
  for (std::size_t j = 0; j < in.active; j += kLaneWidth) {
    __m256i acc[4] = {zero, zero, zero, zero};
    for (std::uint32_t v = 0; v < topo.n; ++v) {
      // digit = x + 2k - 2, at most 2d + 1 <= 253.
      const __m256i x = load(dst_x + v * lanes + j);
      const __m256i k = load(dst_k + v * lanes + j);
      const __m256i digit =
          _mm256_sub_epi8(_mm256_add_epi8(x, _mm256_add_epi8(k, k)), _mm256_set1_epi8(2));
      const __m256i place = _mm256_set1_epi32(static_cast<int>(topo.place[v]));
      const __m128i lo = _mm256_castsi256_si128(digit);
      const __m128i hi = _mm256_extracti128_si256(digit, 1);
      acc[0] = _mm256_add_epi32(acc[0], _mm256_mullo_epi32(_mm256_cvtepu8_epi32(lo), place));
      acc[1] = _mm256_add_epi32(
          acc[1], _mm256_mullo_epi32(_mm256_cvtepu8_epi32(_mm_srli_si128(lo, 8)), place));
      acc[2] = _mm256_add_epi32(acc[2], _mm256_mullo_epi32(_mm256_cvtepu8_epi32(hi), place));
      acc[3] = _mm256_add_epi32(
          acc[3], _mm256_mullo_epi32(_mm256_cvtepu8_epi32(_mm_srli_si128(hi, 8)), place));
    }
    for (int q = 0; q < 4; ++q) {
      _mm256_store_si256(reinterpret_cast<__m256i*>(index + 8 * q), acc[q]);
    }
    const auto take = std::min<std::size_t>(kLaneWidth, in.active - j);
    std::memcpy(successors + j, index, take * sizeof(std::uint32_t));
  }
}

std::size_t count_fixed_avx2(const Topology& topo, const StateBlock& in) {
  const auto lanes = in.lanes;
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t count = 0;
  for (std::size_t j = 0; j < in.active; j += kLaneWidth) {
    __m256i fixed = _mm256_set1_epi8(-1);
    for (std::uint32_t v = 0; v < topo.n; ++v) {
      const __m256i x = load(in.x.data() + v * lanes + j);
      const __m256i k = load(in.k.data() + v * lanes + j);
      const __m256i on = ge_epu8(neighborhood_sum(topo, in.x.data(), lanes, v, j), k);
      fixed = _mm256_and_si256(fixed, _mm256_cmpeq_epi8(on, _mm256_cmpeq_epi8(x, one)));
    }
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(fixed));
    const auto valid = in.active - j;
    if (valid < kLaneWidth) mask &= (1u << valid) - 1u;
    count += static_cast<std::size_t>(__builtin_popcount(mask));
  }
  return count;
}

}  // namespace

const KernelSet& avx2_kernels() {
  static const KernelSet set{"avx2", &step_avx2, &count_fixed_avx2};
  return set;
}

}  // namespace etgds::kernels
