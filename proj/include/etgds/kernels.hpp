#pragma once

// Block kernels for exhaustive sweeps over the extended state space.
//
// A sweep decodes a run of consecutive state indices into a structure-of-arrays
// block (one byte row per vertex for x and for k) and then applies one system
// update, or the fixed-point predicate, to every lane of the block at once.
// There is a portable scalar reference implementation and an AVX2 variant; the
// variant is picked at runtime and both must produce identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "etgds/graph.hpp"
#include "etgds/state.hpp"

namespace etgds::kernels {

/// Lane counts are padded to a multiple of this (one AVX2 register of bytes).
inline constexpr std::size_t kLaneWidth = 32;
/// Default lanes per block used by the sweeps.
inline constexpr std::size_t kBlockLanes = 256;
/// Largest degree the byte-wide kernels accept: digits 2(d+1) must fit a byte.
inline constexpr std::size_t kMaxKernelDegree = 126;

/// Graph flattened for the kernels: CSR neighbor lists plus 32-bit place values.
struct Topology {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> offsets;  ///< n + 1 entries
  std::vector<std::uint32_t> neighbors;
  std::vector<std::uint8_t> degree;
  std::vector<std::uint32_t> radix;
  std::vector<std::uint32_t> place;
  std::uint64_t size = 1;  ///< number of states, < 2^32

  /// Throws std::length_error if the space needs more than 32-bit indices or a
  /// degree exceeds kMaxKernelDegree.
  static Topology build(const Graph& g);
};

/// x[v * lanes + j] and k[v * lanes + j] hold lane j's state at vertex v.
struct StateBlock {
  std::size_t lanes = 0;   ///< capacity, a multiple of kLaneWidth
  std::size_t active = 0;  ///< lanes holding real states; the rest are padding
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> k;

  void reshape(std::size_t n, std::size_t lane_capacity);
};

/// Loads states first .. first+count-1 into `block`; padding lanes get (0,1).
void decode_block(const Topology& topo, std::uint64_t first, std::size_t count, StateBlock& block);

struct KernelSet {
  std::string_view name;
  /// One system update of every lane. `order` empty means parallel; otherwise
  /// vertex updates run in that order. Writes the successor index of each
  /// active lane to `successors[0 .. in.active)`.
  void (*step)(const Topology& topo, Rule rule, std::span<const Vertex> order,
               const StateBlock& in, StateBlock& out, std::uint32_t* successors);
  /// Number of active lanes satisfying the fixed-point condition at every vertex.
  std::size_t (*count_fixed)(const Topology& topo, const StateBlock& in);
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);
bool isa_available(Isa isa);
/// Throws std::runtime_error if the ISA is not available on this machine.
const KernelSet& kernels_for(Isa isa);
/// Best available ISA; ETGDS_ISA=scalar in the environment forces the reference.
Isa best_isa();
const KernelSet& active_kernels();

// Implementations, exposed for equivalence testing.
const KernelSet& scalar_kernels();
#if defined(ETGDS_HAVE_AVX2_KERNEL)
const KernelSet& avx2_kernels();
#endif

}  // namespace etgds::kernels
