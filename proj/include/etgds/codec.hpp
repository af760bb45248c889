#pragma once

#include <cstdint>
#include <vector>

#include "etgds/bigcount.hpp"
#include "etgds/graph.hpp"
#include "etgds/state.hpp"

namespace etgds {

using StateIndex = std::uint64_t;

/// ∏_v 2(d(v)+1), exact.
BigCount state_space_size(const Graph& g);

/**
 * Mixed-radix encoding of extended states.
 *
 * Vertex v contributes the digit x_v + 2(k_v - 1) in radix 2(d(v)+1); vertex 0
 * is least significant. Index 0 is the all-(0,1) state.
 */
class StateCodec {
 public:
  /// Throws std::length_error if the space does not fit in 64 bits.
  explicit StateCodec(const Graph& g);

  StateIndex size() const { return size_; }
  std::size_t vertex_count() const { return radix_.size(); }
  std::uint32_t radix(Vertex v) const { return radix_[v]; }
  StateIndex place(Vertex v) const { return place_[v]; }

  StateIndex encode(const ExtendedState& s) const;
  ExtendedState decode(StateIndex index) const;

 private:
  std::vector<std::uint32_t> radix_;
  std::vector<StateIndex> place_;
  StateIndex size_ = 1;
};

}  // namespace etgds
