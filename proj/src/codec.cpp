#include "etgds/codec.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace etgds {

BigCount state_space_size(const Graph& g) {
  BigCount total = 1;
  for (Vertex v = 0; v < g.order(); ++v) total *= 2 * (g.degree(v) + 1);
  return total;
}

StateCodec::StateCodec(const Graph& g) {
  const auto n = g.order();
  radix_.resize(n);
  place_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    radix_[v] = static_cast<std::uint32_t>(2 * (g.degree(v) + 1));
    place_[v] = size_;
    if (size_ > std::numeric_limits<StateIndex>::max() / radix_[v]) {
      throw std::length_error("state space of " + std::to_string(n) +
                              "-vertex graph exceeds 64-bit indexing");
    }
    size_ *= radix_[v];
  }
}

StateIndex StateCodec::encode(const ExtendedState& s) const {
  if (s.size() != radix_.size()) throw std::invalid_argument("state length mismatch");
  StateIndex index = 0;
  for (std::size_t v = 0; v < s.size(); ++v) {
    const StateIndex digit = s[v].x + 2 * (static_cast<StateIndex>(s[v].k) - 1);
    if (s[v].x > 1 || s[v].k < 1 || digit >= radix_[v]) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " state outside K_v");
    }
    index += digit * place_[v];
  }
  return index;
}

ExtendedState StateCodec::decode(StateIndex index) const {
  if (index >= size_) throw std::out_of_range("state index beyond state space");
  ExtendedState s(radix_.size());
  for (std::size_t v = 0; v < s.size(); ++v) {
    const auto digit = static_cast<std::uint32_t>(index % radix_[v]);
    index /= radix_[v];
    s[v].x = static_cast<std::uint8_t>(digit & 1u);
    s[v].k = digit / 2 + 1;
  }
  return s;
}

}  // namespace etgds
