#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "etgds/bigcount.hpp"
#include "etgds/codec.hpp"
#include "etgds/graph.hpp"
#include "etgds/kernels.hpp"
#include "etgds/state.hpp"

namespace etgds {

inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

/// Thrown when a sweep would exceed the configured state-space cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const BigCount& size, std::uint64_t cap);
  const BigCount& size() const { return size_; }
  std::uint64_t cap() const { return cap_; }

 private:
  BigCount size_;
  std::uint64_t cap_;
};

struct BuildOptions {
  std::uint64_t cap = kDefaultStateCap;
  std::size_t workers = 1;
  std::optional<kernels::Isa> isa;  ///< defaults to the best available
};

/// Functional digraph Γ(φ): successor[i] is the index of φ(decode(i)).
class PhaseSpace {
 public:
  PhaseSpace(Graph graph, RuleScheme rule_scheme, std::vector<std::uint32_t> successor);

  const Graph& graph() const { return graph_; }
  const RuleScheme& rule_scheme() const { return rule_scheme_; }
  const StateCodec& codec() const { return codec_; }
  std::uint64_t size() const { return successor_.size(); }
  std::uint32_t successor(std::uint64_t index) const { return successor_[index]; }
  const std::vector<std::uint32_t>& successors() const { return successor_; }

 private:
  Graph graph_;
  RuleScheme rule_scheme_;
  StateCodec codec_;
  std::vector<std::uint32_t> successor_;
};

/// Throws CapExceeded when state_space_size(g) > options.cap.
PhaseSpace build_phase_space(const Graph& g, const RuleScheme& rs, const BuildOptions& options = {});

struct AttractorSummary {
  std::uint64_t fixed_points = 0;
  std::map<std::uint64_t, std::uint64_t> cycle_lengths;  ///< length -> number of cycles
  std::uint64_t periodic_states = 0;
  std::uint64_t transient_states = 0;

  std::uint64_t max_cycle_length() const {
    return cycle_lengths.empty() ? 0 : cycle_lengths.rbegin()->first;
  }
};

struct AttractorDetail {
  AttractorSummary summary;
  /// For each state: length of the cycle it lies on, or 0 if transient.
  std::vector<std::uint32_t> cycle_length_of;
};

AttractorSummary attractors(const PhaseSpace& ps);
AttractorDetail classify_states(const PhaseSpace& ps);

}  // namespace etgds
