#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etgds/graph.hpp"

namespace etgds {

/// Extended vertex state (x_v, k_v): a bit and a threshold in D_v = {1..d(v)+1}.
struct VertexState {
  std::uint8_t x = 0;
  std::uint32_t k = 1;

  bool operator==(const VertexState&) const = default;
};

/// One VertexState per vertex of the graph it is bound to.
using ExtendedState = std::vector<VertexState>;

struct ExtendedStateHash {
  std::size_t operator()(const ExtendedState& s) const noexcept;
};

/// Throws std::invalid_argument naming the first offending vertex if `s`
/// does not fit `g` (wrong length, x not a bit, k outside D_v).
void validate_state(const Graph& g, const ExtendedState& s);

/// Parses "((x1,k1),(x2,k2),...)". Whitespace is ignored.
ExtendedState parse_state(std::string_view text);
/// Emits "((x1,k1),(x2,k2),...)" with no whitespace.
std::string format_state(const ExtendedState& s);

enum class Rule { Static, Increasing, Decreasing, Mixed };

std::string_view to_string(Rule rule);
std::optional<Rule> parse_rule(std::string_view text);

/// Parallel (GCA) update, or sequential (SDS) update along a permutation.
class UpdateScheme {
 public:
  static UpdateScheme parallel() { return UpdateScheme{}; }
  /// Throws std::invalid_argument unless `order` is a permutation of 0..size-1.
  static UpdateScheme sequential(std::vector<Vertex> order);
  static UpdateScheme sequential_identity(std::size_t n);

  bool is_parallel() const { return !order_.has_value(); }
  const std::vector<Vertex>& order() const { return *order_; }

  /// "parallel" or "seq:0,1,2".
  std::string describe() const;

  bool operator==(const UpdateScheme&) const = default;

 private:
  std::optional<std::vector<Vertex>> order_;
};

bool is_permutation_of_vertices(const std::vector<Vertex>& order, std::size_t n);

struct RuleScheme {
  Rule rule = Rule::Static;
  UpdateScheme scheme;
};

}  // namespace etgds
