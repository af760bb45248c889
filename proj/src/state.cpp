#include "etgds/state.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace etgds {

std::size_t ExtendedStateHash::operator()(const ExtendedState& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto& vs : s) {
    h ^= (static_cast<std::size_t>(vs.k) << 1) | vs.x;
    h *= 1099511628211ull;
  }
  return h;
}

void validate_state(const Graph& g, const ExtendedState& s) {
  if (s.size() != g.order()) {
    throw std::invalid_argument("state has " + std::to_string(s.size()) +
                                " components but the graph has " + std::to_string(g.order()) +
                                " vertices");
  }
  for (Vertex v = 0; v < s.size(); ++v) {
    if (s[v].x > 1) {
      throw std::invalid_argument("vertex " + std::to_string(v) + ": x must be 0 or 1");
    }
    const auto top = g.degree(v) + 1;
    if (s[v].k < 1 || s[v].k > top) {
      throw std::invalid_argument("vertex " + std::to_string(v) + ": threshold " +
                                  std::to_string(s[v].k) + " outside D_v = {1.." +
                                  std::to_string(top) + "}");
    }
  }
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::uint32_t number() {
    skip_space();
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed state literal at offset " + std::to_string(pos_) +
                                ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExtendedState parse_state(std::string_view text) {
  Cursor cur(text);
  ExtendedState s;
  cur.expect('(');
  if (!cur.peek(')')) {
    do {
      cur.expect('(');
      const auto x = cur.number();
      cur.expect(',');
      const auto k = cur.number();
      cur.expect(')');
      if (x > 1) cur.fail("vertex " + std::to_string(s.size()) + ": x must be 0 or 1");
      s.push_back({static_cast<std::uint8_t>(x), k});
      if (!cur.peek(',')) break;
      cur.expect(',');
    } while (true);
  }
  cur.expect(')');
  if (!cur.at_end()) cur.fail("trailing characters");
  return s;
}

std::string format_state(const ExtendedState& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += '(';
    out += std::to_string(s[i].x);
    out += ',';
    out += std::to_string(s[i].k);
    out += ')';
  }
  out += ')';
  return out;
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Static: return "static";
    case Rule::Increasing: return "increasing";
    case Rule::Decreasing: return "decreasing";
    case Rule::Mixed: return "mixed";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view text) {
  for (Rule r : {Rule::Static, Rule::Increasing, Rule::Decreasing, Rule::Mixed}) {
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

bool is_permutation_of_vertices(const std::vector<Vertex>& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

UpdateScheme UpdateScheme::sequential(std::vector<Vertex> order) {
  if (!is_permutation_of_vertices(order, order.size())) {
    throw std::invalid_argument("update order is not a permutation of the vertices");
  }
  UpdateScheme s;
  s.order_ = std::move(order);
  return s;
}

UpdateScheme UpdateScheme::sequential_identity(std::size_t n) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  return sequential(std::move(order));
}

std::string UpdateScheme::describe() const {
  if (is_parallel()) return "parallel";
  std::string out = "seq:";
  for (std::size_t i = 0; i < order_->size(); ++i) {
    if (i) out += ',';
    out += std::to_string((*order_)[i]);
  }
  return out;
}

}  // namespace etgds
