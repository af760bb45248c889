#include <algorithm>
#include <stdexcept>

#include "etgds/fixed_points.hpp"

namespace etgds {
namespace {

constexpr std::uint32_t kCycleDegree = 2;

// The six states of a degree-2 vertex.
std::vector<VertexState> cycle_vertex_states() {
  std::vector<VertexState> out;
  for (std::uint8_t x = 0; x <= 1; ++x) {
    for (std::uint32_t k = 1; k <= kCycleDegree + 1; ++k) out.push_back({x, k});
  }
  return out;
}

using Matrix = std::vector<BigCount>;  // row-major, dim × dim

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t dim) {
  Matrix c(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t l = 0; l < dim; ++l) {
      const auto& ail = a[i * dim + l];
      if (ail.is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        const auto& blj = b[l * dim + j];
        if (!blj.is_zero()) c[i * dim + j] += ail * blj;
      }
    }
  }
  return c;
}

BigCount trace(const Matrix& m, std::size_t dim) {
  BigCount t = 0;
  for (std::size_t i = 0; i < dim; ++i) t += m[i * dim + i];
  return t;
}

Matrix to_matrix(const TransferMatrix& tm) {
  Matrix m(tm.adjacency.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = tm.adjacency[i];
  return m;
}

}  // namespace

TransferMatrix build_transfer_matrix() {
  TransferMatrix tm;
  const auto states = cycle_vertex_states();
  for (const auto& left : states) {
    for (const auto& center : states) {
      for (const auto& right : states) {
        const std::uint32_t sig = left.x + center.x + right.x;
        if ((center.x == 1) == (sig >= center.k)) tm.nodes.push_back({{left, center, right}});
      }
    }
  }
  const auto dim = tm.nodes.size();
  tm.adjacency.assign(dim * dim, 0);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const auto& p = tm.nodes[a].window;
      const auto& q = tm.nodes[b].window;
      // ξ_i ◁ ξ_{i+1}: the windows overlap on vertices i and i+1.
      if (p[1] == q[0] && p[2] == q[1]) tm.adjacency[a * dim + b] = 1;
    }
  }
  return tm;
}

BigCount count_fixed_cycle_transfer(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  const auto tm = build_transfer_matrix();
  const auto dim = tm.dimension();
  Matrix base = to_matrix(tm);
  Matrix result;
  bool have_result = false;
  for (auto e = n; e > 0; e >>= 1) {
    if (e & 1) {
      result = have_result ? multiply(result, base, dim) : base;
      have_result = true;
    }
    if (e > 1) base = multiply(base, base, dim);
  }
  return trace(result, dim);
}

std::vector<BigCount> cycle_counts_transfer(std::size_t first, std::size_t last) {
  if (first < 3 || last < first) throw std::invalid_argument("need 3 <= first <= last");
  const auto tm = build_transfer_matrix();
  const auto dim = tm.dimension();
  const Matrix a = to_matrix(tm);
  Matrix power = a;
  std::vector<BigCount> out;
  for (std::size_t n = 1; n <= last; ++n) {
    if (n >= first) out.push_back(trace(power, dim));
    if (n < last) power = multiply(power, a, dim);
  }
  return out;
}

std::optional<std::size_t> transfer_annihilator_shift(const std::vector<BigCount>& c, std::size_t max_k) {
  const auto tm = build_transfer_matrix();
  const auto dim = tm.dimension();
  const Matrix a = to_matrix(tm);
  // Horner: p(A) = (...((A + c0) A + c1) A ...) + c_{m-1}.
  Matrix p = a;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) p = multiply(p, a, dim);
    for (std::size_t d = 0; d < dim; ++d) p[d * dim + d] += c[i];
  }
  auto is_zero = [](const Matrix& m) {
    return std::all_of(m.begin(), m.end(), [](const BigCount& v) { return v.is_zero(); });
  };
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (is_zero(p)) return k;
    if (k < max_k) p = multiply(p, a, dim);
  }
  return std::nullopt;
}

}  // namespace etgds
