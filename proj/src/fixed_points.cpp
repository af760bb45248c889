#include "etgds/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>

#include "etgds/codec.hpp"
#include "etgds/dynamics.hpp"
#include "etgds/kernels.hpp"

namespace etgds {

bool is_fixed_point(const Graph& g, const ExtendedState& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((s[v].x == 1) != (sigma(g, s, v) >= s[v].k)) return false;
  }
  return true;
}

BigCount count_fixed_brute(const Graph& g, const BuildOptions& options) {
  const auto size = state_space_size(g);
  if (size > options.cap) throw CapExceeded(size, options.cap);
  const auto topo = kernels::Topology::build(g);
  const auto& ks = kernels::kernels_for(options.isa.value_or(kernels::best_isa()));

  auto sweep = [&](std::uint64_t begin, std::uint64_t end) {
    kernels::StateBlock block;
    block.reshape(topo.n, kernels::kBlockLanes);
    std::uint64_t count = 0;
    for (auto first = begin; first < end; first += kernels::kBlockLanes) {
      const auto lanes = static_cast<std::size_t>(std::min<std::uint64_t>(kernels::kBlockLanes, end - first));
      kernels::decode_block(topo, first, lanes, block);
      count += ks.count_fixed(topo, block);
    }
    return count;
  };

  const auto workers = std::max<std::size_t>(1, options.workers);
  if (workers == 1) return BigCount(sweep(0, topo.size));
  const std::uint64_t blocks = (topo.size + kernels::kBlockLanes - 1) / kernels::kBlockLanes;
  const std::uint64_t per = (blocks + workers - 1) / workers;
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const auto begin = std::min<std::uint64_t>(topo.size, w * per * kernels::kBlockLanes);
      const auto end = std::min<std::uint64_t>(topo.size, (w + 1) * per * kernels::kBlockLanes);
      pool.emplace_back([&, w, begin, end] { partial[w] = sweep(begin, end); });
    }
  }
  BigCount total = 0;
  for (auto p : partial) total += p;
  return total;
}

std::vector<Vertex> breadth_first_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.order(), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::queue<Vertex> queue;
    queue.push(root);
    seen[root] = true;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      order.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push(w);
        }
      }
    }
  }
  return order;
}

namespace {

class Backtracker {
 public:
  Backtracker(const Graph& g, std::vector<Vertex> order) : g_(g), order_(std::move(order)) {
    const auto n = g.order();
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order_[i]] = i;
    completes_at_.resize(n);
    for (Vertex w = 0; w < n; ++w) {
      std::size_t last = position[w];
      for (Vertex u : g.neighbors(w)) last = std::max(last, position[u]);
      completes_at_[last].push_back(w);
    }
    x_.assign(n, 0);
    k_.assign(n, 1);
  }

  std::uint64_t run() { return descend(0); }

 private:
  bool locally_fixed(Vertex w) const {
    std::uint32_t sig = x_[w];
    for (Vertex u : g_.neighbors(w)) sig += x_[u];
    return (x_[w] == 1) == (sig >= k_[w]);
  }

  std::uint64_t descend(std::size_t depth) {
    if (depth == order_.size()) return 1;
    const Vertex v = order_[depth];
    const auto top = static_cast<std::uint32_t>(g_.degree(v) + 1);
    std::uint64_t count = 0;
    for (std::uint8_t x = 0; x <= 1; ++x) {
      for (std::uint32_t k = 1; k <= top; ++k) {
        x_[v] = x;
        k_[v] = k;
        bool ok = true;
        for (Vertex w : completes_at_[depth]) {
          if (!locally_fixed(w)) {
            ok = false;
            break;
          }
        }
        if (ok) count += descend(depth + 1);
      }
    }
    x_[v] = 0;
    k_[v] = 1;
    return count;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> completes_at_;
  std::vector<std::uint8_t> x_;
  std::vector<std::uint32_t> k_;
};

}  // namespace

BigCount count_fixed_backtrack(const Graph& g, std::vector<Vertex> vertex_order) {
  if (vertex_order.empty()) vertex_order = breadth_first_order(g);
  if (!is_permutation_of_vertices(vertex_order, g.order())) {
    throw std::invalid_argument("backtracking order is not a permutation of the vertices");
  }
  if (g.order() == 0) return 1;
  return BigCount(Backtracker(g, std::move(vertex_order)).run());
}

BigCount fib(std::size_t n) {
  BigCount a = 0;
  BigCount b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigCount next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigCount lucas(std::size_t n) {
  BigCount a = 2;
  BigCount b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigCount next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigCount count_fixed_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  return 2 * fib(3 * n - 1);
}

BigCount path_recursion_step(const BigCount& fix_n, const BigCount& fix_n_minus_1) {
  return 5 * fix_n_minus_1 + 4 * (fix_n - fix_n_minus_1);
}

BigCount count_fixed_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  return 2 + lucas(3 * n);
}

BigCount count_fixed_cycle_recursion(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<BigCount> l = {78, 324, 1366, 5780};  // L_3 .. L_6
  for (std::size_t m = 7; m <= n; ++m) {
    const auto s = l.size();
    l.push_back(6 * l[s - 1] - 8 * l[s - 2] + 2 * l[s - 3] + l[s - 4]);
  }
  return l[n - 3];
}

double path_scaling_estimate(std::size_t n) {
  const double root5 = std::sqrt(5.0);
  return (1.0 - 1.0 / root5) * std::pow(2.0 + root5, static_cast<double>(n));
}

BigCount chi_path(std::size_t n, std::size_t position) {
  if (position < 1 || position > n) {
    throw std::invalid_argument("position " + std::to_string(position) + " outside path of " +
                                std::to_string(n) + " vertices");
  }
  // r: distance to the nearer end.
  const auto r = std::min(position - 1, n - position);
  return fib(3 * (r + 1) - 2) * fib(3 * (n - r) - 2);
}

BigCount zeta_path(std::size_t n, const std::vector<std::size_t>& marked_positions) {
  if (marked_positions.empty()) {
    throw std::invalid_argument("zeta_path needs at least one marked vertex");
  }
  for (std::size_t i = 0; i < marked_positions.size(); ++i) {
    const auto a = marked_positions[i];
    if (a < 1 || a > n) throw std::invalid_argument("marked position outside the path");
    if (i && marked_positions[i - 1] >= a) {
      throw std::invalid_argument("marked positions must be strictly increasing");
    }
  }
  // Outer factors are χ of the first (last) mark on the subpath running from
  // the path's start to it (from it to the path's end).
  const auto first = marked_positions.front();
  const auto last = marked_positions.back();
  BigCount result = chi_path(first, first) * chi_path(n - last + 1, 1);
  for (std::size_t i = 0; i + 1 < marked_positions.size(); ++i) {
    const auto gap = marked_positions[i + 1] - marked_positions[i];
    BigCount inner = 0;
    for (std::size_t j = 1; j <= gap; ++j) inner += fib(3 * j - 2);
    result *= inner;
  }
  return result;
}

BigCount merge_at_vertex(const BigCount& fix1, const BigCount& chi1, const BigCount& fix2,
                         const BigCount& chi2) {
  return chi1 * fix2 + (fix1 - 2 * chi1) * chi2;
}

FixedPointCensus fixed_point_census(const Graph& g, std::uint64_t cap) {
  const auto size = state_space_size(g);
  if (size > cap) throw CapExceeded(size, cap);
  const StateCodec codec(g);
  FixedPointCensus census;
  census.ones_at.assign(g.order(), 0);
  census.marked_at.assign(g.order(), 0);
  std::vector<std::uint64_t> ones(g.order(), 0);
  std::vector<std::uint64_t> marked(g.order(), 0);
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < codec.size(); ++i) {
    const auto s = codec.decode(i);
    if (!is_fixed_point(g, s)) continue;
    ++total;
    for (Vertex v = 0; v < g.order(); ++v) {
      ones[v] += s[v].x;
      marked[v] += s[v].x == 0 && s[v].k == g.degree(v) + 1;
    }
  }
  census.total = total;
  for (Vertex v = 0; v < g.order(); ++v) {
    census.ones_at[v] = ones[v];
    census.marked_at[v] = marked[v];
  }
  return census;
}

std::vector<std::uint64_t> fixed_point_indices(const Graph& g, std::uint64_t cap) {
  const auto size = state_space_size(g);
  if (size > cap) throw CapExceeded(size, cap);
  const StateCodec codec(g);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < codec.size(); ++i) {
    if (is_fixed_point(g, codec.decode(i))) out.push_back(i);
  }
  return out;
}

}  // namespace etgds
