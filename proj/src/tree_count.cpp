// Fixed-point counting over trees by path decomposition.
//
// Merging a subtree C into a tree X at a shared vertex v acts on the counts
// ζ(W; X) as
//
//   ζ(W; X ∪ C)       = χ_C ζ(W; X) + (Fix_C - 2 χ_C) ζ(W ∪ {v}; X)   (v ∉ W)
//   ζ(W ∪ {v}; X ∪ C) = χ_C ζ(W ∪ {v}; X)
//
// with χ_C = χ(v; C). The update only touches the marked/unmarked status of v,
// so all merges at one vertex fold into a 2×2 upper-triangular factor (A, B)
// and factors at different vertices commute. Fix of a path with hanging
// subtrees is then Σ_W Π_{v∈W} B_v Π_{v∉W} A_v ζ(W; path), and the product
// form of ζ on a path turns that sum into one left-to-right pass.

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

#include "etgds/fixed_points.hpp"

namespace etgds {
namespace {

std::vector<std::size_t> bfs_distances(const Graph& t, Vertex root, std::vector<Vertex>& parent) {
  std::vector<std::size_t> dist(t.order(), SIZE_MAX);
  parent.assign(t.order(), root);
  std::queue<Vertex> queue;
  dist[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : t.neighbors(u)) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push(w);
      }
    }
  }
  return dist;
}

Vertex farthest(const std::vector<std::size_t>& dist) {
  Vertex best = 0;
  for (Vertex v = 1; v < dist.size(); ++v) {
    if (dist[v] > dist[best]) best = v;
  }
  return best;
}

std::vector<Vertex> tree_path(const Graph& t, Vertex from, Vertex to) {
  std::vector<Vertex> parent;
  bfs_distances(t, from, parent);
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Cached Fibonacci values and the gap sums Σ_{j=1}^{g} Fib(3j - 2).
class FibTable {
 public:
  const BigCount& fib(std::size_t n) {
    while (values_.size() <= n) {
      const auto m = values_.size();
      values_.push_back(m < 2 ? BigCount(m) : values_[m - 1] + values_[m - 2]);
    }
    return values_[n];
  }
  const BigCount& gap_sum(std::size_t g) {
    while (gap_sums_.size() <= g) {
      const auto j = gap_sums_.size();
      gap_sums_.push_back(j == 0 ? BigCount(0) : gap_sums_[j - 1] + fib(3 * j - 2));
    }
    return gap_sums_[g];
  }

 private:
  std::vector<BigCount> values_;
  std::vector<BigCount> gap_sums_;
};

struct MergeFactor {
  std::size_t position;  // 1-based along the path
  BigCount unmarked;     // A
  BigCount marked;       // B
};

// Σ_W Π_{v∈W} B_v Π_{v∉W} A_v ζ(W; P_length), W ranging over subsets of the
// factor positions. With `root_marked`, position 1 is always in W and carries
// no factor of its own.
BigCount fold_path(std::size_t length, std::vector<MergeFactor> factors, bool root_marked,
                   FibTable& fibs) {
  std::sort(factors.begin(), factors.end(),
            [](const MergeFactor& a, const MergeFactor& b) { return a.position < b.position; });
  if (root_marked) factors.insert(factors.begin(), MergeFactor{1, BigCount(0), BigCount(1)});
  const auto m = factors.size();

  BigCount all_unmarked = 1;
  for (const auto& f : factors) all_unmarked *= f.unmarked;
  BigCount total = all_unmarked * 2 * fibs.fib(3 * length - 1);

  // ending[j]: sum over W whose largest mark is factor j, of everything left
  // of and including that mark.
  std::vector<BigCount> ending(m);
  BigCount unmarked_prefix = 1;
  for (std::size_t j = 0; j < m; ++j) {
    const auto a = factors[j].position;
    BigCount left = fibs.fib(3 * a - 2) * unmarked_prefix;
    BigCount between = 1;
    for (std::size_t i = j; i-- > 0;) {
      left += ending[i] * fibs.gap_sum(a - factors[i].position) * between;
      between *= factors[i].unmarked;
    }
    ending[j] = factors[j].marked * left;
    unmarked_prefix *= factors[j].unmarked;
  }
  BigCount unmarked_suffix = 1;
  for (std::size_t j = m; j-- > 0;) {
    total += ending[j] * fibs.fib(3 * (length - factors[j].position + 1) - 2) * unmarked_suffix;
    unmarked_suffix *= factors[j].unmarked;
  }
  return total;
}

struct SubtreeCounts {
  BigCount fix;
  BigCount chi_root;
};

// Fix(T) restricted to the base path and branches [0, branch_limit).
BigCount evaluate(const Graph& t, const PathDecomposition& d, std::size_t branch_limit) {
  const auto n = t.order();
  constexpr std::size_t kBase = SIZE_MAX;
  std::vector<std::size_t> owner(n, kBase);
  std::vector<std::size_t> position(n, 0);
  for (std::size_t i = 0; i < d.base.size(); ++i) position[d.base[i]] = i + 1;
  for (std::size_t b = 0; b < branch_limit; ++b) {
    const auto& path = d.branches[b].path;
    for (std::size_t i = 1; i < path.size(); ++i) {
      owner[path[i]] = b;
      position[path[i]] = i + 1;
    }
  }

  // Factors contributed to each path, keyed by the owning path of the attach vertex.
  std::vector<std::vector<std::pair<Vertex, SubtreeCounts>>> hanging(branch_limit);
  std::vector<std::pair<Vertex, SubtreeCounts>> hanging_on_base;
  FibTable fibs;

  auto factors_for = [&](const std::vector<std::pair<Vertex, SubtreeCounts>>& subtrees) {
    std::vector<MergeFactor> factors;
    std::vector<std::size_t> slot(n, SIZE_MAX);
    for (const auto& [v, counts] : subtrees) {
      if (slot[v] == SIZE_MAX) {
        slot[v] = factors.size();
        factors.push_back({position[v], BigCount(1), BigCount(0)});
      }
      auto& f = factors[slot[v]];
      const BigCount a = counts.chi_root;
      const BigCount b = counts.fix - 2 * counts.chi_root;
      f.marked = f.unmarked * b + f.marked * a;
      f.unmarked *= a;
    }
    return factors;
  };

  // Branches are discovered after the path they hang from, so a reverse sweep
  // finishes every subtree before its parent needs it.
  for (std::size_t b = branch_limit; b-- > 0;) {
    const auto& branch = d.branches[b];
    const auto factors = factors_for(hanging[b]);
    SubtreeCounts counts{fold_path(branch.path.size(), factors, false, fibs),
                         fold_path(branch.path.size(), factors, true, fibs)};
    const auto parent = owner[branch.attach];
    if (parent == kBase) {
      hanging_on_base.emplace_back(branch.attach, std::move(counts));
    } else {
      hanging[parent].emplace_back(branch.attach, std::move(counts));
    }
  }
  return fold_path(d.base.size(), factors_for(hanging_on_base), false, fibs);
}

}  // namespace

PathDecomposition decompose_tree(const Graph& t, const DecompositionOptions& options) {
  if (!t.is_tree()) throw std::invalid_argument("graph is not a tree");
  const auto n = t.order();
  PathDecomposition d;
  if (n == 1) {
    d.base = {0};
    return d;
  }

  if (options.base_endpoints) {
    const auto [a, b] = *options.base_endpoints;
    if (a >= n || b >= n || a == b) throw std::invalid_argument("invalid base path endpoints");
    d.base = tree_path(t, a, b);
  } else {
    std::vector<Vertex> parent;
    const Vertex a = farthest(bfs_distances(t, 0, parent));
    const Vertex b = farthest(bfs_distances(t, a, parent));
    d.base = tree_path(t, a, b);
  }

  std::vector<bool> covered(n, false);
  for (Vertex v : d.base) covered[v] = true;
  std::optional<std::mt19937_64> engine;
  if (options.shuffle_seed) engine.emplace(*options.shuffle_seed);

  auto visiting_order = [&](Vertex v) {
    std::vector<Vertex> nb(t.neighbors(v).begin(), t.neighbors(v).end());
    if (engine) {
      for (std::size_t i = nb.size(); i > 1; --i) std::swap(nb[i - 1], nb[(*engine)() % i]);
    }
    return nb;
  };

  std::function<void(Vertex)> grow = [&](Vertex v) {
    for (Vertex first : visiting_order(v)) {
      if (covered[first]) continue;
      PathDecomposition::Branch branch{v, {v, first}};
      covered[first] = true;
      for (bool extended = true; extended;) {
        extended = false;
        for (Vertex next : visiting_order(branch.path.back())) {
          if (!covered[next]) {
            covered[next] = true;
            branch.path.push_back(next);
            extended = true;
            break;
          }
        }
      }
      const auto discovered = branch.path;
      d.branches.push_back(std::move(branch));
      for (std::size_t i = 1; i < discovered.size(); ++i) grow(discovered[i]);
    }
  };
  for (Vertex v : std::vector<Vertex>(d.base)) grow(v);
  return d;
}

void validate_decomposition(const Graph& t, const PathDecomposition& d) {
  const auto n = t.order();
  std::vector<bool> covered(n, false);
  auto check_path = [&](const std::vector<Vertex>& path, const std::string& what) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] >= n) throw std::invalid_argument(what + " has an out-of-range vertex");
      if (i && !t.has_edge(path[i - 1], path[i])) {
        throw std::invalid_argument(what + " uses a non-edge");
      }
    }
  };
  if (d.base.empty()) throw std::invalid_argument("empty base path");
  check_path(d.base, "base path");
  for (Vertex v : d.base) {
    if (covered[v]) throw std::invalid_argument("base path repeats a vertex");
    covered[v] = true;
  }
  for (std::size_t b = 0; b < d.branches.size(); ++b) {
    const auto& br = d.branches[b];
    const auto what = "branch " + std::to_string(b);
    if (br.path.size() < 2 || br.path.front() != br.attach) {
      throw std::invalid_argument(what + " must start at its attach vertex and add a vertex");
    }
    check_path(br.path, what);
    if (!covered[br.attach]) throw std::invalid_argument(what + " attaches to an uncovered vertex");
    for (std::size_t i = 1; i < br.path.size(); ++i) {
      if (covered[br.path[i]]) {
        throw std::invalid_argument(what + " shares more than one vertex with earlier paths");
      }
      covered[br.path[i]] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw std::invalid_argument("decomposition does not cover the tree");
  }
}

BigCount count_fixed_tree(const Graph& t) { return count_fixed_tree(t, decompose_tree(t)); }

BigCount count_fixed_tree(const Graph& t, const PathDecomposition& d) {
  if (!t.is_tree()) throw std::invalid_argument("graph is not a tree");
  validate_decomposition(t, d);
  return evaluate(t, d, d.branches.size());
}

std::vector<BigCount> tree_fixed_point_trace(const Graph& t, const PathDecomposition& d) {
  if (!t.is_tree()) throw std::invalid_argument("graph is not a tree");
  validate_decomposition(t, d);
  std::vector<BigCount> trace;
  for (std::size_t i = 0; i <= d.branches.size(); ++i) trace.push_back(evaluate(t, d, i));
  return trace;
}

Graph decomposition_prefix(const PathDecomposition& d, std::size_t branches) {
  std::vector<Vertex> label;
  std::vector<Edge> edges;
  auto id = [&](Vertex v) {
    auto it = std::find(label.begin(), label.end(), v);
    if (it != label.end()) return static_cast<Vertex>(it - label.begin());
    label.push_back(v);
    return static_cast<Vertex>(label.size() - 1);
  };
  auto add_path = [&](const std::vector<Vertex>& path) {
    Vertex prev = id(path.front());
    for (std::size_t i = 1; i < path.size(); ++i) {
      Vertex cur = id(path[i]);
      edges.emplace_back(prev, cur);
      prev = cur;
    }
  };
  add_path(d.base);
  for (std::size_t b = 0; b < std::min(branches, d.branches.size()); ++b) add_path(d.branches[b].path);
  return Graph::from_edge_list(label.size(), edges);
}

}  // namespace etgds
