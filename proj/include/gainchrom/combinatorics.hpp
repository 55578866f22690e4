#pragma once
// Set partitions, Stirling numbers, Moebius functions, flats of a graph,
// stable and descending-path partitions, overlap graphs and lower degree
// sequences.

#include "gainchrom/errors.hpp"
#include "gainchrom/exact_poly.hpp"
#include "gainchrom/set_partition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace gainchrom {

using EdgeSubset = std::vector<std::size_t>;  // sorted edge indices

/// Undirected multigraph on 1..n; loops and parallel edges allowed.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  bool has_loop() const {
    return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
  }
};

/// Simple undirected graph on 1..n.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0) : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  static SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
  }

  int order() const { return n_; }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("SimpleGraph: loops are not allowed");
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
  }

  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return adj_[index(u, v)] != 0;
  }

  /// Edges {i, j} with i < j in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex i = 1; i <= n_; ++i)
      for (Vertex j = i + 1; j <= n_; ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  SimpleGraph complement() const {
    SimpleGraph c(n_);
    for (Vertex i = 1; i <= n_; ++i)
      for (Vertex j = i + 1; j <= n_; ++j)
        if (!has_edge(i, j)) c.add_edge(i, j);
    return c;
  }

  Multigraph as_multigraph() const { return Multigraph{n_, edges()}; }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check(Vertex v) const {
    if (v < 1 || v > n_) throw std::out_of_range("SimpleGraph: vertex out of range");
  }
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
  }

  int n_;
  std::vector<char> adj_;
};

// ---------------------------------------------------------------------------
// Set partitions

/// Visit every partition of [n] once, in restricted-growth-string order.
template <typename Visitor>
void for_each_set_partition(int n, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_set_partition: negative n");
  if (n == 0) {
    visit(SetPartition());
    return;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(SetPartition::from_block_indices(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
}

inline std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// Stirling numbers and friends

/// S(n, k): partitions of [n] into k blocks.
inline Int stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
  if (k > n) return 0;
  std::vector<Int> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = std::min(m, k); j >= 0; --j)
      row[j] = (j == 0) ? Int(0) : Int(j * row[j] + row[j - 1]);
  return row[k];
}

/// c(n, k): permutations of [n] with k cycles.
inline Int cycle_count(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("cycle_count: negative argument");
  if (k > n) return 0;
  std::vector<Int> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = std::min(m, k); j >= 0; --j)
      row[j] = (j == 0) ? Int(0) : Int((m - 1) * row[j] + row[j - 1]);
  return row[k];
}

/// s(n, k) = (-1)^(n-k) c(n, k).
inline Int stirling1_signed(int n, int k) {
  Int c = cycle_count(n, k);
  return ((n - k) % 2 == 0) ? c : Int(-c);
}

inline Int bell(int n) {
  Int sum = 0;
  for (int k = 0; k <= n; ++k) sum += stirling2(n, k);
  return sum;
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// mu(0, pi) in the partition lattice.
inline Int mobius_partition(const SetPartition& pi) {
  Int mu = 1;
  for (const auto& b : pi.blocks()) {
    const int s = static_cast<int>(b.size());
    mu *= factorial(s - 1);
    if ((s - 1) % 2) mu = -mu;
  }
  return mu;
}

// ---------------------------------------------------------------------------
// Flats of a multigraph

namespace detail {

inline std::vector<int> component_labels(const Multigraph& g, const EdgeSubset& s) {
  std::vector<int> parent(static_cast<std::size_t>(g.n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i : s) {
    if (i >= g.edges.size()) throw std::out_of_range("edge index out of range");
    auto [u, v] = g.edges[i];
    parent[find(u)] = find(v);
  }
  std::vector<int> label(static_cast<std::size_t>(g.n) + 1, 0);
  for (int v = 1; v <= g.n; ++v) label[v] = find(v);
  return label;
}

inline EdgeSubset normalized(EdgeSubset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace detail

/// Every edge whose endpoints are joined by a path in s (loops always).
inline EdgeSubset closure(const Multigraph& g, const EdgeSubset& s) {
  const auto label = detail::component_labels(g, s);
  EdgeSubset out;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (label[g.edges[i].first] == label[g.edges[i].second]) out.push_back(i);
  return out;
}

inline bool is_closed(const Multigraph& g, const EdgeSubset& s) {
  return closure(g, s) == detail::normalized(s);
}

/// All closed edge sets, ordered by size then lexicographically.
inline std::vector<EdgeSubset> closed_sets(const Multigraph& g) {
  std::vector<EdgeSubset> out;
  for_each_set_partition(g.n, [&](const SetPartition& pi) {
    const auto block = pi.block_indices();
    EdgeSubset s;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      if (block[g.edges[i].first - 1] == block[g.edges[i].second - 1]) s.push_back(i);
    out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Moebius function of the lattice of flats, by the defining recursion.
/// mu(empty, A) is 0 for every A when the empty set is not closed.
inline Int mobius_flats(const Multigraph& g, const EdgeSubset& lower, const EdgeSubset& upper) {
  const EdgeSubset lo = detail::normalized(lower);
  const EdgeSubset hi = detail::normalized(upper);
  if (lo.empty() && g.has_loop()) return 0;
  if (!is_closed(g, lo) || !is_closed(g, hi)) throw std::invalid_argument("mobius_flats: arguments must be flats");
  if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) return 0;

  std::vector<EdgeSubset> interval;
  for (auto& f : closed_sets(g))
    if (std::includes(f.begin(), f.end(), lo.begin(), lo.end()) &&
        std::includes(hi.begin(), hi.end(), f.begin(), f.end()))
      interval.push_back(std::move(f));
  // closed_sets is sorted by size, so every proper subflat precedes its superflats
  std::vector<Int> mu(interval.size(), 0);
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (interval[i] == lo) {
      mu[i] = 1;
      continue;
    }
    Int sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (interval[j].size() < interval[i].size() &&
          std::includes(interval[i].begin(), interval[i].end(), interval[j].begin(), interval[j].end()))
        sum += mu[j];
    mu[i] = -sum;
  }
  return mu.back();
}

/// Sum of (-1)^|S| over the edge sets S whose closure is a.
inline Int mobius_by_closure_sum(const Multigraph& g, const EdgeSubset& a) {
  const EdgeSubset target = detail::normalized(a);
  if (target.size() > 24) throw TooManyEdges(target.size(), 24);
  Int sum = 0;
  const std::uint64_t count = std::uint64_t{1} << target.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    EdgeSubset s;
    for (std::size_t i = 0; i < target.size(); ++i)
      if (mask >> i & 1U) s.push_back(target[i]);
    if (closure(g, s) == target) sum += (s.size() % 2) ? -1 : 1;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Stable partitions

/// Partitions of V into stable sets; none when g has a loop.
template <typename Visitor>
void for_each_stable_partition(const Multigraph& g, Visitor&& visit) {
  if (g.has_loop()) return;
  const auto n = static_cast<std::size_t>(g.n);
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
  std::vector<int> rgs(n, 0);
  std::vector<std::vector<Vertex>> members;
  std::function<void(Vertex)> assign = [&](Vertex v) {
    if (v > g.n) {
      visit(SetPartition::from_block_indices(rgs));
      return;
    }
    for (std::size_t b = 0; b <= members.size(); ++b) {
      if (b == members.size()) {
        members.push_back({v});
      } else {
        bool ok = std::none_of(members[b].begin(), members[b].end(), [&](Vertex u) { return adj[u][v]; });
        if (!ok) continue;
        members[b].push_back(v);
      }
      rgs[v - 1] = static_cast<int>(b);
      assign(v + 1);
      if (members[b].size() == 1)
        members.pop_back();
      else
        members[b].pop_back();
    }
  };
  assign(1);
}

inline std::vector<SetPartition> stable_partitions(const Multigraph& g) {
  std::vector<SetPartition> out;
  for_each_stable_partition(g, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

inline std::vector<SetPartition> stable_partitions(const SimpleGraph& g) {
  return stable_partitions(g.as_multigraph());
}

// ---------------------------------------------------------------------------
// Descending paths

/// p[r] = number of partitions of [k] into r blocks, each block the vertex set
/// of a path i_1 > i_2 > ... > i_l in g. Size k + 1.
inline std::vector<Int> descending_path_partitions(const SimpleGraph& g) {
  const int k = g.order();
  if (k > 20) throw std::invalid_argument("descending_path_partitions: more than 20 vertices");
  const std::uint32_t full = (k == 0) ? 0U : ((1U << k) - 1U);
  std::vector<char> feasible(std::size_t{1} << k, 0);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    // members in descending order must be consecutive neighbours
    int prev = -1;
    bool ok = true;
    for (int v = k; v >= 1 && ok; --v) {
      if (!(mask >> (v - 1) & 1U)) continue;
      if (prev != -1 && !g.has_edge(prev, v)) ok = false;
      prev = v;
    }
    feasible[mask] = ok;
  }
  std::vector<std::vector<std::uint64_t>> count(std::size_t{1} << k,
                                                std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
  count[0][0] = 1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const std::uint32_t low = mask & (~mask + 1U);
    const std::uint32_t rest = mask ^ low;
    // blocks containing the lowest element of mask
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t block = sub | low;
      if (feasible[block])
        for (int r = 1; r <= k; ++r) count[mask][r] += count[mask ^ block][r - 1];
      if (sub == 0) break;
    }
  }
  std::vector<Int> p(static_cast<std::size_t>(k) + 1);
  for (int r = 0; r <= k; ++r) p[r] = Int(count[full][r]);
  return p;
}

// ---------------------------------------------------------------------------
// Overlap graphs and lower degree sequences

using DegreeSequence = std::vector<int>;

struct OverlapGraph {
  SimpleGraph graph;
  std::vector<std::pair<Vertex, Vertex>> intervals;  // [min X_i, max X_i]
};

/// Interval graph of the blocks' spans, one vertex per block in block order.
inline OverlapGraph overlap_graph(const SetPartition& pi) {
  const int k = pi.size();
  OverlapGraph out{SimpleGraph(k), {}};
  for (const auto& b : pi.blocks()) out.intervals.emplace_back(b.front(), b.back());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (out.intervals[j].first <= out.intervals[i].second) out.graph.add_edge(i + 1, j + 1);
  return out;
}

/// d_i = number of earlier blocks overlapping block i.
inline DegreeSequence lower_degrees(const SetPartition& pi) {
  const auto og = overlap_graph(pi);
  DegreeSequence d(static_cast<std::size_t>(pi.size()), 0);
  for (int i = 1; i <= pi.size(); ++i)
    for (int j = 1; j < i; ++j)
      if (og.graph.has_edge(i, j)) ++d[i - 1];
  return d;
}

/// Positions i in [k-1] (1-based) with d_{i+1} > d_i.
inline std::vector<int> ascents(const DegreeSequence& d) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i + 1] > d[i]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

namespace detail {

inline bool has_lds_shape(const DegreeSequence& d) {
  if (d.empty()) return true;
  if (d[0] != 0) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (i + 1 < d.size() && d[i + 1] > d[i] + 1) return false;
  }
  return true;
}

}  // namespace detail

/// Whether d is the vertex-order lower degree sequence of some partition of [n].
inline bool is_vertex_order_lds(const DegreeSequence& d, int n) {
  const int k = static_cast<int>(d.size());
  if (k == 0) return n == 0;
  return detail::has_lds_shape(d) && n >= k + static_cast<int>(ascents(d).size());
}

/// Whether d is the sorted lower degree sequence of some partition of [n].
inline bool is_increasing_lds(const DegreeSequence& d, int n) {
  const int k = static_cast<int>(d.size());
  if (k == 0) return n == 0;
  if (!std::is_sorted(d.begin(), d.end())) return false;
  return detail::has_lds_shape(d) && n >= k + d.back();
}

/// Smallest ground set size realizing d: k + |A(d)|.
inline int realization_size(const DegreeSequence& d) {
  return static_cast<int>(d.size() + ascents(d).size());
}

/// Partition with blocks {a_i, b_i} whose vertex-order lower degree sequence
/// is d. With n > k + |A(d)|, the extra elements join the block holding the
/// largest element.
inline SetPartition realize_lds(const DegreeSequence& d, int n = -1) {
  if (!detail::has_lds_shape(d)) throw InvalidSequence("realize_lds: sequence violates the lower degree shape");
  const int k = static_cast<int>(d.size());
  const int nd = realization_size(d);
  if (n < 0) n = nd;
  if (n < nd) throw InvalidSequence("realize_lds: ground set too small for the sequence");
  if (k == 0) {
    if (n != 0) throw InvalidSequence("realize_lds: empty sequence needs an empty ground set");
    return SetPartition();
  }
  // 1-based with d_0 = d_{k+1} = 0
  std::vector<int> dd(static_cast<std::size_t>(k) + 2, 0);
  for (int i = 1; i <= k; ++i) dd[i] = d[i - 1];
  std::vector<int> t(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i) t[i] = t[i - 1] + ((i <= k - 1 && dd[i + 1] > dd[i]) ? 1 : 0);
  std::vector<std::vector<Vertex>> blocks;
  for (int i = 1; i <= k; ++i) {
    int m = i;
    while (dd[m + 1] > dd[i]) ++m;
    const int a = i + t[i - 1] - dd[i];
    const int b = m + t[m] - dd[i];
    blocks.push_back(a == b ? std::vector<Vertex>{a} : std::vector<Vertex>{a, b});
  }
  for (auto& b : blocks)
    if (b.back() == nd) {
      for (int extra = nd + 1; extra <= n; ++extra) b.push_back(extra);
      break;
    }
  return SetPartition(n, std::move(blocks));
}

}  // namespace gainchrom
