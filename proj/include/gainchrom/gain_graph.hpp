#pragma once
// Integral and modular gain graphs and their structural operations:
// switching, deletion, contraction (neutral set, balanced set, partition),
// simplification, balance and circle gains.

#include "gainchrom/combinatorics.hpp"
#include "gainchrom/detail/balance_tracker.hpp"
#include "gainchrom/errors.hpp"
#include "gainchrom/set_partition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace gainchrom {

using Gain = std::int64_t;

/// Oriented edge tail -> head carrying gain; the reverse orientation carries
/// -gain.
struct GainEdge {
  Vertex tail = 1;
  Vertex head = 1;
  Gain gain = 0;

  bool is_loop() const { return tail == head; }
  friend auto operator<=>(const GainEdge&, const GainEdge&) = default;
};

/// Links stored with tail < head, loops with nonnegative gain.
inline GainEdge canonical_edge(GainEdge e) {
  if (e.tail > e.head) return {e.head, e.tail, -e.gain};
  if (e.tail == e.head && e.gain < 0) return {e.tail, e.head, -e.gain};
  return e;
}

/// Multigraph on 1..n with an integer gain on every edge. Every vertex carries
/// the set of original vertex names it stands for (itself unless contracted).
class IntegralGainGraph {
 public:
  IntegralGainGraph() = default;

  explicit IntegralGainGraph(int n, std::vector<GainEdge> edges = {}, std::vector<std::vector<Vertex>> labels = {})
      : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("IntegralGainGraph: negative order");
    for (auto& e : edges_) {
      if (e.tail < 1 || e.tail > n_ || e.head < 1 || e.head > n_)
        throw std::invalid_argument("IntegralGainGraph: edge endpoint out of range");
      e = canonical_edge(e);
    }
    if (labels_.empty()) {
      for (Vertex v = 1; v <= n_; ++v) labels_.push_back({v});
    } else if (static_cast<int>(labels_.size()) != n_) {
      throw std::invalid_argument("IntegralGainGraph: one label set per vertex required");
    }
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<GainEdge>& edges() const { return edges_; }
  const GainEdge& edge(std::size_t i) const { return edges_.at(i); }
  const std::vector<std::vector<Vertex>>& labels() const { return labels_; }

  EdgeSubset neutral_edges() const {
    EdgeSubset s;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].gain == 0) s.push_back(i);
    return s;
  }

  bool has_neutral_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const GainEdge& e) { return e.is_loop() && e.gain == 0; });
  }

  Multigraph underlying() const {
    Multigraph m{n_, {}};
    for (const auto& e : edges_) m.edges.emplace_back(e.tail, e.head);
    return m;
  }

  /// Spanning subgraph of neutral edges; its edge i is edge neutral_edges()[i].
  Multigraph neutral_subgraph() const {
    Multigraph m{n_, {}};
    for (const auto& e : edges_)
      if (e.gain == 0) m.edges.emplace_back(e.tail, e.head);
    return m;
  }

  friend bool operator==(const IntegralGainGraph&, const IntegralGainGraph&) = default;

 private:
  int n_ = 0;
  std::vector<GainEdge> edges_;
  std::vector<std::vector<Vertex>> labels_;
};

/// Gain graph over Z_m. Gains are kept in [0, m); links with tail < head.
class ModularGainGraph {
 public:
  ModularGainGraph(int n, Gain modulus, std::vector<GainEdge> edges = {})
      : n_(n), modulus_(modulus), edges_(std::move(edges)) {
    if (modulus_ < 1) throw std::invalid_argument("ModularGainGraph: modulus must be positive");
    if (n_ < 0) throw std::invalid_argument("ModularGainGraph: negative order");
    for (auto& e : edges_) {
      if (e.tail < 1 || e.tail > n_ || e.head < 1 || e.head > n_)
        throw std::invalid_argument("ModularGainGraph: edge endpoint out of range");
      if (e.tail > e.head) e = {e.head, e.tail, -e.gain};
      e.gain = reduce(e.gain);
    }
  }

  int order() const { return n_; }
  Gain modulus() const { return modulus_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<GainEdge>& edges() const { return edges_; }

  Gain reduce(Gain g) const {
    g %= modulus_;
    return g < 0 ? g + modulus_ : g;
  }

  friend bool operator==(const ModularGainGraph&, const ModularGainGraph&) = default;

 private:
  int n_;
  Gain modulus_;
  std::vector<GainEdge> edges_;
};

/// Gains reduced modulo m.
inline ModularGainGraph reduce_mod(const IntegralGainGraph& g, Gain m) {
  return ModularGainGraph(g.order(), m, g.edges());
}

/// Switching function eta; values[v-1] is eta(v).
struct SwitchingFunction {
  std::vector<Gain> values;

  Gain operator()(Vertex v) const { return values.at(static_cast<std::size_t>(v - 1)); }
};

// ---------------------------------------------------------------------------

namespace detail {

inline void check_subset(const IntegralGainGraph& g, const EdgeSubset& s) {
  for (std::size_t i : s)
    if (i >= g.size()) throw std::out_of_range("edge index out of range");
}

inline std::vector<char> subset_mask(const IntegralGainGraph& g, const EdgeSubset& s) {
  check_subset(g, s);
  std::vector<char> mask(g.size(), 0);
  for (std::size_t i : s) mask[i] = 1;
  return mask;
}

/// Identify vertices by block (0-based ids, ordered by least vertex) and drop
/// the edges marked in removed.
inline IntegralGainGraph collapse(const IntegralGainGraph& g, const std::vector<int>& block_of_vertex,
                                  const std::vector<char>& removed) {
  int blocks = 0;
  for (int b : block_of_vertex) blocks = std::max(blocks, b + 1);
  std::vector<std::vector<Vertex>> labels(static_cast<std::size_t>(blocks));
  for (Vertex v = 1; v <= g.order(); ++v) {
    auto& l = labels[block_of_vertex[v - 1]];
    const auto& src = g.labels()[v - 1];
    l.insert(l.end(), src.begin(), src.end());
  }
  for (auto& l : labels) std::sort(l.begin(), l.end());
  std::vector<GainEdge> edges;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (removed[i]) continue;
    const auto& e = g.edge(i);
    edges.push_back({block_of_vertex[e.tail - 1] + 1, block_of_vertex[e.head - 1] + 1, e.gain});
  }
  return IntegralGainGraph(blocks, std::move(edges), std::move(labels));
}

/// Block ids of the components of (V, s), numbered by least vertex.
inline std::vector<int> component_blocks(const IntegralGainGraph& g, const EdgeSubset& s) {
  const auto label = component_labels(g.underlying(), s);
  std::vector<int> id(static_cast<std::size_t>(g.order()) + 1, -1);
  std::vector<int> block(static_cast<std::size_t>(g.order()), 0);
  int next = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    int& b = id[label[v]];
    if (b < 0) b = next++;
    block[v - 1] = b;
  }
  return block;
}

}  // namespace detail

/// Replace every gain by -eta(tail) + gain + eta(head).
inline IntegralGainGraph switched(const IntegralGainGraph& g, const SwitchingFunction& eta) {
  if (static_cast<int>(eta.values.size()) != g.order())
    throw std::invalid_argument("switched: switching function must cover every vertex");
  std::vector<GainEdge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back({e.tail, e.head, -eta(e.tail) + e.gain + eta(e.head)});
  return IntegralGainGraph(g.order(), std::move(edges), g.labels());
}

inline IntegralGainGraph delete_edges(const IntegralGainGraph& g, const EdgeSubset& s) {
  const auto mask = detail::subset_mask(g, s);
  std::vector<GainEdge> edges;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!mask[i]) edges.push_back(g.edge(i));
  return IntegralGainGraph(g.order(), std::move(edges), g.labels());
}

inline IntegralGainGraph delete_neutral_edges(const IntegralGainGraph& g) { return delete_edges(g, g.neutral_edges()); }

struct ComponentStats {
  int components = 0;
  int balanced = 0;
  friend bool operator==(const ComponentStats&, const ComponentStats&) = default;
};

/// Components of the spanning subgraph (V, s) and how many are balanced.
inline ComponentStats components_stats(const IntegralGainGraph& g, const EdgeSubset& s) {
  detail::check_subset(g, s);
  detail::BalanceTracker t(g.order());
  for (std::size_t i : s) t.add_edge(g.edge(i).tail - 1, g.edge(i).head - 1, g.edge(i).gain);
  return {t.components(), t.balanced_components()};
}

/// Every circle inside s has gain 0.
inline bool is_balanced(const IntegralGainGraph& g, const EdgeSubset& s) {
  const auto st = components_stats(g, s);
  return st.components == st.balanced;
}

inline bool is_balanced(const IntegralGainGraph& g) {
  EdgeSubset all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return is_balanced(g, all);
}

/// Identify each component of the neutral set s to one vertex and delete s.
inline IntegralGainGraph contract_neutral_set(const IntegralGainGraph& g, const EdgeSubset& s) {
  const auto mask = detail::subset_mask(g, s);
  for (std::size_t i : s)
    if (g.edge(i).gain != 0)
      throw NonNeutralEdgeInSet("contract_neutral_set: edge " + std::to_string(i) + " has gain " +
                                std::to_string(g.edge(i).gain));
  return detail::collapse(g, detail::component_blocks(g, s), mask);
}

/// The switching function that neutralizes the balanced set s and vanishes at
/// the minimum of each component of (V, s). Potentials are propagated from
/// the first vertex of preferred_bases lying in a component, else from its
/// least vertex; the normalization makes the result independent of the base.
inline SwitchingFunction top_switching_function(const IntegralGainGraph& g, const EdgeSubset& s,
                                                const std::vector<Vertex>& preferred_bases = {}) {
  if (!is_balanced(g, s)) throw UnbalancedSet("top_switching_function: edge set is not balanced");
  const int n = g.order();
  std::vector<std::vector<std::pair<Vertex, Gain>>> adj(static_cast<std::size_t>(n) + 1);
  for (std::size_t i : s) {
    const auto& e = g.edge(i);
    adj[e.tail].emplace_back(e.head, -e.gain);  // eta(head) = eta(tail) - gain
    adj[e.head].emplace_back(e.tail, e.gain);
  }
  std::vector<Gain> eta(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> bases;
  for (Vertex v : preferred_bases)
    if (v >= 1 && v <= n) bases.push_back(v);
  for (Vertex v = 1; v <= n; ++v) bases.push_back(v);
  for (Vertex base : bases) {
    if (seen[base]) continue;
    seen[base] = 1;
    std::vector<Vertex> stack{base};
    std::vector<Vertex> members{base};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (auto [w, delta] : adj[u]) {
        if (seen[w]) continue;
        seen[w] = 1;
        eta[w] = eta[u] + delta;
        stack.push_back(w);
        members.push_back(w);
      }
    }
    Gain lowest = std::numeric_limits<Gain>::max();
    for (Vertex v : members) lowest = std::min(lowest, eta[v]);
    for (Vertex v : members) eta[v] -= lowest;
  }
  return SwitchingFunction{std::vector<Gain>(eta.begin() + 1, eta.end())};
}

/// Switch by the top switching function of s, then contract s as a neutral set.
inline IntegralGainGraph contract_balanced_set(const IntegralGainGraph& g, const EdgeSubset& s,
                                               const std::vector<Vertex>& preferred_bases = {}) {
  detail::check_subset(g, s);
  if (!is_balanced(g, s)) throw UnbalancedSet("contract_balanced_set: edge set is not balanced");
  return contract_neutral_set(switched(g, top_switching_function(g, s, preferred_bases)), s);
}

/// Identify each block of pi to one vertex, keeping every edge and its gain.
inline IntegralGainGraph contract_partition(const IntegralGainGraph& g, const SetPartition& pi) {
  if (pi.ground_size() != g.order()) throw std::invalid_argument("contract_partition: partition of the wrong set");
  return detail::collapse(g, pi.block_indices(), std::vector<char>(g.size(), 0));
}

/// Keep one edge from each class of parallel edges with equal gain.
inline IntegralGainGraph simplify(const IntegralGainGraph& g) {
  std::set<GainEdge> seen;
  std::vector<GainEdge> edges;
  for (const auto& e : g.edges())
    if (seen.insert(e).second) edges.push_back(e);
  return IntegralGainGraph(g.order(), std::move(edges), g.labels());
}

/// Add a neutral link between every pair of vertices not already joined by one.
inline IntegralGainGraph add_neutral_complete(const IntegralGainGraph& g) {
  const int n = g.order();
  std::vector<char> has(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0);
  for (const auto& e : g.edges())
    if (e.gain == 0 && !e.is_loop()) has[static_cast<std::size_t>(e.tail) * (n + 1) + e.head] = 1;
  auto edges = g.edges();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (!has[static_cast<std::size_t>(i) * (n + 1) + j]) edges.push_back({i, j, 0});
  return IntegralGainGraph(n, std::move(edges), g.labels());
}

/// Induced subgraph on the given vertices, renumbered in increasing order.
inline IntegralGainGraph induced_subgraph(const IntegralGainGraph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> index(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<std::vector<Vertex>> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 1 || vertices[i] > g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
    index[vertices[i]] = static_cast<int>(i) + 1;
    labels.push_back(g.labels()[vertices[i] - 1]);
  }
  std::vector<GainEdge> edges;
  for (const auto& e : g.edges())
    if (index[e.tail] && index[e.head]) edges.push_back({index[e.tail], index[e.head], e.gain});
  return IntegralGainGraph(static_cast<int>(vertices.size()), std::move(edges), std::move(labels));
}

/// b's vertices follow a's.
inline IntegralGainGraph disjoint_union(const IntegralGainGraph& a, const IntegralGainGraph& b) {
  const int shift = a.order();
  auto edges = a.edges();
  auto labels = a.labels();
  for (const auto& e : b.edges()) edges.push_back({e.tail + shift, e.head + shift, e.gain});
  for (auto l : b.labels()) {
    for (auto& v : l) v += shift;
    labels.push_back(std::move(l));
  }
  return IntegralGainGraph(a.order() + b.order(), std::move(edges), std::move(labels));
}

/// Largest |gain| of a circle (loops, digons of parallel edges and longer
/// simple cycles), i.e. the maximum over both orientations. Empty when the
/// graph has no circle.
inline std::optional<Gain> max_circle_gain(const IntegralGainGraph& g) {
  const int n = g.order();
  std::optional<Gain> best;
  auto offer = [&](Gain v) {
    if (!best || v > *best) best = v;
  };
  // per ordered pair: largest gain in the direction u -> v
  constexpr Gain kNone = std::numeric_limits<Gain>::min();
  std::vector<std::vector<Gain>> step(static_cast<std::size_t>(n) + 1, std::vector<Gain>(static_cast<std::size_t>(n) + 1, kNone));
  std::map<std::pair<Vertex, Vertex>, std::vector<Gain>> parallel;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      offer(e.gain < 0 ? -e.gain : e.gain);
      continue;
    }
    step[e.tail][e.head] = std::max(step[e.tail][e.head], e.gain);
    step[e.head][e.tail] = std::max(step[e.head][e.tail], -e.gain);
    parallel[{e.tail, e.head}].push_back(e.gain);
  }
  for (const auto& [pair, gains] : parallel)
    if (gains.size() >= 2) offer(*std::max_element(gains.begin(), gains.end()) - *std::min_element(gains.begin(), gains.end()));

  std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(Vertex, Vertex, int, Gain)> extend = [&](Vertex start, Vertex u, int length, Gain sum) {
    for (Vertex w = start; w <= n; ++w) {
      if (step[u][w] == kNone) continue;
      if (w == start) {
        if (length >= 2) offer(sum + step[u][w]);
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      extend(start, w, length + 1, sum + step[u][w]);
      on_path[w] = 0;
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    on_path[s] = 1;
    extend(s, s, 0, 0);
    on_path[s] = 0;
  }
  return best;
}

/// `n=3: (1,2,0) (1,2,1)` style rendering; stable for fixed input.
inline std::string to_string(const IntegralGainGraph& g) {
  std::string out = "n=" + std::to_string(g.order()) + ":";
  for (const auto& e : g.edges())
    out += " (" + std::to_string(e.tail) + "," + std::to_string(e.head) + "," + std::to_string(e.gain) + ")";
  return out;
}

}  // namespace gainchrom
