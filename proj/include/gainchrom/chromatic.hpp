#pragma once
// Chromatic functions of gain graphs: brute-force coloring counts (integral,
// modular, multi-zero), the algebraic total chromatic polynomial and its
// slices, the ordinary chromatic polynomial and region counts.

#include "gainchrom/combinatorics.hpp"
#include "gainchrom/detail/balance_tracker.hpp"
#include "gainchrom/errors.hpp"
#include "gainchrom/exact_poly.hpp"
#include "gainchrom/gain_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <span>
#include <vector>

namespace gainchrom {

inline constexpr std::size_t kDefaultEdgeBound = 26;

struct ExpansionOptions {
  std::size_t edge_bound = kDefaultEdgeBound;
  unsigned threads = 1;
};

namespace detail {

/// kappa(v) != kappa(earlier) + offset
struct ColorConstraint {
  int earlier;
  Gain offset;
};

enum class ColorDomain { kInterval, kCyclic };

struct ColoringProblem {
  int n = 0;
  long long q = 0;
  ColorDomain domain = ColorDomain::kInterval;
  bool impossible = false;
  std::vector<std::vector<ColorConstraint>> constraints;  // by 0-based vertex
};

inline long long mod(long long x, long long m) {
  x %= m;
  return x < 0 ? x + m : x;
}

inline ColoringProblem make_problem(const IntegralGainGraph& g, long long q, ColorDomain domain) {
  ColoringProblem p;
  p.n = g.order();
  p.q = q;
  p.domain = domain;
  p.constraints.resize(static_cast<std::size_t>(p.n));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      // kappa != kappa + gain fails only for a neutral loop
      const bool neutral = domain == ColorDomain::kInterval ? e.gain == 0 : mod(e.gain, q) == 0;
      if (neutral) p.impossible = true;
      continue;
    }
    // canonical: tail < head, so the head is colored later
    p.constraints[e.head - 1].push_back({e.tail - 1, e.gain});
  }
  return p;
}

/// Colors are 1..q (interval) or 0..q-1 (cyclic).
template <typename Visitor>
void enumerate_colorings(const ColoringProblem& p, Visitor&& visit) {
  if (p.impossible) return;
  if (p.n > 0 && p.q <= 0) return;
  std::vector<long long> color(static_cast<std::size_t>(p.n), 0);
  const long long lo = p.domain == ColorDomain::kInterval ? 1 : 0;
  const long long hi = p.domain == ColorDomain::kInterval ? p.q : p.q - 1;
  std::function<void(int)> rec = [&](int v) {
    if (v == p.n) {
      visit(std::span<const long long>(color));
      return;
    }
    for (long long c = lo; c <= hi; ++c) {
      bool ok = true;
      for (const auto& k : p.constraints[v]) {
        long long forbidden = color[k.earlier] + k.offset;
        if (p.domain == ColorDomain::kCyclic) forbidden = mod(forbidden, p.q);
        if (c == forbidden) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      rec(v + 1);
    }
  };
  rec(0);
}

/// Counts proper colorings, handling the last vertex in closed form.
inline Int count_colorings(const ColoringProblem& p) {
  if (p.impossible) return 0;
  if (p.n == 0) return 1;
  if (p.q <= 0) return 0;
  std::vector<long long> color(static_cast<std::size_t>(p.n), 0);
  const long long lo = p.domain == ColorDomain::kInterval ? 1 : 0;
  const long long hi = p.domain == ColorDomain::kInterval ? p.q : p.q - 1;
  Int total = 0;
  std::uint64_t chunk = 0;
  std::vector<long long> forbidden;
  auto forbidden_value = [&](const ColorConstraint& k) {
    long long f = color[k.earlier] + k.offset;
    return p.domain == ColorDomain::kCyclic ? mod(f, p.q) : f;
  };
  std::function<void(int)> rec = [&](int v) {
    if (v == p.n - 1) {
      forbidden.clear();
      for (const auto& k : p.constraints[v]) {
        const long long f = forbidden_value(k);
        if (f >= lo && f <= hi) forbidden.push_back(f);
      }
      std::sort(forbidden.begin(), forbidden.end());
      const auto distinct = std::unique(forbidden.begin(), forbidden.end()) - forbidden.begin();
      chunk += static_cast<std::uint64_t>(p.q - distinct);
      if (chunk > (std::uint64_t{1} << 62)) {
        total += chunk;
        chunk = 0;
      }
      return;
    }
    for (long long c = lo; c <= hi; ++c) {
      bool ok = true;
      for (const auto& k : p.constraints[v])
        if (c == forbidden_value(k)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      rec(v + 1);
    }
  };
  rec(0);
  total += chunk;
  return total;
}

struct CoefficientTable {
  int n = 0;
  std::vector<std::int64_t> cell;  // [b][c - b], signed subset counts
  explicit CoefficientTable(int order)
      : n(order), cell(static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order + 1), 0) {}
  std::int64_t& at(int b, int unbalanced) { return cell[static_cast<std::size_t>(b) * (n + 1) + unbalanced]; }
  void merge(const CoefficientTable& o) {
    for (std::size_t i = 0; i < cell.size(); ++i) cell[i] += o.cell[i];
  }
};

/// Sum over subsets of edges [from, end) added on top of the tracker state.
inline void expand_subsets(const std::vector<GainEdge>& edges, std::size_t from, BalanceTracker& t, bool odd,
                           CoefficientTable& table) {
  if (from == edges.size()) {
    const int b = t.balanced_components();
    table.at(b, t.components() - b) += odd ? -1 : 1;
    return;
  }
  expand_subsets(edges, from + 1, t, odd, table);
  const auto& e = edges[from];
  t.add_edge(e.tail - 1, e.head - 1, e.gain);
  expand_subsets(edges, from + 1, t, !odd, table);
  t.rollback();
}

inline Poly2 total_expansion(int n, const std::vector<GainEdge>& edges, Gain modulus, const ExpansionOptions& opts) {
  if (edges.size() > opts.edge_bound) throw TooManyEdges(edges.size(), opts.edge_bound);
  CoefficientTable table(n);
  std::size_t split = 0;
  if (opts.threads > 1) {
    while ((std::size_t{1} << split) < 4 * static_cast<std::size_t>(opts.threads) && split < edges.size() && split < 12)
      ++split;
  }
  if (split == 0) {
    BalanceTracker t(n, modulus);
    expand_subsets(edges, 0, t, false, table);
  } else {
    const std::size_t tasks = std::size_t{1} << split;
    const std::size_t workers = std::min<std::size_t>(opts.threads, tasks);
    std::vector<std::future<CoefficientTable>> futures;
    for (std::size_t w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        CoefficientTable local(n);
        for (std::size_t prefix = w; prefix < tasks; prefix += workers) {
          BalanceTracker t(n, modulus);
          bool odd = false;
          for (std::size_t i = 0; i < split; ++i)
            if (prefix >> i & 1U) {
              t.add_edge(edges[i].tail - 1, edges[i].head - 1, edges[i].gain);
              odd = !odd;
            }
          expand_subsets(edges, split, t, odd, local);
        }
        return local;
      }));
    }
    for (auto& f : futures) table.merge(f.get());
  }
  Poly2 p;
  for (int b = 0; b <= n; ++b)
    for (int u = 0; b + u <= n; ++u)
      p.add_term({static_cast<unsigned>(b), static_cast<unsigned>(u)}, Int(table.at(b, u)));
  return p;
}

/// Sum of (-1)^|S| q^c(S) over balanced edge sets S; an unbalanced set stays
/// unbalanced under further additions, so those branches are cut.
inline Poly1 balanced_expansion(int n, const std::vector<GainEdge>& edges, Gain modulus) {
  std::vector<std::int64_t> count(static_cast<std::size_t>(n) + 1, 0);
  BalanceTracker t(n, modulus);
  std::function<void(std::size_t, bool)> rec = [&](std::size_t from, bool odd) {
    if (from == edges.size()) {
      count[t.components()] += odd ? -1 : 1;
      return;
    }
    rec(from + 1, odd);
    const auto& e = edges[from];
    t.add_edge(e.tail - 1, e.head - 1, e.gain);
    if (t.all_balanced()) rec(from + 1, !odd);
    t.rollback();
  };
  rec(0, false);
  Poly1 p;
  for (int c = 0; c <= n; ++c) p.add_term({static_cast<unsigned>(c), 0}, Int(count[c]));
  return p;
}

}  // namespace detail

/// Proper colorations by [q]: kappa(head) != kappa(tail) + gain on every edge.
inline Int chi_integral(const IntegralGainGraph& g, long long q) {
  return detail::count_colorings(detail::make_problem(g, q, detail::ColorDomain::kInterval));
}

/// Proper colorations by Z_q.
inline Int chi_modular(const IntegralGainGraph& g, long long q) {
  if (q < 1) throw std::invalid_argument("chi_modular: q must be positive");
  return detail::count_colorings(detail::make_problem(g, q, detail::ColorDomain::kCyclic));
}

/// Visit every proper coloration by [q]; colors[v-1] is the color of v.
template <typename Visitor>
void for_each_integral_coloring(const IntegralGainGraph& g, long long q, Visitor&& visit) {
  detail::enumerate_colorings(detail::make_problem(g, q, detail::ColorDomain::kInterval),
                              std::forward<Visitor>(visit));
}

/// Sum over S of (-1)^|S| q^b(S) z^(c(S)-b(S)).
inline Poly2 total_chromatic_poly(const IntegralGainGraph& g, const ExpansionOptions& opts = {}) {
  return detail::total_expansion(g.order(), g.edges(), 0, opts);
}

/// Same expansion with balance decided in Z_m.
inline Poly2 total_chromatic_poly(const ModularGainGraph& g, const ExpansionOptions& opts = {}) {
  return detail::total_expansion(g.order(), g.edges(), g.modulus(), opts);
}

/// The z = 0 slice, computed from balanced edge sets only.
inline Poly1 zero_free_chromatic_poly(const IntegralGainGraph& g) {
  return detail::balanced_expansion(g.order(), g.edges(), 0);
}

inline Poly1 zero_free_chromatic_poly(const ModularGainGraph& g) {
  return detail::balanced_expansion(g.order(), g.edges(), g.modulus());
}

/// The z = 1 slice.
inline Poly1 chromatic_poly(const IntegralGainGraph& g, const ExpansionOptions& opts = {}) {
  return specialize_z(total_chromatic_poly(g, opts), 1);
}

/// Proper multi-zero colorations kappa: V -> (Z_m x [k]) u [z].
inline Int count_multizero(const ModularGainGraph& g, int k, int z) {
  if (k < 0 || z < 0) throw std::invalid_argument("count_multizero: k and z must be nonnegative");
  const int n = g.order();
  const long long m = g.modulus();
  const long long colors = static_cast<long long>(k) * m + z;
  // color c < z is null c; otherwise (t, h) = ((c - z) / m, (c - z) % m)
  auto conflict = [&](long long ct, long long ch, Gain gain) {
    if (ct < z || ch < z) return ct < z && ch < z && ct == ch;
    const long long t1 = (ct - z) / m, g1 = (ct - z) % m;
    const long long t2 = (ch - z) / m, g2 = (ch - z) % m;
    return t1 == t2 && g2 == detail::mod(g1 + gain, m);
  };
  std::vector<std::vector<std::pair<int, Gain>>> back(static_cast<std::size_t>(n));
  std::vector<std::vector<Gain>> loops(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    if (e.is_loop())
      loops[e.tail - 1].push_back(e.gain);
    else
      back[e.head - 1].push_back({e.tail - 1, e.gain});
  }
  std::vector<long long> color(static_cast<std::size_t>(n), 0);
  Int total = 0;
  std::uint64_t chunk = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      if (++chunk > (std::uint64_t{1} << 62)) {
        total += chunk;
        chunk = 0;
      }
      return;
    }
    for (long long c = 0; c < colors; ++c) {
      bool ok = true;
      for (Gain lg : loops[v])
        if (conflict(c, c, lg)) ok = false;
      for (auto [u, gain] : back[v])
        if (ok && conflict(color[u], c, gain)) ok = false;
      if (!ok) continue;
      color[v] = c;
      rec(v + 1);
    }
  };
  rec(0);
  return total + chunk;
}

/// Whitney expansion: sum over S of (-1)^|S| q^c(S). Zero when there is a loop.
inline Poly1 ordinary_chromatic_poly(const Multigraph& g, std::size_t edge_bound = kDefaultEdgeBound) {
  std::vector<GainEdge> edges;
  for (auto [u, v] : g.edges) edges.push_back({u, v, 0});
  return specialize_z(detail::total_expansion(g.n, edges, 0, {edge_bound, 1}), 0);
}

/// Proper colorings of an ordinary multigraph by q colors.
inline Int count_graph_colorings(const Multigraph& g, long long q) {
  std::vector<GainEdge> edges;
  for (auto [u, v] : g.edges) edges.push_back({u, v, 0});
  return chi_integral(IntegralGainGraph(g.n, std::move(edges)), q);
}

/// Regions of the affinographic arrangement: (-1)^n chi*(-1).
inline Int regions(const IntegralGainGraph& g) {
  const Int v = zero_free_chromatic_poly(g).eval(-1);
  return g.order() % 2 ? Int(-v) : v;
}

}  // namespace gainchrom
