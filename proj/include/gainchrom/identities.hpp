#pragma once
// Machine checks of the reduction identities, evaluated through concrete
// chromatic functions (coloring counts at sampled q, or polynomials compared
// coefficientwise).

#include "gainchrom/chromatic.hpp"
#include "gainchrom/combinatorics.hpp"
#include "gainchrom/errors.hpp"
#include "gainchrom/exact_poly.hpp"
#include "gainchrom/families.hpp"
#include "gainchrom/gain_graph.hpp"
#include "gainchrom/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace gainchrom {

enum class ChromaticFunctionSelector { integral, modular, zero_free_poly, total_poly };

inline std::string_view selector_name(ChromaticFunctionSelector s) {
  switch (s) {
    case ChromaticFunctionSelector::integral: return "integral";
    case ChromaticFunctionSelector::modular: return "modular";
    case ChromaticFunctionSelector::zero_free_poly: return "zero-free";
    case ChromaticFunctionSelector::total_poly: return "total";
  }
  return "";
}

/// Counts at the sampled q, or a polynomial.
using CheckValue = std::variant<std::vector<Int>, Poly2>;

struct CheckReport {
  std::string identity_id;
  std::string instance;
  CheckValue lhs;
  CheckValue rhs;
  bool pass = false;
  std::optional<std::string> witness;
  std::vector<long long> sample_q;
};

inline std::string to_string(const CheckValue& v) {
  if (const auto* p = std::get_if<Poly2>(&v)) return to_string(*p);
  std::string out = "[";
  const auto& xs = std::get<std::vector<Int>>(v);
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].str();
  return out + "]";
}

/// q in {0, ..., 2n+3}; modular counts start at 1.
inline std::vector<long long> default_sample(int n, ChromaticFunctionSelector f) {
  std::vector<long long> qs;
  for (long long q = f == ChromaticFunctionSelector::modular ? 1 : 0; q <= 2LL * n + 3; ++q) qs.push_back(q);
  return qs;
}

namespace detail {

class Evaluator {
 public:
  Evaluator(ChromaticFunctionSelector f, std::vector<long long> qs) : f_(f), qs_(std::move(qs)) {}

  bool counting() const {
    return f_ == ChromaticFunctionSelector::integral || f_ == ChromaticFunctionSelector::modular;
  }

  CheckValue zero() const {
    if (counting()) return std::vector<Int>(qs_.size(), Int(0));
    return Poly2{};
  }

  CheckValue operator()(const IntegralGainGraph& g) const {
    switch (f_) {
      case ChromaticFunctionSelector::integral: {
        std::vector<Int> out;
        for (long long q : qs_) out.push_back(chi_integral(g, q));
        return out;
      }
      case ChromaticFunctionSelector::modular: {
        std::vector<Int> out;
        for (long long q : qs_) out.push_back(chi_modular(g, q));
        return out;
      }
      case ChromaticFunctionSelector::zero_free_poly: return zero_free_chromatic_poly(g);
      case ChromaticFunctionSelector::total_poly: return total_chromatic_poly(g);
    }
    return zero();
  }

  /// acc += c * v
  static void add(CheckValue& acc, const Int& c, const CheckValue& v) {
    if (auto* p = std::get_if<Poly2>(&acc)) {
      *p += Poly2(c) * std::get<Poly2>(v);
      return;
    }
    auto& a = std::get<std::vector<Int>>(acc);
    const auto& b = std::get<std::vector<Int>>(v);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
  }

  const std::vector<long long>& sample() const { return qs_; }

 private:
  ChromaticFunctionSelector f_;
  std::vector<long long> qs_;
};

/// Where two values first differ.
inline std::optional<std::string> difference(const CheckValue& a, const CheckValue& b,
                                             const std::vector<long long>& qs) {
  if (a == b) return std::nullopt;
  if (const auto* pa = std::get_if<std::vector<Int>>(&a)) {
    const auto& pb = std::get<std::vector<Int>>(b);
    for (std::size_t i = 0; i < pa->size(); ++i)
      if ((*pa)[i] != pb[i]) return "q=" + std::to_string(qs[i]);
  }
  return "polynomials differ: " + to_string(a) + " vs " + to_string(b);
}

inline CheckReport report(std::string id, std::string instance, CheckValue lhs, CheckValue rhs,
                          const std::vector<long long>& qs, bool counting) {
  CheckReport r;
  r.identity_id = std::move(id);
  r.instance = std::move(instance);
  r.witness = difference(lhs, rhs, qs);
  r.pass = !r.witness;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  if (counting) r.sample_q = qs;
  return r;
}

inline std::string describe(const IntegralGainGraph& g, ChromaticFunctionSelector f) {
  return to_string(g) + " [" + std::string(selector_name(f)) + "]";
}

inline IntegralGainGraph edgeless(int n) { return IntegralGainGraph(n); }

}  // namespace detail

/// Whitney form = stable-partition form, plus coloring counts for q = 0..n+2.
inline CheckReport check_graph_lemma(const Multigraph& g) {
  const Poly1 whitney = ordinary_chromatic_poly(g);
  Poly1 stable;
  for_each_stable_partition(g, [&](const SetPartition& pi) {
    stable += falling_factorial(static_cast<unsigned>(pi.size()));
  });
  std::vector<long long> qs;
  for (long long q = 0; q <= g.n + 2; ++q) qs.push_back(q);
  auto r = detail::report("graph-lemma", "n=" + std::to_string(g.n) + " m=" + std::to_string(g.edges.size()),
                          whitney, stable, qs, false);
  if (r.pass) {
    for (long long q : qs)
      if (whitney.eval(q) != count_graph_colorings(g, q)) {
        r.pass = false;
        r.witness = "coloring count differs at q=" + std::to_string(q);
        break;
      }
  }
  return r;
}

/// F(Phi) against the alternating sum over neutral subsets and the Moebius sum
/// over flats of the neutral subgraph.
inline CheckReport check_theorem_first(const IntegralGainGraph& g, ChromaticFunctionSelector f,
                                       const std::vector<long long>& sample_q) {
  const detail::Evaluator F(f, sample_q);
  const auto neutral = g.neutral_edges();
  if (neutral.size() > 20) throw TooManyEdges(neutral.size(), 20);
  auto minor = [&](const EdgeSubset& s) { return delete_neutral_edges(contract_neutral_set(g, s)); };

  CheckValue subset_form = F.zero();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << neutral.size()); ++mask) {
    EdgeSubset s;
    for (std::size_t i = 0; i < neutral.size(); ++i)
      if (mask >> i & 1U) s.push_back(neutral[i]);
    detail::Evaluator::add(subset_form, s.size() % 2 ? -1 : 1, F(minor(s)));
  }

  const Multigraph g0 = g.neutral_subgraph();
  CheckValue mobius_form = F.zero();
  std::optional<std::string> flat_failure;
  for (const auto& flat : closed_sets(g0)) {
    const Int mu = mobius_flats(g0, {}, flat);
    if (mu != mobius_by_closure_sum(g0, flat)) flat_failure = "moebius value mismatch on a flat";
    if (mu == 0) continue;
    EdgeSubset s;
    for (std::size_t i : flat) s.push_back(neutral[i]);
    detail::Evaluator::add(mobius_form, mu, F(minor(s)));
  }

  auto r = detail::report("theorem-first", detail::describe(g, f), F(g), subset_form, sample_q, F.counting());
  if (r.pass && subset_form != mobius_form) {
    r.pass = false;
    r.witness = "moebius form differs: " + to_string(mobius_form);
  }
  if (r.pass && flat_failure) {
    r.pass = false;
    r.witness = flat_failure;
  }
  return r;
}

/// F(Phi) against the sum over stable partitions of the neutral subgraph.
inline CheckReport check_theorem_second(const IntegralGainGraph& g, ChromaticFunctionSelector f,
                                        const std::vector<long long>& sample_q) {
  const detail::Evaluator F(f, sample_q);
  CheckValue rhs = F.zero();
  for_each_stable_partition(g.neutral_subgraph(), [&](const SetPartition& pi) {
    detail::Evaluator::add(rhs, 1, F(add_neutral_complete(contract_partition(g, pi))));
  });
  return detail::report("theorem-second", detail::describe(g, f), F(g), rhs, sample_q, F.counting());
}

/// Both expansions over the full partition lattice; g must have no neutral edge.
inline CheckReport check_corollary_complete(const IntegralGainGraph& g, ChromaticFunctionSelector f,
                                            const std::vector<long long>& sample_q) {
  if (!g.neutral_edges().empty()) throw NeutralEdgePresent("check_corollary_complete: graph has a neutral edge");
  const detail::Evaluator F(f, sample_q);
  CheckValue mobius_side = F.zero();
  CheckValue completion_side = F.zero();
  for_each_set_partition(g.order(), [&](const SetPartition& pi) {
    const auto quotient = contract_partition(g, pi);
    detail::Evaluator::add(mobius_side, mobius_partition(pi), F(quotient));
    detail::Evaluator::add(completion_side, 1, F(add_neutral_complete(quotient)));
  });
  const CheckValue completed = F(add_neutral_complete(g));
  auto r = detail::report("corollary-complete", detail::describe(g, f), completed, mobius_side, sample_q,
                          F.counting());
  if (r.pass) {
    if (auto w = detail::difference(F(g), completion_side, sample_q)) {
      r.pass = false;
      r.witness = "second identity: " + *w;
    }
  }
  return r;
}

/// F(C'_n) = sum S(n,j) F(C_j) and F(C_n) = sum s(n,j) F(C'_j).
inline CheckReport check_prop_catalan(int n, ChromaticFunctionSelector f, const std::vector<long long>& sample_q) {
  const detail::Evaluator F(f, sample_q);
  CheckValue hollow_side = F.zero();
  CheckValue full_side = F.zero();
  for (int j = 1; j <= n; ++j) {
    detail::Evaluator::add(hollow_side, stirling2(n, j), F(catalan(j)));
    detail::Evaluator::add(full_side, stirling1_signed(n, j), F(hollow_catalan(j)));
  }
  const std::string instance = "n=" + std::to_string(n) + " [" + std::string(selector_name(f)) + "]";
  auto r = detail::report("prop-catalan", instance, F(hollow_catalan(n)), hollow_side, sample_q, F.counting());
  if (r.pass) {
    if (auto w = detail::difference(F(catalan(n)), full_side, sample_q)) {
      r.pass = false;
      r.witness = "inverse identity: " + *w;
    }
  }
  return r;
}

/// F(L_n) = sum over partitions of F(SC(Gamma_pi)).
inline CheckReport check_linial_expansion(int n, ChromaticFunctionSelector f,
                                          const std::vector<long long>& sample_q) {
  const detail::Evaluator F(f, sample_q);
  CheckValue rhs = F.zero();
  for_each_set_partition(n, [&](const SetPartition& pi) { detail::Evaluator::add(rhs, 1, F(sc_partition(pi))); });
  return detail::report("linial-expansion", "n=" + std::to_string(n) + " [" + std::string(selector_name(f)) + "]",
                        F(linial(n)), rhs, sample_q, F.counting());
}

namespace detail {

inline std::vector<Vertex> members(int n, std::uint32_t mask, bool inside) {
  std::vector<Vertex> out;
  for (int v = 1; v <= n; ++v)
    if (static_cast<bool>(mask >> (v - 1) & 1U) == inside) out.push_back(v);
  return out;
}

/// p(q - z) for a polynomial p in q.
inline Poly2 shifted(const Poly1& p) { return substitute(p, Poly2::q() - Poly2::z(), Poly2(0)); }

/// p(z) for a polynomial p in q.
inline Poly2 in_z(const Poly1& p) { return substitute(p, Poly2::z(), Poly2(0)); }

}  // namespace detail

/// Total polynomial against the sum over vertex subsets W of
/// chi(underlying graph on W^c)(z) * zero-free(Phi|W)(q - z).
inline CheckReport check_total_expansion(const IntegralGainGraph& g, const ExpansionOptions& opts = {}) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("check_total_expansion: too many vertices");
  Poly2 rhs;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto w = induced_subgraph(g, detail::members(n, mask, true));
    const auto rest = induced_subgraph(g, detail::members(n, mask, false));
    rhs += detail::in_z(ordinary_chromatic_poly(rest.underlying(), opts.edge_bound)) *
           detail::shifted(zero_free_chromatic_poly(w));
  }
  return detail::report("total-expansion", to_string(g), total_chromatic_poly(g, opts), rhs, {}, false);
}

/// Uniform expansion sum_j C(n,j) (z)_{n-j} zero-free(Phi_j)(q - z) for a
/// family, together with the complete-graph expansion over vertex subsets.
inline CheckReport check_total_complete_uniform(FamilyKind family, int n) {
  if (family == FamilyKind::sc_graph || family == FamilyKind::sc_partition)
    throw std::invalid_argument("check_total_complete_uniform: family is not uniform");
  auto member = [&](int j) { return j == 0 ? detail::edgeless(0) : build(FamilySpec{family, j, {}, {}}); };
  const auto g = member(n);
  const Poly2 z = Poly2::z();
  Poly2 uniform;
  for (int j = 0; j <= n; ++j)
    uniform += Poly2(binomial(n, j)) * falling_factorial(z, static_cast<unsigned>(n - j)) *
               detail::shifted(zero_free_chromatic_poly(member(j)));
  Poly2 complete;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto w = detail::members(n, mask, true);
    complete += falling_factorial(z, static_cast<unsigned>(n - static_cast<int>(w.size()))) *
                detail::shifted(zero_free_chromatic_poly(induced_subgraph(g, w)));
  }
  const Poly2 total = total_chromatic_poly(g);
  auto r = detail::report("total-complete-uniform", std::string(family_name(family)) + " n=" + std::to_string(n),
                          total, uniform, {}, false);
  if (r.pass && complete != total) {
    r.pass = false;
    r.witness = "complete expansion differs: " + to_string(complete);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Fixture corpus and the invariance suite

namespace detail {

inline std::vector<GainEdge> relabeled(const std::vector<GainEdge>& edges, const std::vector<Vertex>& perm) {
  std::vector<GainEdge> out;
  for (const auto& e : edges) out.push_back(canonical_edge({perm[e.tail - 1], perm[e.head - 1], e.gain}));
  std::sort(out.begin(), out.end());
  return out;
}

/// Greatest edge list over all relabelings.
inline std::vector<GainEdge> isomorphism_key(int n, const std::vector<GainEdge>& edges) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<GainEdge> best = relabeled(edges, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::max(best, relabeled(edges, perm));
  return best;
}

}  // namespace detail

/// Every gain graph with 1..3 vertices whose edges are distinct links of gain
/// -1, 0, 1 and loops of gain 0, 1, with at most 4 edges, one per
/// isomorphism class.
inline std::vector<IntegralGainGraph> fixture_corpus(int max_order = 3, std::size_t max_edges = 4) {
  std::vector<IntegralGainGraph> out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<GainEdge> kinds;
    for (Vertex v = 1; v <= n; ++v)
      for (Gain g : {0, 1}) kinds.push_back({v, v, g});
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = i + 1; j <= n; ++j)
        for (Gain g : {-1, 0, 1}) kinds.push_back({i, j, g});
    std::set<std::vector<GainEdge>> seen;
    std::vector<GainEdge> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      auto key = detail::isomorphism_key(n, chosen);
      if (seen.insert(key).second) out.emplace_back(n, std::move(key));
      if (chosen.size() == max_edges) return;
      for (std::size_t i = from; i < kinds.size(); ++i) {
        chosen.push_back(kinds[i]);
        rec(i + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

namespace detail {

struct Tally {
  std::string id;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> witness;

  void record(bool ok, const std::function<std::string()>& why) {
    ++checked;
    if (ok) return;
    ++failed;
    if (!witness) witness = why();
  }

  CheckReport finish(const std::string& instance) const {
    CheckReport r;
    r.identity_id = id;
    r.instance = instance;
    r.lhs = std::vector<Int>{Int(checked - failed)};
    r.rhs = std::vector<Int>{Int(checked)};
    r.pass = failed == 0;
    r.witness = witness;
    return r;
  }
};

inline std::vector<Int> counts(const IntegralGainGraph& g, long long from, long long to, bool modular) {
  std::vector<Int> out;
  for (long long q = from; q <= to; ++q) out.push_back(modular ? chi_modular(g, q) : chi_integral(g, q));
  return out;
}

inline IntegralGainGraph without_nonneutral_loops(const IntegralGainGraph& g) {
  std::vector<GainEdge> edges;
  for (const auto& e : g.edges())
    if (!(e.is_loop() && e.gain != 0)) edges.push_back(e);
  return IntegralGainGraph(g.order(), std::move(edges), g.labels());
}

inline IntegralGainGraph doubled(const IntegralGainGraph& g) {
  auto edges = g.edges();
  edges.insert(edges.end(), g.edges().begin(), g.edges().end());
  return IntegralGainGraph(g.order(), std::move(edges), g.labels());
}

inline SwitchingFunction random_switching(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Gain> dist(-5, 5);
  SwitchingFunction eta;
  for (int v = 0; v < n; ++v) eta.values.push_back(dist(rng));
  return eta;
}

}  // namespace detail

inline constexpr long long kCorpusMaxQ = 9;

/// chi_modular equals the zero-free polynomial for M < q <= M + 4, M the
/// largest circle gain (0 without circles).
inline CheckReport check_modular_threshold(const IntegralGainGraph& g) {
  const Gain m = max_circle_gain(g).value_or(0);
  const Poly1 zf = zero_free_chromatic_poly(g);
  std::vector<long long> qs;
  std::vector<Int> lhs, rhs;
  for (long long q = std::max<long long>(m + 1, 1); q <= m + 4; ++q) {
    qs.push_back(q);
    lhs.push_back(chi_modular(g, q));
    rhs.push_back(zf.eval(q));
  }
  return detail::report("modular-threshold", to_string(g), lhs, rhs, qs, true);
}

/// Multi-zero counts of the mod-m reduction against its total polynomial.
inline CheckReport check_multizero_agreement(const IntegralGainGraph& g, Gain m, int max_k = 2, int max_z = 2) {
  const auto reduced = reduce_mod(g, m);
  const Poly2 total = total_chromatic_poly(reduced);
  std::vector<Int> lhs, rhs;
  for (int k = 0; k <= max_k; ++k)
    for (int z = 0; z <= max_z; ++z) {
      lhs.push_back(count_multizero(reduced, k, z));
      rhs.push_back(total.eval(Int(k) * m + z, z));
    }
  auto r = detail::report("multizero-agreement", to_string(g) + " mod " + std::to_string(m), lhs, rhs, {}, true);
  if (!r.pass) {
    const auto& a = std::get<std::vector<Int>>(r.lhs);
    const auto& b = std::get<std::vector<Int>>(r.rhs);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) {
        r.witness = "k=" + std::to_string(i / (max_z + 1)) + " z=" + std::to_string(i % (max_z + 1));
        break;
      }
  }
  return r;
}

/// Total polynomial of random disjoint unions against the product.
inline CheckReport check_total_multiplicative(const std::vector<IntegralGainGraph>& corpus, int trials,
                                              std::uint64_t seed) {
  detail::Tally t{"total-multiplicative", 0, 0, std::nullopt};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  for (int i = 0; i < trials; ++i) {
    const auto& a = corpus[pick(rng)];
    const auto& b = corpus[pick(rng)];
    const auto u = disjoint_union(a, b);
    t.record(total_chromatic_poly(u) == total_chromatic_poly(a) * total_chromatic_poly(b),
             [&] { return to_string(a) + " + " + to_string(b); });
  }
  return t.finish(std::to_string(trials) + " random unions");
}

/// Every chromatic-function invariant over the corpus. Integral counts use
/// q = 0..9, modular counts q = 1..9 (q >= 2 where loops are dropped).
inline std::vector<CheckReport> run_invariance_suite(const std::vector<IntegralGainGraph>& corpus,
                                                     int switchings = 100, std::uint64_t seed = 20240607) {
  using detail::counts;
  const long long top = kCorpusMaxQ;
  detail::Tally nullity{"neutral-loop-nullity", 0, 0, std::nullopt};
  detail::Tally dc{"neutral-deletion-contraction", 0, 0, std::nullopt};
  detail::Tally switching{"switching-invariance", 0, 0, std::nullopt};
  detail::Tally witness{"integral-switching-witness", 0, 0, std::nullopt};
  detail::Tally simplification{"simplification-invariance", 0, 0, std::nullopt};
  detail::Tally loops{"loop-independence", 0, 0, std::nullopt};
  detail::Tally threshold{"modular-threshold", 0, 0, std::nullopt};
  detail::Tally multizero{"multizero-agreement", 0, 0, std::nullopt};
  std::mt19937_64 rng(seed);
  std::optional<std::string> integral_witness;

  for (const auto& g : corpus) {
    const auto name = [&] { return to_string(g); };
    const auto integral = counts(g, 0, top, false);
    const auto modular = counts(g, 1, top, true);
    const Poly2 total = total_chromatic_poly(g);
    const Poly1 zero_free = zero_free_chromatic_poly(g);

    if (g.has_neutral_loop()) {
      const bool zero = std::all_of(integral.begin(), integral.end(), [](const Int& x) { return x == 0; }) &&
                        std::all_of(modular.begin(), modular.end(), [](const Int& x) { return x == 0; }) &&
                        total.is_zero() && zero_free.is_zero();
      nullity.record(zero, name);
    }

    for (std::size_t i : g.neutral_edges()) {
      if (g.edge(i).is_loop()) continue;
      const auto del = delete_edges(g, {i});
      const auto con = contract_neutral_set(g, {i});
      auto minus = [](std::vector<Int> a, const std::vector<Int>& b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
        return a;
      };
      const bool ok = integral == minus(counts(del, 0, top, false), counts(con, 0, top, false)) &&
                      modular == minus(counts(del, 1, top, true), counts(con, 1, top, true)) &&
                      total == total_chromatic_poly(del) - total_chromatic_poly(con);
      dc.record(ok, [&] { return name() + " edge " + std::to_string(i); });
    }

    for (int s = 0; s < switchings; ++s) {
      const auto eta = detail::random_switching(g.order(), rng);
      const auto h = switched(g, eta);
      const bool ok = modular == counts(h, 1, top, true) && zero_free == zero_free_chromatic_poly(h) &&
                      total == total_chromatic_poly(h);
      switching.record(ok, name);
      if (!integral_witness) {
        const auto other = counts(h, 0, top, false);
        for (long long q = 0; q <= top; ++q)
          if (other[q] != integral[q]) {
            integral_witness = name() + " vs " + to_string(h) + " at q=" + std::to_string(q) + ": " +
                               integral[q].str() + " vs " + other[q].str();
            break;
          }
      }
    }

    {
      const auto d = detail::doubled(g);
      const auto s = simplify(d);
      const bool ok = integral == counts(d, 0, top, false) && integral == counts(s, 0, top, false) &&
                      modular == counts(d, 1, top, true) && modular == counts(s, 1, top, true) &&
                      total == total_chromatic_poly(d) && total == total_chromatic_poly(s);
      simplification.record(ok, name);
    }

    {
      const auto bare = detail::without_nonneutral_loops(g);
      const auto mod_from_2 = std::vector<Int>(modular.begin() + 1, modular.end());
      const bool ok = integral == counts(bare, 0, top, false) && mod_from_2 == counts(bare, 2, top, true) &&
                      zero_free == zero_free_chromatic_poly(bare);
      loops.record(ok, name);
    }

    const auto th = check_modular_threshold(g);
    threshold.record(th.pass, [&] { return name() + " " + th.witness.value_or(""); });

    for (Gain m : {2, 3, 5}) {
      const auto mz = check_multizero_agreement(g, m);
      multizero.record(mz.pass, [&] { return mz.instance + " " + mz.witness.value_or(""); });
    }
  }

  witness.record(integral_witness.has_value(), [] { return std::string("no pair found"); });
  witness.witness = integral_witness;

  const std::string instance = std::to_string(corpus.size()) + " graphs";
  std::vector<CheckReport> out;
  for (const auto* t : {&nullity, &dc, &switching, &witness, &simplification, &loops, &threshold, &multizero})
    out.push_back(t->finish(instance));
  out.push_back(check_total_multiplicative(corpus, 50, seed + 1));
  return out;
}

}  // namespace gainchrom
