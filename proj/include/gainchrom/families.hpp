#pragma once
// Catalan, hollow Catalan, Shi, Linial and between-Shi-and-Catalan gain
// graphs with their closed-form chromatic functions.

#include "gainchrom/chromatic.hpp"
#include "gainchrom/combinatorics.hpp"
#include "gainchrom/errors.hpp"
#include "gainchrom/exact_poly.hpp"
#include "gainchrom/gain_graph.hpp"
#include "gainchrom/set_partition.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gainchrom {

enum class FamilyKind { catalan, hollow_catalan, shi, linial, sc_graph, sc_partition };

struct FamilySpec {
  FamilyKind kind = FamilyKind::shi;
  int n = 0;
  std::optional<SetPartition> partition;  // sc_partition
  std::optional<SimpleGraph> minus_edges;  // sc_graph
};

inline std::string_view family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::catalan: return "catalan";
    case FamilyKind::hollow_catalan: return "hollow-catalan";
    case FamilyKind::shi: return "shi";
    case FamilyKind::linial: return "linial";
    case FamilyKind::sc_graph:
    case FamilyKind::sc_partition: return "sc";
  }
  return "";
}

namespace detail {

inline void check_order(int n) {
  if (n < 1) throw std::invalid_argument("family order must be at least 1");
}

/// One edge (i, j, g) per gain for every i < j.
inline IntegralGainGraph complete_with_gains(int n, std::initializer_list<Gain> gains) {
  check_order(n);
  std::vector<GainEdge> edges;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      for (Gain g : gains) edges.push_back({i, j, g});
  return IntegralGainGraph(n, std::move(edges));
}

}  // namespace detail

inline IntegralGainGraph catalan(int n) { return detail::complete_with_gains(n, {0, 1, -1}); }
inline IntegralGainGraph hollow_catalan(int n) { return detail::complete_with_gains(n, {1, -1}); }
inline IntegralGainGraph shi(int n) { return detail::complete_with_gains(n, {0, 1}); }
inline IntegralGainGraph linial(int n) { return detail::complete_with_gains(n, {1}); }

/// Shi graph plus (i, j, -1) for every edge ij of g.
inline IntegralGainGraph sc_graph(const SimpleGraph& g) {
  auto edges = shi(g.order()).edges();
  for (auto [i, j] : g.edges()) edges.push_back({i, j, -1});
  return IntegralGainGraph(g.order(), std::move(edges));
}

/// The -1 edges sit on overlapping pairs of blocks.
inline IntegralGainGraph sc_partition(const SetPartition& pi) { return sc_graph(overlap_graph(pi).graph); }

inline IntegralGainGraph build(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::catalan: return catalan(spec.n);
    case FamilyKind::hollow_catalan: return hollow_catalan(spec.n);
    case FamilyKind::shi: return shi(spec.n);
    case FamilyKind::linial: return linial(spec.n);
    case FamilyKind::sc_graph:
      if (!spec.minus_edges) throw std::invalid_argument("sc_graph needs a graph of -1 edges");
      return sc_graph(*spec.minus_edges);
    case FamilyKind::sc_partition:
      if (!spec.partition) throw std::invalid_argument("sc_partition needs a partition");
      return sc_partition(*spec.partition);
  }
  throw std::invalid_argument("unknown family");
}

/// Closed forms and the least q from which each is claimed to hold.
struct ClosedForms {
  Poly1 integral;
  Poly1 modular;
  Poly1 zero_free;
  long long integral_valid_from = 0;
  long long modular_valid_from = 0;
};

inline ClosedForms shi_closed_forms(int n) {
  detail::check_order(n);
  const Poly1 q = Poly1::q();
  ClosedForms f;
  f.integral = pow(q - (n - 1), static_cast<unsigned>(n));
  f.zero_free = q * pow(q - n, static_cast<unsigned>(n - 1));
  f.modular = f.zero_free;
  f.integral_valid_from = n - 1;
  f.modular_valid_from = n + 1;
  return f;
}

/// Integral form is (q-n+1)_n; the shifted (q-n)_n already fails at n=2, q=4.
inline ClosedForms catalan_closed_forms(int n) {
  detail::check_order(n);
  const Poly1 q = Poly1::q();
  ClosedForms f;
  f.integral = falling_factorial(q - (n - 1), static_cast<unsigned>(n));
  f.zero_free = q * falling_factorial(q - (n + 1), static_cast<unsigned>(n - 1));
  f.modular = f.zero_free;
  f.integral_valid_from = n - 1;
  f.modular_valid_from = n + 1;
  return f;
}

inline ClosedForms hollow_catalan_closed_forms(int n) {
  detail::check_order(n);
  const Poly1 q = Poly1::q();
  ClosedForms f;
  Poly1 inner;
  for (int j = 1; j <= n; ++j) {
    const Poly1 s(stirling2(n, j));
    f.integral += s * falling_factorial(q - (j - 1), static_cast<unsigned>(j));
    inner += s * falling_factorial(q - (j + 1), static_cast<unsigned>(j - 1));
  }
  f.zero_free = q * inner;
  f.modular = f.zero_free;
  f.integral_valid_from = n - 1;
  f.modular_valid_from = n + 1;
  return f;
}

/// Sums over descending path partitions of the complement of g.
inline ClosedForms sc_path_closed_forms(const SimpleGraph& g) {
  const int n = g.order();
  detail::check_order(n);
  const auto p = descending_path_partitions(g.complement());
  const Poly1 q = Poly1::q();
  ClosedForms f;
  Poly1 inner;
  for (int r = 1; r <= n; ++r) {
    if (p[r] == 0) continue;
    f.integral += Poly1(p[r]) * falling_factorial(q - (n - 1), static_cast<unsigned>(r));
    inner += Poly1(p[r]) * falling_factorial(q - (n + 1), static_cast<unsigned>(r - 1));
  }
  f.zero_free = q * inner;
  f.modular = f.zero_free;
  f.integral_valid_from = n - 1;
  f.modular_valid_from = n + 1;
  return f;
}

inline ClosedForms sc_partition_closed_forms(const SetPartition& pi) {
  const int k = pi.size();
  detail::check_order(k);
  const auto d = lower_degrees(pi);
  const int max_d = *std::max_element(d.begin(), d.end());
  const Poly1 q = Poly1::q();
  ClosedForms f;
  f.integral = Poly1(1);
  f.zero_free = q;
  for (int i = 0; i < k; ++i) {
    f.integral *= q - (k - 1 + d[i]);
    if (i > 0) f.zero_free *= q - (k + d[i]);
  }
  f.modular = f.zero_free;
  f.integral_valid_from = k - 1 + max_d;
  f.modular_valid_from = k + max_d;
  return f;
}

inline ClosedForms linial_closed_forms(int n) {
  detail::check_order(n);
  ClosedForms f;
  for_each_set_partition(n, [&](const SetPartition& pi) {
    const auto part = sc_partition_closed_forms(pi);
    f.integral += part.integral;
    f.zero_free += part.zero_free;
  });
  f.modular = f.zero_free;
  f.integral_valid_from = n - 1;
  f.modular_valid_from = n;
  return f;
}

/// (q/2) sum_j C(n,j) ((q-j)/2)^(n-1), computed over the rationals.
inline Poly1 linial_athanasiadis(int n) {
  detail::check_order(n);
  using Rational = boost::multiprecision::cpp_rational;
  using RPoly = std::vector<Rational>;  // coefficient of q^i at index i
  auto times = [](const RPoly& a, const RPoly& b) {
    RPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  RPoly sum(static_cast<std::size_t>(n), Rational(0));
  for (int j = 0; j <= n; ++j) {
    RPoly term{Rational(binomial(n, j))};
    const RPoly half_shift{Rational(-j, 2), Rational(1, 2)};
    for (int i = 0; i < n - 1; ++i) term = times(term, half_shift);
    for (std::size_t i = 0; i < term.size(); ++i) sum[i] += term[i];
  }
  sum = times(sum, RPoly{Rational(0), Rational(1, 2)});
  Poly1 out;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (boost::multiprecision::denominator(sum[i]) != 1)
      throw NonIntegerResult("linial_athanasiadis: coefficient of q^" + std::to_string(i) + " is not an integer");
    out.add_term({static_cast<unsigned>(i), 0}, boost::multiprecision::numerator(sum[i]));
  }
  return out;
}

struct CatalanRegions {
  Int recurrence;
  Int direct;
  std::vector<Int> hollow;  // hollow[j-1] = regions of the hollow Catalan graph on j vertices
};

/// r_n = sum_j c(n,j) r'_j, checked against the direct count.
inline CatalanRegions catalan_regions(int n) {
  detail::check_order(n);
  CatalanRegions out;
  out.recurrence = 0;
  for (int j = 1; j <= n; ++j) {
    out.hollow.push_back(regions(hollow_catalan(j)));
    out.recurrence += cycle_count(n, j) * out.hollow.back();
  }
  out.direct = regions(catalan(n));
  if (out.recurrence != out.direct)
    throw std::logic_error("catalan_regions: recurrence and direct count disagree for n=" + std::to_string(n));
  return out;
}

}  // namespace gainchrom
