#pragma once
// Exact bivariate polynomials in (q, z) with arbitrary-precision integer
// coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gainchrom {

using Int = boost::multiprecision::cpp_int;

/// Exponent pair (deg_q, deg_z) of a monomial.
struct Exponents {
  unsigned dq = 0;
  unsigned dz = 0;
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded lexicographic order with q > z, highest term first.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = a.dq + a.dz;
    const unsigned db = b.dq + b.dz;
    if (da != db) return da > db;
    return a.dq > b.dq;
  }
};

/// Sparse polynomial in q and z over the integers. No stored coefficient is
/// zero; the zero polynomial has no terms.
class Poly2 {
 public:
  using TermMap = std::map<Exponents, Int, GradedLex>;

  Poly2() = default;
  Poly2(const Int& c) { add_term({0, 0}, c); }  // NOLINT: implicit constant
  template <std::integral T>
  Poly2(T c) : Poly2(Int(c)) {}  // NOLINT

  static Poly2 monomial(const Int& c, unsigned dq, unsigned dz) {
    Poly2 p;
    p.add_term({dq, dz}, c);
    return p;
  }
  static Poly2 q() { return monomial(1, 1, 0); }
  static Poly2 z() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// True when no term involves z.
  bool is_univariate() const {
    for (const auto& [e, c] : terms_)
      if (e.dz != 0) return false;
    return true;
  }

  unsigned degree_q() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.dq);
    return d;
  }
  unsigned degree_z() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.dz);
    return d;
  }
  unsigned total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.dq + terms_.begin()->first.dz;
  }

  Int coefficient(unsigned dq, unsigned dz = 0) const {
    auto it = terms_.find({dq, dz});
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(Exponents e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly2& operator*=(const Poly2& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(const Poly2& a) {
    Poly2 r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.dq + eb.dq, ea.dz + eb.dz}, ca * cb);
    return r;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  /// Exact value at an integer point.
  Int eval(const Int& qv, const Int& zv = 0) const {
    Int sum = 0;
    for (const auto& [e, c] : terms_) {
      Int t = c;
      for (unsigned i = 0; i < e.dq; ++i) t *= qv;
      for (unsigned i = 0; i < e.dz; ++i) t *= zv;
      sum += t;
    }
    return sum;
  }

 private:
  TermMap terms_;
};

/// Univariate polynomial in q, stored as a Poly2 with no z terms.
using Poly1 = Poly2;

inline Poly2 pow(const Poly2& base, unsigned exponent) {
  Poly2 result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// (x)_m = x(x-1)...(x-m+1) for a polynomial x; (x)_0 = 1.
inline Poly2 falling_factorial(const Poly2& x, unsigned m) {
  Poly2 result = 1;
  for (unsigned i = 0; i < m; ++i) result *= x - Poly2(static_cast<long long>(i));
  return result;
}

/// (q)_m.
inline Poly1 falling_factorial(unsigned m) { return falling_factorial(Poly2::q(), m); }

/// Replace q by q_image and z by z_image, expanding exactly.
inline Poly2 substitute(const Poly2& p, const Poly2& q_image, const Poly2& z_image) {
  std::vector<Poly2> qpow{Poly2(1)};
  std::vector<Poly2> zpow{Poly2(1)};
  for (unsigned i = 0; i < p.degree_q(); ++i) qpow.push_back(qpow.back() * q_image);
  for (unsigned i = 0; i < p.degree_z(); ++i) zpow.push_back(zpow.back() * z_image);
  Poly2 r;
  for (const auto& [e, c] : p.terms()) r += Poly2(c) * qpow[e.dq] * zpow[e.dz];
  return r;
}

/// Replace q by offset in a univariate polynomial, e.g. q -> q - z.
inline Poly2 substitute_shift(const Poly1& p, const Poly2& offset) {
  if (!p.is_univariate())
    throw std::invalid_argument("substitute_shift: polynomial involves z");
  return substitute(p, offset, Poly2::z());
}

/// Fix z to an integer, leaving a polynomial in q.
inline Poly1 specialize_z(const Poly2& p, const Int& zv) {
  Poly1 r;
  for (const auto& [e, c] : p.terms()) {
    Int t = c;
    for (unsigned i = 0; i < e.dz; ++i) t *= zv;
    r.add_term({e.dq, 0}, t);
  }
  return r;
}

namespace detail {

inline std::string monomial_string(const Exponents& e) {
  std::string out;
  auto var = [&](char v, unsigned d) {
    if (d == 0) return;
    if (!out.empty()) out += '*';
    out += v;
    if (d > 1) out += '^' + std::to_string(d);
  };
  var('q', e.dq);
  var('z', e.dz);
  return out;
}

}  // namespace detail

/// Render as e.g. `q^2 - 3*q + 2*z`, terms in graded-lex order.
inline std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool constant = e.dq == 0 && e.dz == 0;
    if (constant || mag != 1) {
      out += mag.str();
      if (!constant) out += '*';
    }
    if (!constant) out += detail::monomial_string(e);
  }
  return out;
}

/// Parse the output of to_string (and any sum of products of integers,
/// q, z with nonnegative integer powers).
inline Poly2 parse_poly(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const char* what) -> Poly2 {
    throw std::invalid_argument(std::string("parse_poly: ") + what + " at offset " +
                                std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  Poly2 result;
  skip();
  if (pos == text.size()) return fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      return fail("expected '+' or '-'");
    }
    first = false;
    Int coeff = 1;
    Exponents e;
    bool have_factor = false;
    while (true) {
      skip();
      if (pos == text.size()) break;
      char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= Int(read_uint());
      } else if (ch == 'q' || ch == 'z') {
        ++pos;
        unsigned d = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          std::string digits = read_uint();
          if (digits.empty()) return fail("expected exponent");
          d = static_cast<unsigned>(std::stoul(digits));
        }
        (ch == 'q' ? e.dq : e.dz) += d;
      } else {
        return fail("unexpected character");
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) return fail("missing term");
    result.add_term(e, negative ? Int(-coeff) : coeff);
  }
  return result;
}

}  // namespace gainchrom
