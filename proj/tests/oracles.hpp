#pragma once
// Test-only ground truth: plain odometer enumeration of colorings and a
// direct region count for arrangements of at most three coordinates.

#include "gainchrom/gainchrom.hpp"

#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using gainchrom::Gain;
using gainchrom::IntegralGainGraph;

/// Calls visit(colors) for every map V -> {lo..hi}.
template <typename Visit>
void every_assignment(int n, long long lo, long long hi, Visit&& visit) {
  if (n > 0 && hi < lo) return;
  std::vector<long long> c(static_cast<std::size_t>(n), lo);
  while (true) {
    visit(c);
    int i = 0;
    while (i < n && c[i] == hi) c[i++] = lo;
    if (i == n) return;
    ++c[i];
  }
}

inline long long mod(long long x, long long m) { return ((x % m) + m) % m; }

inline long long integral_count(const IntegralGainGraph& g, long long q) {
  long long count = 0;
  every_assignment(g.order(), 1, q, [&](const std::vector<long long>& c) {
    for (const auto& e : g.edges())
      if (c[e.head - 1] == c[e.tail - 1] + e.gain) return;
    ++count;
  });
  return count;
}

inline long long modular_count(const IntegralGainGraph& g, long long q) {
  long long count = 0;
  every_assignment(g.order(), 0, q - 1, [&](const std::vector<long long>& c) {
    for (const auto& e : g.edges())
      if (mod(c[e.head - 1] - c[e.tail - 1] - e.gain, q) == 0) return;
    ++count;
  });
  return count;
}

/// Regions of {x_j - x_i = g} for n <= 3, working in y1 = x2 - x1,
/// y2 = x3 - x2. Every line is y1 = c, y2 = c or y1 + y2 = c, so all
/// intersection points are integral; regions = 1 + L + sum_p (m_p - 1).
inline long long region_count(const IntegralGainGraph& g) {
  if (g.order() <= 1) return 1;
  std::set<std::pair<int, Gain>> lines;  // direction 0: y1, 1: y2, 2: y1 + y2
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const int dir = (e.tail == 1 && e.head == 2) ? 0 : (e.tail == 2 && e.head == 3) ? 1 : 2;
    lines.insert({dir, e.gain});
  }
  if (g.order() == 2) return 1 + static_cast<long long>(lines.size());
  std::map<std::pair<Gain, Gain>, int> through;
  std::vector<std::pair<int, Gain>> ls(lines.begin(), lines.end());
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = a + 1; b < ls.size(); ++b) {
      if (ls[a].first == ls[b].first) continue;
      Gain y1 = 0, y2 = 0;
      const auto [da, ca] = ls[a];
      const auto [db, cb] = ls[b];
      if (da == 0 && db == 1) y1 = ca, y2 = cb;
      else if (da == 0 && db == 2) y1 = ca, y2 = cb - ca;
      else y2 = ca, y1 = cb - ca;  // da == 1, db == 2
      through[{y1, y2}] = 0;
    }
  long long regions = 1 + static_cast<long long>(lines.size());
  for (auto& [p, m] : through) {
    for (const auto& [d, c] : lines) {
      const Gain v = d == 0 ? p.first : d == 1 ? p.second : p.first + p.second;
      if (v == c) ++m;
    }
    regions += m - 1;
  }
  return regions;
}

}  // namespace oracle
