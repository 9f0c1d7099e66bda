#pragma once

// Reference implementations used only by tests. Each one is deliberately
// naive and shares no code path with the library routine it checks.

#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sqtile/core.hpp"

namespace sqtile::oracle {

/// Exact tiling by pairwise rectangle intersection plus area sum, no grid.
inline bool is_exact_tiling(const Tiling& t, int min_side) {
  if (t.rect.m < 1 || t.rect.n < 1) return false;
  long long area = 0;
  const auto& ps = t.placements;
  for (const auto& p : ps) {
    if (p.side < min_side || p.x < 0 || p.y < 0) return false;
    if (static_cast<long long>(p.x) + p.side > t.rect.n) return false;
    if (static_cast<long long>(p.y) + p.side > t.rect.m) return false;
    area += static_cast<long long>(p.side) * p.side;
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const auto& a = ps[i];
      const auto& b = ps[j];
      const bool disjoint = a.x + a.side <= b.x || b.x + b.side <= a.x ||
                            a.y + a.side <= b.y || b.y + b.side <= a.y;
      if (!disjoint) return false;
    }
  }
  return area == t.rect.area();
}

/// All (i, j) with 5i + 6j = n by enumeration.
inline std::vector<std::pair<int, int>> five_six_reps(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; 5 * i <= n; ++i)
    for (int j = 0; 5 * i + 6 * j <= n; ++j)
      if (5 * i + 6 * j == n) out.push_back({i, j});
  return out;
}

/// Guillotine closure as a plain fixpoint over a set of (m, n) pairs
/// (both orientations), joining every pair of members until nothing changes.
inline std::set<std::pair<int, int>> naive_closure(int max_dim, const std::set<int>& seeds) {
  std::set<std::pair<int, int>> s;
  for (int k : seeds)
    if (k <= max_dim) s.insert({k, k});
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<std::pair<int, int>> items(s.begin(), s.end());
    for (const auto& [a, b] : items) {
      for (const auto& [c, d] : items) {
        if (a == c && b + d <= max_dim) changed |= s.insert({a, b + d}).second;
        if (b == d && a + c <= max_dim) changed |= s.insert({a + c, b}).second;
      }
    }
  }
  std::set<std::pair<int, int>> canonical;
  for (const auto& [a, b] : s)
    if (a <= b) canonical.insert({a, b});
  return canonical;
}

inline std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace sqtile::oracle
