#pragma once

// Closed-form tileability of m x n rectangles by squares of side >= 2.
//
// Rows of height 2 and 4 admit only 2x2 squares, height 3 only 3x3 squares,
// height 5 exactly the lengths in the numerical semigroup <5, 6>, and every
// rectangle with one side >= 6 and the other >= 20 is tileable. What is left
// (both sides in [6, 19]) comes from an exhaustive search table.

#include <optional>
#include <stdexcept>
#include <string_view>

#include "sqtile/core.hpp"
#include "sqtile/search.hpp"

namespace sqtile {

/// n = 5 * fives + 6 * sixes.
struct FrobeniusRep {
  int fives = 0;
  int sixes = 0;

  constexpr int value() const { return 5 * fives + 6 * sixes; }
  friend constexpr bool operator==(const FrobeniusRep&, const FrobeniusRep&) = default;
};

/// Largest integer not expressible as 5i + 6j (i, j >= 0): 5*6 - 5 - 6.
inline constexpr int kFrobeniusNumber = 5 * 6 - 5 - 6;

/// A representation of n over {5, 6} using as many 5s as possible, or
/// nullopt when n is one of the ten gaps {1,2,3,4,7,8,9,13,14,19}.
constexpr std::optional<FrobeniusRep> frobenius_rep(int n) {
  if (n < 0) return std::nullopt;
  // n - 5i must be a multiple of 6; i is determined mod 6, take the largest.
  for (int i = n / 5; i >= 0; --i) {
    if ((n - 5 * i) % 6 == 0) return FrobeniusRep{i, (n - 5 * i) / 6};
  }
  return std::nullopt;
}

enum class Rule {
  even_even,
  row2_or_4,
  row3,
  row5_frobenius,
  small_table,
  large_theorem,
  too_thin,
};

constexpr std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::even_even: return "even_even";
    case Rule::row2_or_4: return "row2_or_4";
    case Rule::row3: return "row3";
    case Rule::row5_frobenius: return "row5_frobenius";
    case Rule::small_table: return "small_table";
    case Rule::large_theorem: return "large_theorem";
    case Rule::too_thin: return "too_thin";
  }
  return "?";
}

struct Verdict {
  bool tileable = false;
  Rule rule = Rule::too_thin;

  friend constexpr bool operator==(const Verdict&, const Verdict&) = default;
};

/// Sides up to which the search table is authoritative.
inline constexpr int kSmallTableMax = 19;

/// Search table for 2 <= m, n <= 19, computed once on first use.
inline const TileTable& small_table() {
  static const TileTable table = build_table(kSmallTableMax);
  return table;
}

inline Verdict decide_tileable(int m, int n, int min_side = kDefaultMinSide) {
  require_rect({m, n});
  if (min_side != kDefaultMinSide) {
    throw std::invalid_argument("decide_tileable only characterizes min_side = 2; use search");
  }
  const Rect c = Rect{m, n}.canonical();
  const int lo = c.m;
  const int hi = c.n;

  if (lo < 2) return {false, Rule::too_thin};
  if (lo == 2 || lo == 4) return {hi % 2 == 0, Rule::row2_or_4};
  if (lo == 3) return {hi % 3 == 0, Rule::row3};
  if (lo == 5) return {frobenius_rep(hi).has_value(), Rule::row5_frobenius};
  if (lo % 2 == 0 && hi % 2 == 0) return {true, Rule::even_even};
  if (hi <= kSmallTableMax) return {small_table().at(lo, hi), Rule::small_table};
  return {true, Rule::large_theorem};
}

}  // namespace sqtile
