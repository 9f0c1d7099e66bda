#pragma once

// Explicit witness tilings for every tileable rectangle, at any size, built
// from a handful of fixed blocks instead of search:
//
//   * even x even: 2x2 squares
//   * 5 x n: a row of 5x5 squares and 5x6 blocks, n = 5i + 6j
//   * m, n >= 20: shave 5-wide strips until both sides are even
//   * 6 <= m <= 19, n >= 20: a searched base strip extended by m x 6 blocks

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqtile/core.hpp"
#include "sqtile/search.hpp"
#include "sqtile/theory.hpp"

namespace sqtile {

/// A row of 5-high blocks laid left to right.
struct StripPlan {
  enum class Block { block5x5, block5x6 };
  struct Segment {
    Block kind;
    int offset;
  };
  std::vector<Segment> segments;

  int length() const {
    int len = 0;
    for (const auto& s : segments) len += s.kind == Block::block5x5 ? 5 : 6;
    return len;
  }

  static StripPlan from(FrobeniusRep rep) {
    StripPlan plan;
    int offset = 0;
    for (int i = 0; i < rep.fives; ++i, offset += 5) plan.segments.push_back({Block::block5x5, offset});
    for (int j = 0; j < rep.sixes; ++j, offset += 6) plan.segments.push_back({Block::block5x6, offset});
    return plan;
  }
};

namespace detail {

// d x d squares in a grid; m and n must be multiples of d.
inline Tiling square_grid(int m, int n, int d) {
  Tiling t{{m, n}, {}};
  t.placements.reserve(static_cast<std::size_t>(m / d) * static_cast<std::size_t>(n / d));
  for (int y = 0; y < m; y += d)
    for (int x = 0; x < n; x += d) t.placements.push_back({x, y, d});
  return t;
}

inline void blit_grid(std::vector<Placement>& dst, int x0, int y0, int h, int w, int d) {
  for (int y = y0; y < y0 + h; y += d)
    for (int x = x0; x < x0 + w; x += d) dst.push_back({x, y, d});
}

// Smallest of {3, 5, 7} dividing g, or 0.
inline int small_odd_divisor(int g) {
  for (int d : {3, 5, 7})
    if (g % d == 0) return d;
  return 0;
}

}  // namespace detail

inline Tiling tile_even_even(int m, int n) {
  if (m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0) {
    throw std::domain_error("tile_even_even needs even sides >= 2, got " + std::to_string(m) +
                            "x" + std::to_string(n));
  }
  return detail::square_grid(m, n, 2);
}

/// The 5x6 block: whatever the deterministic search emits, checked to be two
/// 3x3 and three 2x2 squares.
inline const Tiling& block_5x6() {
  static const Tiling block = [] {
    auto found = find_tiling({5, 6});
    if (!found.tiling) throw std::logic_error("no 5x6 tiling found");
    int threes = 0, twos = 0;
    for (const auto& p : found.tiling->placements) {
      threes += p.side == 3;
      twos += p.side == 2;
    }
    if (threes != 2 || twos != 3 || found.tiling->placements.size() != 5) {
      throw std::logic_error("unexpected 5x6 block composition");
    }
    return *found.tiling;
  }();
  return block;
}

inline Tiling tile_5xn(int n) {
  const auto rep = frobenius_rep(n);
  if (!rep || n == 0) {
    throw std::domain_error("5x" + std::to_string(n) +
                            " is not tileable: " + std::to_string(n) +
                            " is a gap of the semigroup <5, 6> (Frobenius number 19)");
  }
  Tiling t{{5, n}, {}};
  for (const auto& seg : StripPlan::from(*rep).segments) {
    if (seg.kind == StripPlan::Block::block5x5) {
      t.placements.push_back({seg.offset, 0, 5});
    } else {
      blit(t.placements, block_5x6(), seg.offset, 0);
    }
  }
  t.sort();
  return t;
}

/// m x 6 column used to extend tilings: the 5x6 block over rows of 2x2 for
/// odd m, plain 2x2 for even m.
inline Tiling tile_mx6(int m) {
  if (m % 2 == 0 && m >= 2) return detail::square_grid(m, 6, 2);
  if (m < 5) throw std::domain_error("tile_mx6 needs m >= 5 or m even, got " + std::to_string(m));
  Tiling t{{m, 6}, {}};
  blit(t.placements, block_5x6(), 0, 0);
  detail::blit_grid(t.placements, 0, 5, m - 5, 6, 2);
  return t;
}

/// Both sides >= 20. Odd rows lose a 5 x n strip on top, odd columns a
/// 5-wide strip on the left; the even x even remainder takes 2x2 squares.
inline Tiling tile_large(int m, int n) {
  if (m < 20 || n < 20) {
    throw std::domain_error("tile_large needs m, n >= 20, got " + std::to_string(m) + "x" +
                            std::to_string(n));
  }
  Tiling t{{m, n}, {}};
  t.placements.reserve(static_cast<std::size_t>(Rect{m, n}.area() / 4 + 1));
  int top = 0;
  if (m % 2 != 0) {
    blit(t.placements, tile_5xn(n), 0, 0);
    top = 5;
  }
  int left = 0;
  if (n % 2 != 0) {
    blit(t.placements, transpose(tile_5xn(m - top)), 0, top);
    left = 5;
  }
  detail::blit_grid(t.placements, left, top, m - top, n - left, 2);
  t.sort();
  return t;
}

/// Appends tile_mx6(m) on the right of an m x n tiling.
inline Tiling extend_by_6(const Tiling& t) {
  Tiling out{{t.rect.m, t.rect.n + 6}, t.placements};
  blit(out.placements, tile_mx6(t.rect.m), t.rect.n, 0);
  out.sort();
  return out;
}

namespace detail {

// Searched tilings of m x b for 2 <= m, b <= 19, memoized.
class BaseCache {
 public:
  const Tiling& get(int m, int b) {
    std::lock_guard lock(mu_);
    auto it = cache_.find({m, b});
    if (it == cache_.end()) {
      auto found = find_tiling({m, b});
      if (!found.tiling) {
        throw std::logic_error("search found no tiling for table-tileable " +
                               std::to_string(m) + "x" + std::to_string(b));
      }
      it = cache_.emplace(std::pair{m, b}, std::move(*found.tiling)).first;
    }
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, Tiling> cache_;  // node-based: references stay valid
};

inline BaseCache& base_cache() {
  static BaseCache cache;
  return cache;
}

/// Strip lengths whose concatenation is the shortest base for an m x n
/// rectangle: base <= n, base = n (mod 6), each piece a table-tileable
/// m x b with b <= 19. Fewest pieces; ties go to the first piece found in
/// ascending order.
inline std::vector<int> base_pieces(int m, int n) {
  std::vector<int> pieces;
  for (int b = 2; b <= kSmallTableMax; ++b)
    if (small_table().at(m, b)) pieces.push_back(b);

  constexpr int kUnreached = -1;
  std::vector<int> count{0};
  std::vector<int> last{0};
  for (int len = 1; len <= n; ++len) {
    int best = kUnreached, via = 0;
    for (int p : pieces) {
      if (p > len || count[static_cast<std::size_t>(len - p)] == kUnreached) continue;
      const int c = count[static_cast<std::size_t>(len - p)] + 1;
      if (best == kUnreached || c < best) best = c, via = p;
    }
    count.push_back(best);
    last.push_back(via);
    if (best != kUnreached && (n - len) % 6 == 0) {
      std::vector<int> out;
      for (int l = len; l > 0; l -= last[static_cast<std::size_t>(l)]) out.push_back(last[static_cast<std::size_t>(l)]);
      std::reverse(out.begin(), out.end());
      return out;
    }
  }
  throw std::logic_error("no base strip for " + std::to_string(m) + "x" + std::to_string(n));
}

// 6 <= m <= 19, n >= 20.
inline Tiling tile_by_extension(int m, int n) {
  Tiling base{{m, 0}, {}};
  for (int b : base_pieces(m, n)) {
    blit(base.placements, base_cache().get(m, b), base.rect.n, 0);
    base.rect.n += b;
  }
  const Tiling column = tile_mx6(m);
  for (int x = base.rect.n; x < n; x += 6) blit(base.placements, column, x, 0);
  base.rect.n = n;
  base.sort();
  return base;
}

// lo <= hi, already known tileable.
inline Tiling construct_canonical(int lo, int hi) {
  if (lo % 2 == 0 && hi % 2 == 0) return tile_even_even(lo, hi);
  if (const int d = small_odd_divisor(std::gcd(lo, hi)); d != 0) return square_grid(lo, hi, d);
  if (lo == 5) return tile_5xn(hi);
  if (lo >= 20) return tile_large(lo, hi);
  if (hi <= kSmallTableMax) return base_cache().get(lo, hi);
  return tile_by_extension(lo, hi);
}

}  // namespace detail

/// A witness tiling of m x n, or nullopt exactly when decide_tileable says
/// the rectangle cannot be tiled. Uses only sides 2, 3, 5 and 7.
inline std::optional<Tiling> construct(int m, int n) {
  if (!decide_tileable(m, n).tileable) return std::nullopt;
  if (m <= n) return detail::construct_canonical(m, n);
  return transpose(detail::construct_canonical(n, m));
}

}  // namespace sqtile
