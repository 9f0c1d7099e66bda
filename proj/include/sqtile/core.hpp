#pragma once

// Domain types for squared rectangles and an independent exactness checker.
//
// Coordinates: x is the column of a square's left edge, y the row of its top
// edge, origin top-left, y grows downward. A rectangle is m rows by n columns.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace sqtile {

inline constexpr int kDefaultMinSide = 2;

struct Rect {
  int m = 0;  // rows (height)
  int n = 0;  // columns (width)

  constexpr std::int64_t area() const { return std::int64_t{m} * n; }
  constexpr Rect transposed() const { return {n, m}; }
  constexpr Rect canonical() const { return m <= n ? *this : transposed(); }

  friend constexpr bool operator==(const Rect&, const Rect&) = default;
  friend constexpr auto operator<=>(const Rect&, const Rect&) = default;
};

struct Placement {
  int x = 0;
  int y = 0;
  int side = 0;

  constexpr std::int64_t area() const { return std::int64_t{side} * side; }

  friend constexpr bool operator==(const Placement&, const Placement&) = default;
};

/// Row-major order on top-left corners; the canonical order of a tiling.
struct PlacementOrder {
  constexpr bool operator()(const Placement& a, const Placement& b) const {
    return std::tie(a.y, a.x, a.side) < std::tie(b.y, b.x, b.side);
  }
};

/// A rectangle plus the squares claimed to tile it. Nothing here is trusted;
/// use verify() to certify it.
struct Tiling {
  Rect rect;
  std::vector<Placement> placements;

  void sort() { std::sort(placements.begin(), placements.end(), PlacementOrder{}); }

  std::int64_t covered_area() const {
    std::int64_t total = 0;
    for (const auto& p : placements) total += p.area();
    return total;
  }

  /// Distinct side lengths, ascending.
  std::set<int> sides() const {
    std::set<int> out;
    for (const auto& p : placements) out.insert(p.side);
    return out;
  }

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

inline void require_rect(Rect r) {
  if (r.m < 1 || r.n < 1) {
    throw std::domain_error("rectangle dimensions must be >= 1, got " +
                            std::to_string(r.m) + "x" + std::to_string(r.n));
  }
}

// ---------------------------------------------------------------------------
// Verification

struct Overlap {
  Placement first;
  Placement second;
};
struct OutOfBounds {
  Placement placement;
};
struct Gap {
  int x = 0;
  int y = 0;
};
struct SideTooSmall {
  Placement placement;
};

using Failure = std::variant<Overlap, OutOfBounds, Gap, SideTooSmall>;

struct VerificationReport {
  std::optional<Failure> failure;

  bool valid() const { return !failure.has_value(); }
  explicit operator bool() const { return valid(); }
};

inline std::string to_string(const Placement& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
         std::to_string(p.side) + ")";
}

/// One-line description, e.g. "GAP at (2,2)".
inline std::string describe(const VerificationReport& report) {
  if (report.valid()) return "VALID";
  struct Visitor {
    std::string operator()(const Overlap& f) const {
      return "OVERLAP " + to_string(f.first) + " " + to_string(f.second);
    }
    std::string operator()(const OutOfBounds& f) const {
      return "OUT_OF_BOUNDS " + to_string(f.placement);
    }
    std::string operator()(const Gap& f) const {
      return "GAP at (" + std::to_string(f.x) + "," + std::to_string(f.y) + ")";
    }
    std::string operator()(const SideTooSmall& f) const {
      return "SIDE_TOO_SMALL " + to_string(f.placement);
    }
  };
  return std::visit(Visitor{}, *report.failure);
}

/// Paints every placement onto a fresh grid and reports the first failure.
///
/// Placements are checked in list order: side, then bounds, then overlap with
/// anything painted earlier. Once all are painted the first uncovered cell in
/// row-major order is reported as a gap.
inline VerificationReport verify(const Tiling& t, int min_side = kDefaultMinSide) {
  const Rect r = t.rect;
  if (r.m < 1 || r.n < 1) return {Gap{0, 0}};

  const auto in_bounds = [r](const Placement& p) {
    return p.x >= 0 && p.y >= 0 && p.side >= 1 &&
           std::int64_t{p.x} + p.side <= r.n && std::int64_t{p.y} + p.side <= r.m;
  };

  std::vector<bool> painted(static_cast<std::size_t>(r.area()), false);
  const auto cell = [&](int x, int y) {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(r.n) +
           static_cast<std::size_t>(x);
  };

  for (std::size_t i = 0; i < t.placements.size(); ++i) {
    const Placement& p = t.placements[i];
    if (p.side < min_side) return {SideTooSmall{p}};
    if (!in_bounds(p)) return {OutOfBounds{p}};
    for (int y = p.y; y < p.y + p.side; ++y) {
      for (int x = p.x; x < p.x + p.side; ++x) {
        const auto c = cell(x, y);
        if (painted[c]) {
          // Find the earlier square that owns this cell.
          for (std::size_t j = 0; j < i; ++j) {
            const Placement& q = t.placements[j];
            if (x >= q.x && x < q.x + q.side && y >= q.y && y < q.y + q.side) {
              return {Overlap{q, p}};
            }
          }
        }
        painted[c] = true;
      }
    }
  }

  for (int y = 0; y < r.m; ++y) {
    for (int x = 0; x < r.n; ++x) {
      if (!painted[cell(x, y)]) return {Gap{x, y}};
    }
  }
  return {};
}

/// Reflects across the main diagonal: an m x n tiling becomes n x m.
inline Tiling transpose(const Tiling& t) {
  Tiling out{t.rect.transposed(), {}};
  out.placements.reserve(t.placements.size());
  for (const auto& p : t.placements) out.placements.push_back({p.y, p.x, p.side});
  out.sort();
  return out;
}

/// Copies every placement of `src` into `dst` offset by (dx, dy).
inline void blit(std::vector<Placement>& dst, const Tiling& src, int dx, int dy) {
  for (const auto& p : src.placements) dst.push_back({p.x + dx, p.y + dy, p.side});
}

// ---------------------------------------------------------------------------
// Text format
//
//   tiling <m> <n>
//   <x> <y> <side>      one line per square, (y, x)-sorted

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline void write_tiling(std::ostream& os, const Tiling& t) {
  os << "tiling " << t.rect.m << ' ' << t.rect.n << '\n';
  for (const auto& p : t.placements) os << p.x << ' ' << p.y << ' ' << p.side << '\n';
}

inline std::string to_text(const Tiling& t) {
  std::ostringstream os;
  write_tiling(os, t);
  return os.str();
}

namespace detail {

// Parses a line of exactly `count` non-negative decimal integers separated by
// single spaces. Returns nullopt on any deviation.
inline std::optional<std::vector<long long>> parse_fields(std::string_view s,
                                                          std::size_t count) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
    if (j == i || j - i > 10) return std::nullopt;
    if (j - i > 1 && s[i] == '0') return std::nullopt;
    long long v = 0;
    for (std::size_t k = i; k < j; ++k) v = v * 10 + (s[k] - '0');
    out.push_back(v);
    if (j == s.size()) break;
    if (s[j] != ' ') return std::nullopt;
    i = j + 1;
  }
  if (out.size() != count) return std::nullopt;
  return out;
}

}  // namespace detail

/// Strict reader: bad header, malformed lines, blank lines, or placements out
/// of (y, x) order (which includes duplicate corners) are rejected.
/// Geometric validity is left to verify().
inline Tiling read_tiling(std::istream& is) {
  std::string line;
  int lineno = 1;
  if (!std::getline(is, line)) throw ParseError(lineno, "empty input");
  if (line.rfind("tiling ", 0) != 0) throw ParseError(lineno, "expected 'tiling <m> <n>'");
  const auto header = detail::parse_fields(std::string_view(line).substr(7), 2);
  if (!header || (*header)[0] < 1 || (*header)[1] < 1 || (*header)[0] > INT32_MAX ||
      (*header)[1] > INT32_MAX) {
    throw ParseError(lineno, "bad header '" + line + "'");
  }
  Tiling t{{static_cast<int>((*header)[0]), static_cast<int>((*header)[1])}, {}};

  std::optional<Placement> prev;
  while (std::getline(is, line)) {
    ++lineno;
    const auto f = detail::parse_fields(line, 3);
    if (!f) throw ParseError(lineno, "expected '<x> <y> <side>', got '" + line + "'");
    for (auto v : *f) {
      if (v > INT32_MAX) throw ParseError(lineno, "value out of range");
    }
    Placement p{static_cast<int>((*f)[0]), static_cast<int>((*f)[1]),
                static_cast<int>((*f)[2])};
    if (prev && std::tie(prev->y, prev->x) >= std::tie(p.y, p.x)) {
      throw ParseError(lineno, "placements must be strictly increasing in (y, x)");
    }
    prev = p;
    t.placements.push_back(p);
  }
  return t;
}

inline Tiling parse_tiling(const std::string& text) {
  std::istringstream is(text);
  return read_tiling(is);
}

}  // namespace sqtile
