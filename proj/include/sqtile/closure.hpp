#pragma once

// Which rectangles can be assembled from single squares by repeatedly gluing
// two already-built rectangles along a full common edge (guillotine joins)?
//
// Gluing two exact tilings along a matching edge is again an exact tiling, so
// reachability is tracked per dimension pair and layouts are only rebuilt on
// demand, as a join tree.

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqtile/core.hpp"
#include "sqtile/search.hpp"

namespace sqtile {

struct SeedSet {
  std::set<int> sides{2, 3, 5, 7};

  static SeedSet all_squares(int max_dim) {
    SeedSet s{{}};
    for (int k = 2; k <= max_dim; ++k) s.sides.insert(k);
    return s;
  }
};

/// Binary join tree. Leaves are seed squares; `H` places `parts[0]` left of
/// `parts[1]`, `V` places `parts[0]` above `parts[1]`.
struct JoinTree {
  enum class Kind { square, horizontal, vertical };
  Kind kind = Kind::square;
  Rect rect;
  std::vector<JoinTree> parts;

  /// `S<k>`, `(H a b)` or `(V a b)`.
  std::string to_string() const {
    switch (kind) {
      case Kind::square: return "S" + std::to_string(rect.m);
      case Kind::horizontal: return "(H " + parts[0].to_string() + " " + parts[1].to_string() + ")";
      case Kind::vertical: return "(V " + parts[0].to_string() + " " + parts[1].to_string() + ")";
    }
    return {};
  }

  Tiling flatten() const {
    Tiling t{rect, {}};
    append(t.placements, 0, 0);
    t.sort();
    return t;
  }

 private:
  void append(std::vector<Placement>& out, int x, int y) const {
    switch (kind) {
      case Kind::square: out.push_back({x, y, rect.m}); break;
      case Kind::horizontal:
        parts[0].append(out, x, y);
        parts[1].append(out, x + parts[0].rect.n, y);
        break;
      case Kind::vertical:
        parts[0].append(out, x, y);
        parts[1].append(out, x, y + parts[0].rect.m);
        break;
    }
  }
};

/// Parses the `S<k>` / `(H a b)` / `(V a b)` form back into a tree.
inline JoinTree parse_join_tree(const std::string& text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) -> JoinTree {
    throw std::invalid_argument("join tree, offset " + std::to_string(pos) + ": " + what);
  };
  std::function<JoinTree()> node = [&]() -> JoinTree {
    if (pos < text.size() && text[pos] == 'S') {
      ++pos;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) return fail("expected side after S");
      const int k = std::stoi(text.substr(start, pos - start));
      return {JoinTree::Kind::square, {k, k}, {}};
    }
    if (pos + 3 > text.size() || text[pos] != '(' || text[pos + 2] != ' ') return fail("expected node");
    const char op = text[pos + 1];
    if (op != 'H' && op != 'V') return fail("expected H or V");
    pos += 3;
    JoinTree a = node();
    if (pos >= text.size() || text[pos] != ' ') return fail("expected space");
    ++pos;
    JoinTree b = node();
    if (pos >= text.size() || text[pos] != ')') return fail("expected ')'");
    ++pos;
    JoinTree t;
    if (op == 'H') {
      if (a.rect.m != b.rect.m) return fail("H parts differ in height");
      t = {JoinTree::Kind::horizontal, {a.rect.m, a.rect.n + b.rect.n}, {}};
    } else {
      if (a.rect.n != b.rect.n) return fail("V parts differ in width");
      t = {JoinTree::Kind::vertical, {a.rect.m + b.rect.m, a.rect.n}, {}};
    }
    t.parts.push_back(std::move(a));
    t.parts.push_back(std::move(b));
    return t;
  };
  JoinTree t = node();
  if (pos != text.size()) fail("trailing input");
  return t;
}

/// Least set of m x n (both <= max_dim) containing the seed squares and
/// closed under full-edge joins.
class GuillotineClosure {
 public:
  GuillotineClosure(int max_dim, const SeedSet& seeds) : max_dim_(max_dim) {
    if (max_dim < 2) throw std::invalid_argument("max_dim must be >= 2");
    for (int k : seeds.sides)
      if (k < 2) throw std::invalid_argument("seed sides must be >= 2");

    const auto dim = static_cast<std::size_t>(max_dim + 1);
    how_.assign(dim * dim, Join{});
    // Parts of (m, n) are strictly smaller in one coordinate, so row-major
    // order visits them first.
    for (int m = 1; m <= max_dim; ++m) {
      for (int n = 1; n <= max_dim; ++n) {
        Join& j = at(m, n);
        if (m == n && seeds.sides.contains(m)) {
          j = {JoinTree::Kind::square, 0};
          continue;
        }
        for (int top = m - 1; top >= 1 && !j.reachable(); --top) {
          if (at(top, n).reachable() && at(m - top, n).reachable()) j = {JoinTree::Kind::vertical, top};
        }
        for (int left = n - 1; left >= 1 && !j.reachable(); --left) {
          if (at(m, left).reachable() && at(m, n - left).reachable()) j = {JoinTree::Kind::horizontal, left};
        }
      }
    }
  }

  int max_dim() const { return max_dim_; }

  bool contains(int m, int n) const {
    return m >= 1 && n >= 1 && m <= max_dim_ && n <= max_dim_ && at(m, n).reachable();
  }

  /// Reachable pairs with m <= n.
  std::set<std::pair<int, int>> pairs() const {
    std::set<std::pair<int, int>> out;
    for (int m = 1; m <= max_dim_; ++m)
      for (int n = m; n <= max_dim_; ++n)
        if (contains(m, n)) out.insert({m, n});
    return out;
  }

  std::optional<JoinTree> witness(int m, int n) const {
    if (!contains(m, n)) return std::nullopt;
    return build(m, n);
  }

 private:
  struct Join {
    std::optional<JoinTree::Kind> kind;
    int split = 0;  // rows of the top part (V) or columns of the left part (H)

    Join() = default;
    Join(JoinTree::Kind k, int s) : kind(k), split(s) {}
    bool reachable() const { return kind.has_value(); }
  };

  const Join& at(int m, int n) const {
    return how_[static_cast<std::size_t>(m) * static_cast<std::size_t>(max_dim_ + 1) + static_cast<std::size_t>(n)];
  }
  Join& at(int m, int n) {
    return how_[static_cast<std::size_t>(m) * static_cast<std::size_t>(max_dim_ + 1) + static_cast<std::size_t>(n)];
  }

  JoinTree build(int m, int n) const {
    const Join& j = at(m, n);
    JoinTree t{*j.kind, {m, n}, {}};
    switch (*j.kind) {
      case JoinTree::Kind::square: break;
      case JoinTree::Kind::vertical:
        t.parts.push_back(build(j.split, n));
        t.parts.push_back(build(m - j.split, n));
        break;
      case JoinTree::Kind::horizontal:
        t.parts.push_back(build(m, j.split));
        t.parts.push_back(build(m, n - j.split));
        break;
    }
    return t;
  }

  int max_dim_;
  std::vector<Join> how_;
};

inline std::set<std::pair<int, int>> guillotine_closure(int max_dim, const SeedSet& seeds = {}) {
  return GuillotineClosure(max_dim, seeds).pairs();
}

inline std::optional<JoinTree> guillotine_witness(int m, int n, const SeedSet& seeds = {}) {
  require_rect({m, n});
  return GuillotineClosure(std::max({m, n, 2}), seeds).witness(m, n);
}

/// Tileable rectangles m <= n <= max_dim (by exhaustive search) that
/// guillotine joins from `seeds` cannot reach.
inline std::vector<std::pair<int, int>> find_exceptions(int max_dim, const SeedSet& seeds = {}) {
  const GuillotineClosure closure(max_dim, seeds);
  const TileTable table = build_table(max_dim);
  std::vector<std::pair<int, int>> out;
  for (int m = 2; m <= max_dim; ++m)
    for (int n = m; n <= max_dim; ++n)
      if (table.at(m, n) && !closure.contains(m, n)) out.push_back({m, n});
  return out;
}

}  // namespace sqtile
