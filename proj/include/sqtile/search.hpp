#pragma once

// Exhaustive backtracking search for square tilings of small rectangles.
//
// The first uncovered cell in row-major order must be the top-left corner of
// the next square, so the covered region is always a skyline: each column is
// filled from the top down to some height. The search state is that height
// profile. Sides are tried in a fixed order and the first complete tiling
// wins, which makes the witness deterministic.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "sqtile/core.hpp"

namespace sqtile {

enum class SizeOrder { ascending, descending };

struct SearchConfig {
  int min_side = kDefaultMinSide;
  std::optional<int> max_side;          // default: min(m, n)
  SizeOrder size_order = SizeOrder::ascending;
  std::optional<std::uint64_t> node_limit;
};

enum class SearchStatus { found, none, inconclusive };

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<Tiling> tiling;  // set iff status == found
  std::uint64_t nodes = 0;
};

/// Covered-cell state for one search. Equivalent to an m x n boolean grid
/// under the skyline invariant; confined to a single worker.
class OccupancyGrid {
 public:
  explicit OccupancyGrid(Rect r) : rect_(r), heights_(static_cast<std::size_t>(r.n), 0) {}

  Rect rect() const { return rect_; }
  std::int64_t covered() const { return covered_; }
  bool full() const { return covered_ == rect_.area(); }

  bool is_covered(int x, int y) const { return y < heights_[static_cast<std::size_t>(x)]; }

  /// Row-major first uncovered cell: leftmost column of minimum height.
  /// Only meaningful when !full().
  std::pair<int, int> first_empty() const {
    const auto it = std::min_element(heights_.begin(), heights_.end());
    return {static_cast<int>(it - heights_.begin()), *it};
  }

  /// Largest square with top-left corner at (x, y) = first_empty() that fits.
  int largest_fit(int x, int y) const {
    int run = 0;
    for (auto c = static_cast<std::size_t>(x); c < heights_.size() && heights_[c] == y; ++c) {
      ++run;
    }
    return std::min(run, rect_.m - y);
  }

  void place(int x, int side) { add(x, side, side); }
  void remove(int x, int side) { add(x, side, -side); }

  const std::vector<std::int16_t>& heights() const { return heights_; }

 private:
  void add(int x, int side, int delta) {
    for (int c = x; c < x + side; ++c) heights_[static_cast<std::size_t>(c)] += static_cast<std::int16_t>(delta);
    covered_ += std::int64_t{delta} * side;
  }

  Rect rect_;
  std::vector<std::int16_t> heights_;
  std::int64_t covered_ = 0;
};

namespace detail {

class Searcher {
 public:
  Searcher(Rect r, const SearchConfig& cfg)
      : grid_(r), cfg_(cfg), max_side_(std::min({r.m, r.n, cfg.max_side.value_or(r.m)})) {}

  SearchResult run() {
    SearchResult out;
    const bool ok = descend();
    out.nodes = nodes_;
    if (aborted_) {
      out.status = SearchStatus::inconclusive;
    } else if (ok) {
      out.status = SearchStatus::found;
      Tiling t{grid_.rect(), stack_};
      t.sort();
      out.tiling = std::move(t);
    } else {
      out.status = SearchStatus::none;
    }
    return out;
  }

 private:
  // Height profiles proven to admit no completion. Skipping them only cuts
  // failing subtrees, so the first witness found is unchanged.
  std::string key() const {
    const auto& h = grid_.heights();
    return {reinterpret_cast<const char*>(h.data()), h.size() * sizeof(h[0])};
  }

  bool descend() {
    if (grid_.full()) return true;
    if (cfg_.node_limit && nodes_ >= *cfg_.node_limit) {
      aborted_ = true;
      return false;
    }
    ++nodes_;

    const auto [x, y] = grid_.first_empty();
    const int fit = std::min(grid_.largest_fit(x, y), max_side_);
    if (fit < cfg_.min_side) return false;

    std::string k = key();
    if (dead_.contains(k)) return false;

    const bool asc = cfg_.size_order == SizeOrder::ascending;
    for (int i = 0; i <= fit - cfg_.min_side; ++i) {
      const int side = asc ? cfg_.min_side + i : fit - i;
      grid_.place(x, side);
      stack_.push_back({x, y, side});
      if (descend()) return true;
      stack_.pop_back();
      grid_.remove(x, side);
      if (aborted_) return false;
    }
    dead_.insert(std::move(k));
    return false;
  }

  OccupancyGrid grid_;
  const SearchConfig& cfg_;
  int max_side_;
  std::vector<Placement> stack_;
  std::unordered_set<std::string> dead_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

inline void check_config(Rect r, const SearchConfig& cfg) {
  require_rect(r);
  if (cfg.min_side < 2) throw std::invalid_argument("min_side must be >= 2");
  if (cfg.max_side && *cfg.max_side < cfg.min_side) {
    throw std::invalid_argument("max_side must be >= min_side");
  }
  if (r.n > INT16_MAX || r.m > INT16_MAX) throw std::domain_error("rectangle too large for search");
}

}  // namespace detail

/// Searches for a tiling of `r`. A tripped node limit yields `inconclusive`,
/// never `none`.
inline SearchResult find_tiling(Rect r, const SearchConfig& cfg = {}) {
  detail::check_config(r, cfg);
  return detail::Searcher(r, cfg).run();
}

/// Decision only. Tileability is invariant under transposition, so this
/// searches the orientation whose skyline is narrower (far fewer profiles).
inline bool is_tileable(Rect r, const SearchConfig& cfg = {}) {
  SearchConfig unlimited = cfg;
  unlimited.node_limit.reset();
  const Rect tall = r.m >= r.n ? r : r.transposed();
  return find_tiling(tall, unlimited).status == SearchStatus::found;
}

// ---------------------------------------------------------------------------
// Tileability table

class TileTable {
 public:
  TileTable(int max_dim, int min_side)
      : max_dim_(max_dim), min_side_(min_side),
        cells_(static_cast<std::size_t>(max_dim + 1) * static_cast<std::size_t>(max_dim + 1), false) {}

  int max_dim() const { return max_dim_; }
  int min_side() const { return min_side_; }

  /// Defined for 2 <= m, n <= max_dim.
  bool at(int m, int n) const { return cells_[index(m, n)]; }
  void set(int m, int n, bool v) { cells_[index(m, n)] = v; }

  /// Number of tileable pairs with m <= n.
  int count_canonical() const {
    int c = 0;
    for (int m = 2; m <= max_dim_; ++m)
      for (int n = m; n <= max_dim_; ++n) c += at(m, n) ? 1 : 0;
    return c;
  }

  friend bool operator==(const TileTable&, const TileTable&) = default;

 private:
  std::size_t index(int m, int n) const {
    if (m < 2 || n < 2 || m > max_dim_ || n > max_dim_) throw std::out_of_range("table index");
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(max_dim_ + 1) +
           static_cast<std::size_t>(n);
  }

  int max_dim_;
  int min_side_;
  std::vector<bool> cells_;
};

/// is_tileable for every 2 <= m, n <= max_dim. Only m <= n is searched; the
/// rest is mirrored. Cells are independent and are spread over `workers`
/// threads (0 = hardware concurrency).
inline TileTable build_table(int max_dim, const SearchConfig& cfg = {}, unsigned workers = 0) {
  if (max_dim < 2) throw std::invalid_argument("max_dim must be >= 2");
  std::vector<Rect> jobs;
  for (int m = 2; m <= max_dim; ++m)
    for (int n = m; n <= max_dim; ++n) jobs.push_back({m, n});

  // Largest first so stragglers are small.
  std::reverse(jobs.begin(), jobs.end());
  std::vector<char> verdict(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      verdict[i] = is_tileable(jobs[i], cfg) ? 1 : 0;
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  TileTable table(max_dim, cfg.min_side);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    table.set(jobs[i].m, jobs[i].n, verdict[i] != 0);
    table.set(jobs[i].n, jobs[i].m, verdict[i] != 0);
  }
  return table;
}

// Serialized as
//   table <max_dim> min_side=<k>
// then one line per m = 2..max_dim with '#' (tileable) or '.' for n = 2..max_dim.

inline void write_table(std::ostream& os, const TileTable& t) {
  os << "table " << t.max_dim() << " min_side=" << t.min_side() << '\n';
  for (int m = 2; m <= t.max_dim(); ++m) {
    for (int n = 2; n <= t.max_dim(); ++n) os << (t.at(m, n) ? '#' : '.');
    os << '\n';
  }
}

inline TileTable read_table(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError(1, "empty input");
  std::istringstream header(line);
  std::string word, min_field;
  int max_dim = 0;
  if (!(header >> word >> max_dim >> min_field) || word != "table" || max_dim < 2 ||
      min_field.rfind("min_side=", 0) != 0) {
    throw ParseError(1, "expected 'table <max_dim> min_side=<k>'");
  }
  int min_side = 0;
  try {
    min_side = std::stoi(min_field.substr(9));
  } catch (const std::exception&) {
    throw ParseError(1, "bad min_side");
  }
  TileTable t(max_dim, min_side);
  for (int m = 2; m <= max_dim; ++m) {
    if (!std::getline(is, line) || line.size() != static_cast<std::size_t>(max_dim - 1)) {
      throw ParseError(m, "expected a row of " + std::to_string(max_dim - 1) + " cells");
    }
    for (int n = 2; n <= max_dim; ++n) {
      const char c = line[static_cast<std::size_t>(n - 2)];
      if (c != '#' && c != '.') throw ParseError(m, "cells must be '#' or '.'");
      t.set(m, n, c == '#');
    }
  }
  return t;
}

}  // namespace sqtile
