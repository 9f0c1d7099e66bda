#pragma once

// Text and SVG views of tilings and tileability tables.

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sqtile/core.hpp"
#include "sqtile/search.hpp"

namespace sqtile {

struct RenderStyle {
  int cell_px = 20;
  std::map<int, std::string> palette{{2, "purple"}, {3, "teal"}, {5, "yellow"}, {7, "red"}};
  std::string fallback = "gray";
  std::string stroke = "black";
  double stroke_width = 1.0;

  const std::string& fill_for(int side) const {
    const auto it = palette.find(side);
    return it == palette.end() ? fallback : it->second;
  }
};

/// One <rect> per placement on top of a white frame the size of the
/// rectangle. Placements are drawn as given, even if they overlap or leave
/// the frame.
inline void write_svg(std::ostream& os, const Tiling& t, const RenderStyle& style = {}) {
  const long long px = style.cell_px;
  const long long width = t.rect.n * px;
  const long long height = t.rect.m * px;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "  <rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\" stroke=\"" << style.stroke << "\" stroke-width=\"" << style.stroke_width
     << "\"/>\n";
  for (const auto& p : t.placements) {
    os << "  <rect x=\"" << p.x * px << "\" y=\"" << p.y * px << "\" width=\"" << p.side * px
       << "\" height=\"" << p.side * px << "\" fill=\"" << style.fill_for(p.side)
       << "\" stroke=\"" << style.stroke << "\" stroke-width=\"" << style.stroke_width
       << "\"/>\n";
  }
  os << "</svg>\n";
}

inline std::string to_svg(const Tiling& t, const RenderStyle& style = {}) {
  std::ostringstream os;
  write_svg(os, t, style);
  return os.str();
}

/// Letter per placement (a..z, then A..Z, cycling); uncovered cells are '.'.
inline std::string to_ascii(const Tiling& t) {
  static constexpr std::string_view kLetters =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  const auto rows = static_cast<std::size_t>(t.rect.m);
  const auto cols = static_cast<std::size_t>(t.rect.n);
  std::vector<std::string> grid(rows, std::string(cols, '.'));
  for (std::size_t i = 0; i < t.placements.size(); ++i) {
    const auto& p = t.placements[i];
    const char c = kLetters[i % kLetters.size()];
    for (int y = std::max(p.y, 0); y < p.y + p.side && y < t.rect.m; ++y)
      for (int x = std::max(p.x, 0); x < p.x + p.side && x < t.rect.n; ++x)
        grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = c;
  }
  std::string out;
  for (const auto& row : grid) out += row + '\n';
  return out;
}

/// Grid with m down the left, n across the top and a check mark for every
/// tileable cell.
inline void write_pretty_table(std::ostream& os, const TileTable& t) {
  const auto pad = [&](const std::string& s) {
    os << std::string(s.size() < 3 ? 3 - s.size() : 0, ' ') << s;
  };
  os << "m\\n";
  for (int n = 2; n <= t.max_dim(); ++n) pad(std::to_string(n));
  os << '\n';
  for (int m = 2; m <= t.max_dim(); ++m) {
    pad(std::to_string(m));
    for (int n = 2; n <= t.max_dim(); ++n) os << (t.at(m, n) ? "  ✓" : "   ");
    os << '\n';
  }
}

}  // namespace sqtile
