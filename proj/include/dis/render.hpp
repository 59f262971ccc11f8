#pragma once

// Drawings of block partitions: SVG and plain-text boxes. Both are pure
// functions of the partition and the name table, so output is byte-stable.

#include <cstdio>
#include <string>
#include <vector>

#include "dis/partition.hpp"

namespace dis {

namespace detail {

inline std::string block_name(const Block& b, const Names* names) {
  if (b.label == 0) return "";
  if (names && b.label <= names->size()) return (*names)[b.label - 1];
  return "x" + std::to_string(b.label);
}

inline unsigned max_exponent(const BlockPartition& p, bool xs) {
  unsigned e = 0;
  for (const auto& b : p.blocks) {
    const auto& r = b.rect;
    e = std::max({e, (xs ? r.x1 : r.y1).exponent(), (xs ? r.x2 : r.y2).exponent()});
  }
  return e;
}

inline std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

struct SvgStyle {
  double size = 400;    // side of the square in pixels
  double margin = 10;
  bool shade_interior = true;
};

inline std::string render_svg(const BlockPartition& p, const Names* names = nullptr, const SvgStyle& style = {}) {
  validate(p);
  const double s = style.size, m = style.margin, total = s + 2 * m;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed3(total) + "\" height=\"" + detail::fixed3(total) +
         "\" viewBox=\"0 0 " + detail::fixed3(total) + ' ' + detail::fixed3(total) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + detail::fixed3(total) + "\" height=\"" + detail::fixed3(total) + "\" fill=\"white\"/>\n";
  for (const auto& b : p.blocks) {
    const auto& r = b.rect;
    const double x = m + r.x1.to_double() * s, w = r.width().to_double() * s;
    // SVG y grows downward
    const double y = m + (1.0 - r.y2.to_double()) * s, h = r.height().to_double() * s;
    const char* fill = style.shade_interior && !is_border(r) ? "#dde8f5" : "none";
    out += "<rect x=\"" + detail::fixed3(x) + "\" y=\"" + detail::fixed3(y) + "\" width=\"" + detail::fixed3(w) + "\" height=\"" +
           detail::fixed3(h) + "\" fill=\"" + fill + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    auto name = detail::block_name(b, names);
    if (!name.empty()) {
      const double fs = std::min(18.0, std::min(w, h) * 0.5);
      out += "<text x=\"" + detail::fixed3(x + w / 2) + "\" y=\"" + detail::fixed3(y + h / 2) + "\" font-family=\"serif\" font-size=\"" +
             detail::fixed3(fs) + "\" text-anchor=\"middle\" dominant-baseline=\"central\">" + detail::xml_escape(name) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

inline constexpr unsigned ascii_max_width = 240;

/// Box drawing with '+', '-' and '|'; north is up. The finest grid step gets
/// enough columns for the longest label.
inline std::string render_ascii(const BlockPartition& p, const Names* names = nullptr) {
  validate(p);
  const unsigned ex = detail::max_exponent(p, true), ey = detail::max_exponent(p, false);
  std::size_t longest = 1;
  for (const auto& b : p.blocks) longest = std::max(longest, detail::block_name(b, names).size());
  const std::size_t nx = std::size_t{1} << ex, ny = std::size_t{1} << ey;
  const std::size_t cx = std::max<std::size_t>({longest + 2, 4, (16 + nx - 1) / nx});
  const std::size_t cy = std::max<std::size_t>({2, (6 + ny - 1) / ny});
  const std::size_t W = nx * cx, H = ny * cy;
  if (W + 1 > ascii_max_width) throw limit_error("render_ascii: drawing would be " + std::to_string(W + 1) + " columns wide");

  std::vector<std::string> canvas(H + 1, std::string(W + 1, ' '));
  std::vector<std::vector<unsigned char>> hor(H + 1, std::vector<unsigned char>(W + 1, 0)), ver = hor;
  auto col = [&](const Dyadic& x) { return std::size_t((x * Dyadic(std::int64_t(nx))).numerator()) * cx; };
  auto row = [&](const Dyadic& y) { return H - std::size_t((y * Dyadic(std::int64_t(ny))).numerator()) * cy; };
  for (const auto& b : p.blocks) {
    const auto c1 = col(b.rect.x1), c2 = col(b.rect.x2), r1 = row(b.rect.y2), r2 = row(b.rect.y1);
    for (auto c = c1; c <= c2; ++c) hor[r1][c] = hor[r2][c] = 1;
    for (auto r = r1; r <= r2; ++r) ver[r][c1] = ver[r][c2] = 1;
  }
  for (std::size_t r = 0; r <= H; ++r)
    for (std::size_t c = 0; c <= W; ++c) {
      const bool left = c > 0 && hor[r][c - 1] && hor[r][c], right = c < W && hor[r][c] && hor[r][c + 1];
      const bool up = r > 0 && ver[r - 1][c] && ver[r][c], down = r < H && ver[r][c] && ver[r + 1][c];
      if ((left || right) && (up || down)) canvas[r][c] = '+';
      else if (hor[r][c] && ver[r][c]) canvas[r][c] = '+';
      else if (hor[r][c]) canvas[r][c] = '-';
      else if (ver[r][c]) canvas[r][c] = '|';
    }
  for (const auto& b : p.blocks) {
    auto name = detail::block_name(b, names);
    if (name.empty()) continue;
    const auto c1 = col(b.rect.x1), c2 = col(b.rect.x2), r1 = row(b.rect.y2), r2 = row(b.rect.y1);
    const auto r = (r1 + r2) / 2;
    const auto c = (c1 + c2 + 1 - name.size()) / 2;
    canvas[r].replace(c, name.size(), name);
  }
  std::string out;
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace dis
