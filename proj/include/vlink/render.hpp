#pragma once

// Deterministic SVG 1.1 rendering: one circle per component, endpoints
// equally spaced in cyclic order, chords drawn as straight arrows from tail
// to head. Positive chords are solid, negative chords dashed. All geometry is
// integer arithmetic: directions come from exact half-angle tables (integer
// square roots in Q30 fixed point) composed over the bits of a binary angle.

#include <array>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {
namespace detail {

inline std::uint64_t isqrt_u64(std::uint64_t v) {
  if (v == 0) return 0;
  // Start above the root, then Newton steps descend monotonically.
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(v) + 1) / 2);
  for (;;) {
    std::uint64_t y = (x + v / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

// (cos, sin) of (full turn / 2^j) in Q30, built by angle halving:
// cos(t/2) = sqrt((1+cos t)/2), sin(t/2) = sqrt((1-cos t)/2).
inline const std::array<std::pair<std::int64_t, std::int64_t>, 33>& half_angle_table() {
  static const auto table = [] {
    std::array<std::pair<std::int64_t, std::int64_t>, 33> t{};
    const std::int64_t one = std::int64_t{1} << 30;
    t[0] = {one, 0};
    t[1] = {-one, 0};
    t[2] = {0, one};
    for (int j = 3; j <= 32; ++j) {
      std::int64_t c_prev = t[j - 1].first;
      std::int64_t s_prev = t[j - 1].second;
      std::int64_t c = static_cast<std::int64_t>(
          isqrt_u64(static_cast<std::uint64_t>(one + c_prev) << 29));
      // sin(x/2) = sin(x) / (2 cos(x/2)); deriving the sine from the cosine
      // alone would cancel catastrophically once 1 - cos(x) rounds to 0 ulp.
      std::int64_t s = (s_prev * one + c) / (2 * c);
      t[j] = {c, s};
    }
    return t;
  }();
  return table;
}

struct UnitVec {
  std::int64_t c = 0, s = 0;  // Q30
};

// Direction of a binary angle (full turn = 2^32), composed by rotating
// through the table entry for each set bit.
inline UnitVec unit_dir(std::uint32_t bam) {
  const auto& tab = half_angle_table();
  const std::int64_t half = std::int64_t{1} << 29;
  UnitVec u{std::int64_t{1} << 30, 0};
  for (int b = 31; b >= 0; --b) {
    if (!(bam & (std::uint32_t{1} << b))) continue;
    const auto& [cj, sj] = tab[32 - b];
    std::int64_t c = (u.c * cj - u.s * sj + half) >> 30;
    std::int64_t s = (u.s * cj + u.c * sj + half) >> 30;
    u = {c, s};
  }
  return u;
}

// Binary angle of slot p out of k, measured from the top of the circle.
inline std::uint32_t slot_angle(int p, int k) {
  std::uint64_t frac = (static_cast<std::uint64_t>(p) << 32) / static_cast<std::uint64_t>(k);
  return static_cast<std::uint32_t>(frac) + (std::uint32_t{3} << 30);
}

inline int scale_q30(std::int64_t q30, int radius) {
  return static_cast<int>((q30 * radius + (std::int64_t{1} << 29)) >> 30);
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace detail

// Renders the diagram as a standalone SVG 1.1 document.
inline std::string render_svg(const ChordDiagram& d) {
  const int radius = 120;
  const int margin = 40;
  const int gap = 60;
  const int label_radius = radius + 16;
  const int n = d.component_count();
  const int width = 2 * margin + n * 2 * radius + (n - 1) * gap;
  const int height = 2 * margin + 2 * radius + 2 * (label_radius - radius);
  const int cy = height / 2;
  auto center_x = [&](int ci) { return margin + radius + ci * (2 * radius + gap); };

  auto point = [&](const EndpointRef& r, int at_radius) {
    detail::UnitVec u = detail::unit_dir(detail::slot_angle(r.position, d.component_size(r.component)));
    return std::pair<int, int>(center_x(r.component) + detail::scale_q30(u.c, at_radius),
                               cy + detail::scale_q30(u.s, at_radius));
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <defs>\n"
         "    <marker id=\"head\" markerWidth=\"10\" markerHeight=\"8\" refX=\"9\" refY=\"4\""
         " orient=\"auto\" markerUnits=\"userSpaceOnUse\">\n"
         "      <path d=\"M0,0 L10,4 L0,8 Z\" fill=\"#333333\"/>\n"
         "    </marker>\n"
         "  </defs>\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  for (int ci = 0; ci < n; ++ci) {
    out << "  <circle cx=\"" << center_x(ci) << "\" cy=\"" << cy << "\" r=\"" << radius
        << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"2\"/>\n";
    out << "  <text x=\"" << center_x(ci) << "\" y=\"" << cy + 4
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\""
           " fill=\"#bbbbbb\">" << ci << "</text>\n";
  }

  for (int k = 0; k < d.chord_count(); ++k) {
    const Chord& c = d.chord(k);
    auto [x1, y1] = point(c.tail, radius);
    auto [x2, y2] = point(c.head, radius);
    out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"#333333\" stroke-width=\"2\"";
    if (c.sign < 0) out << " stroke-dasharray=\"6,4\"";
    out << " marker-end=\"url(#head)\"/>\n";
  }

  for (int ci = 0; ci < n; ++ci) {
    for (int p = 0; p < d.component_size(ci); ++p) {
      const Endpoint& e = d.at(ci, p);
      const Chord& c = d.chord(e.chord);
      EndpointRef ref{ci, p};
      auto [x, y] = point(ref, radius);
      out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"#333333\"/>\n";
      auto [lx, ly] = point(ref, label_radius);
      out << "  <text x=\"" << lx << "\" y=\"" << ly + 4
          << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\""
             " fill=\"#333333\">" << (e.is_head ? "U" : "O") << detail::xml_escape(c.id)
          << (c.sign > 0 ? "+" : "-") << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace vlink
