#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "partlim/format.hpp"

namespace partlim {

// Minimal self-contained SVG polyline plot: one curve, optional vertical
// guide lines (used for the interval breakpoints), light axes with the
// data bounds annotated at the corners.  No external dependencies, byte
// deterministic.
inline void write_svg_plot(std::ostream& os, const std::vector<double>& xs,
                           const std::vector<double>& ys, const std::vector<double>& vguides = {},
                           int width = 800, int height = 500,
                           const std::string& caption = "") {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("write_svg_plot: need matching x/y arrays with >= 2 points");
  const double x_lo = *std::min_element(xs.begin(), xs.end());
  const double x_hi = *std::max_element(xs.begin(), xs.end());
  const double y_lo = std::min(0.0, *std::min_element(ys.begin(), ys.end()));
  const double y_hi = *std::max_element(ys.begin(), ys.end());
  const double x_span = (x_hi > x_lo) ? x_hi - x_lo : 1.0;
  const double y_span = (y_hi > y_lo) ? y_hi - y_lo : 1.0;
  const int margin = 50;
  const auto px = [&](double x) {
    return margin + (x - x_lo) / x_span * (width - 2 * margin);
  };
  const auto py = [&](double y) {
    return height - margin - (y - y_lo) / y_span * (height - 2 * margin);
  };
  const auto coord = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (double g : vguides) {
    if (g < x_lo || g > x_hi) continue;
    os << "  <line x1=\"" << coord(px(g)) << "\" y1=\"" << margin << "\" x2=\"" << coord(px(g))
       << "\" y2=\"" << height - margin << "\" stroke=\"#ccc\" stroke-dasharray=\"4 3\"/>\n";
  }
  os << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
     << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
     << height - margin << "\" stroke=\"black\"/>\n";
  os << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ' ';
    os << coord(px(xs[i])) << ',' << coord(py(ys[i]));
  }
  os << "\"/>\n";
  os << "  <text x=\"" << margin << "\" y=\"" << height - margin + 30
     << "\" font-size=\"12\" font-family=\"sans-serif\">" << format_double(x_lo) << "</text>\n";
  os << "  <text x=\"" << width - margin - 40 << "\" y=\"" << height - margin + 30
     << "\" font-size=\"12\" font-family=\"sans-serif\">" << format_double(x_hi) << "</text>\n";
  os << "  <text x=\"" << 5 << "\" y=\"" << margin << "\" font-size=\"12\" "
     << "font-family=\"sans-serif\">" << format_double(y_hi) << "</text>\n";
  os << "  <text x=\"" << 5 << "\" y=\"" << height - margin << "\" font-size=\"12\" "
     << "font-family=\"sans-serif\">" << format_double(y_lo) << "</text>\n";
  if (!caption.empty())
    os << "  <text x=\"" << width / 2 - 100 << "\" y=\"" << 25
       << "\" font-size=\"14\" font-family=\"sans-serif\">" << caption << "</text>\n";
  os << "</svg>\n";
}

}  // namespace partlim
