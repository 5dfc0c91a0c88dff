// SPDX-License-Identifier: Apache-2.0
#include "qdc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Range {
  double lo;
  double hi;
  double scale(double v, double out_lo, double out_hi) const {
    return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
  }
};

// Data extent padded 5%; degenerate extents get a unit window.
Range padded_range(double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  const double span = hi - lo;
  if (span <= 0.0) return Range{lo - 0.5, hi + 0.5};
  return Range{lo - 0.05 * span, hi + 0.05 * span};
}

void axes_with_ticks(std::ostringstream& out, const Range& xr, const Range& yr, double left,
                     double right, double top, double bottom, const std::string& x_label,
                     const std::string& y_label) {
  out << "<line x1='" << px(left) << "' y1='" << px(bottom) << "' x2='" << px(right)
      << "' y2='" << px(bottom) << "' stroke='black' stroke-width='1'/>\n";
  out << "<line x1='" << px(left) << "' y1='" << px(top) << "' x2='" << px(left) << "' y2='"
      << px(bottom) << "' stroke='black' stroke-width='1'/>\n";
  constexpr int kTicks = 6;
  for (int t = 0; t < kTicks; ++t) {
    const double f = static_cast<double>(t) / (kTicks - 1);
    const double xv = xr.lo + f * (xr.hi - xr.lo);
    const double xp = xr.scale(xv, left, right);
    out << "<line x1='" << px(xp) << "' y1='" << px(bottom) << "' x2='" << px(xp) << "' y2='"
        << px(bottom + 5) << "' stroke='black' stroke-width='1'/>\n";
    out << "<text x='" << px(xp) << "' y='" << px(bottom + 18)
        << "' font-size='11' text-anchor='middle'>" << tick_label(xv) << "</text>\n";
    const double yv = yr.lo + f * (yr.hi - yr.lo);
    const double yp = yr.scale(yv, bottom, top);
    out << "<line x1='" << px(left - 5) << "' y1='" << px(yp) << "' x2='" << px(left)
        << "' y2='" << px(yp) << "' stroke='black' stroke-width='1'/>\n";
    out << "<text x='" << px(left - 8) << "' y='" << px(yp + 4)
        << "' font-size='11' text-anchor='end'>" << tick_label(yv) << "</text>\n";
  }
  out << "<text x='" << px((left + right) / 2) << "' y='" << px(bottom + 36)
      << "' font-size='13' text-anchor='middle'>" << xml_escape(x_label) << "</text>\n";
  out << "<text x='16' y='" << px((top + bottom) / 2)
      << "' font-size='13' text-anchor='middle' transform='rotate(-90 16 "
      << px((top + bottom) / 2) << ")'>" << xml_escape(y_label) << "</text>\n";
}

}  // namespace

std::string render_svg_lineplot(const std::vector<Series>& series, const std::string& x_label,
                                const std::string& y_label, const std::string& title) {
  if (series.empty()) throw DomainError("svg lineplot: no series");
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = std::numeric_limits<double>::infinity(), y_hi = -y_lo;
  for (const Series& s : series) {
    if (s.points.empty()) throw DomainError("svg lineplot: series '" + s.label + "' is empty");
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) {
        throw DomainError("svg lineplot: non-finite point in series '" + s.label + "'");
      }
      x_lo = std::min(x_lo, x); x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y); y_hi = std::max(y_hi, y);
    }
  }
  const Range xr = padded_range(x_lo, x_hi);
  const Range yr = padded_range(y_lo, y_hi);

  constexpr double kWidth = 760, kHeight = 480;
  constexpr double kLeft = 64, kRight = kWidth - 180, kTop = 44, kBottom = kHeight - 52;

  std::ostringstream out;
  out << "<?xml version='1.0' encoding='UTF-8'?>\n";
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
      << "' viewBox='0 0 " << kWidth << " " << kHeight << "'>\n";
  out << "<rect x='0' y='0' width='" << kWidth << "' height='" << kHeight
      << "' fill='white'/>\n";
  if (!title.empty()) {
    out << "<text x='" << px((kLeft + kRight) / 2)
        << "' y='24' font-size='15' text-anchor='middle'>" << xml_escape(title) << "</text>\n";
  }
  axes_with_ticks(out, xr, yr, kLeft, kRight, kTop, kBottom, x_label, y_label);

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
    for (const auto& [x, y] : series[i].points) {
      out << px(xr.scale(x, kLeft, kRight)) << ',' << px(yr.scale(y, kBottom, kTop)) << ' ';
    }
    out << "'/>\n";
    const double ly = kTop + 8 + 18 * static_cast<double>(i);
    out << "<line x1='" << px(kRight + 12) << "' y1='" << px(ly) << "' x2='" << px(kRight + 34)
        << "' y2='" << px(ly) << "' stroke='" << color << "' stroke-width='1.5'/>\n";
    out << "<text x='" << px(kRight + 40) << "' y='" << px(ly + 4) << "' font-size='12'>"
        << xml_escape(series[i].label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg_lineplot(const std::vector<Series>& series, const std::string& path,
                        const std::string& x_label, const std::string& y_label,
                        const std::string& title) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << render_svg_lineplot(series, x_label, y_label, title);
  if (!out.flush()) throw IoError("write failed: " + path);
}

namespace {

std::string gray_fill(double v) {
  const int level = static_cast<int>(std::lround(v * 255.0));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", level, level, level);
  return buf;
}

}  // namespace

std::string render_svg_heatmap(const std::vector<std::vector<double>>& grid,
                               const std::vector<double>& row_coords,
                               const std::vector<double>& col_coords,
                               const std::string& x_label, const std::string& y_label,
                               const std::string& title) {
  if (grid.empty() || grid.front().empty()) throw DomainError("svg heatmap: empty grid");
  const std::size_t n_rows = grid.size();
  const std::size_t n_cols = grid.front().size();
  for (const auto& row : grid) {
    if (row.size() != n_cols) throw DomainError("svg heatmap: ragged grid");
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) throw DomainError("svg heatmap: value outside [0, 1]");
    }
  }
  if (row_coords.size() != n_rows || col_coords.size() != n_cols) {
    throw DomainError("svg heatmap: coordinate labels do not match the grid");
  }

  constexpr double kWidth = 760, kHeight = 480;
  constexpr double kLeft = 64, kRight = kWidth - 130, kTop = 44, kBottom = kHeight - 52;
  const double cell_w = (kRight - kLeft) / static_cast<double>(n_cols);
  const double cell_h = (kBottom - kTop) / static_cast<double>(n_rows);

  std::ostringstream out;
  out << "<?xml version='1.0' encoding='UTF-8'?>\n";
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
      << "' viewBox='0 0 " << kWidth << " " << kHeight << "'>\n";
  out << "<rect x='0' y='0' width='" << kWidth << "' height='" << kHeight
      << "' fill='white'/>\n";
  if (!title.empty()) {
    out << "<text x='" << px((kLeft + kRight) / 2)
        << "' y='24' font-size='15' text-anchor='middle'>" << xml_escape(title) << "</text>\n";
  }

  // Cells; row 0 sits at the bottom.
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double y = kBottom - cell_h * static_cast<double>(r + 1);
    for (std::size_t c = 0; c < n_cols; ++c) {
      out << "<rect x='" << px(kLeft + cell_w * static_cast<double>(c)) << "' y='" << px(y)
          << "' width='" << px(cell_w) << "' height='" << px(cell_h) << "' fill='"
          << gray_fill(grid[r][c]) << "'/>\n";
    }
  }

  // Axis labels from the coordinate vectors (first / middle / last).
  const std::size_t col_marks[3] = {0, n_cols / 2, n_cols - 1};
  for (std::size_t m : col_marks) {
    const double xp = kLeft + cell_w * (static_cast<double>(m) + 0.5);
    out << "<text x='" << px(xp) << "' y='" << px(kBottom + 18)
        << "' font-size='11' text-anchor='middle'>" << tick_label(col_coords[m]) << "</text>\n";
  }
  const std::size_t row_marks[3] = {0, n_rows / 2, n_rows - 1};
  for (std::size_t m : row_marks) {
    const double yp = kBottom - cell_h * (static_cast<double>(m) + 0.5);
    out << "<text x='" << px(kLeft - 8) << "' y='" << px(yp + 4)
        << "' font-size='11' text-anchor='end'>" << tick_label(row_coords[m]) << "</text>\n";
  }
  out << "<text x='" << px((kLeft + kRight) / 2) << "' y='" << px(kBottom + 36)
      << "' font-size='13' text-anchor='middle'>" << xml_escape(x_label) << "</text>\n";
  out << "<text x='16' y='" << px((kTop + kBottom) / 2)
      << "' font-size='13' text-anchor='middle' transform='rotate(-90 16 "
      << px((kTop + kBottom) / 2) << ")'>" << xml_escape(y_label) << "</text>\n";

  // Color bar, 32 bands from 0 (bottom, black) to 1 (top, white).
  constexpr int kBands = 32;
  const double bar_x = kRight + 24;
  const double bar_h = (kBottom - kTop) / kBands;
  for (int b = 0; b < kBands; ++b) {
    const double v = (static_cast<double>(b) + 0.5) / kBands;
    out << "<rect x='" << px(bar_x) << "' y='" << px(kBottom - bar_h * (b + 1)) << "' width='18' height='"
        << px(bar_h + 0.5) << "' fill='" << gray_fill(v) << "'/>\n";
  }
  const double bar_labels[3] = {0.0, 0.5, 1.0};
  for (double v : bar_labels) {
    const double yp = kBottom - (kBottom - kTop) * v;
    out << "<text x='" << px(bar_x + 24) << "' y='" << px(yp + 4) << "' font-size='11'>"
        << tick_label(v) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg_heatmap(const std::vector<std::vector<double>>& grid,
                       const std::vector<double>& row_coords,
                       const std::vector<double>& col_coords, const std::string& path,
                       const std::string& x_label, const std::string& y_label,
                       const std::string& title) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << render_svg_heatmap(grid, row_coords, col_coords, x_label, y_label, title);
  if (!out.flush()) throw IoError("write failed: " + path);
}

}  // namespace qdc
