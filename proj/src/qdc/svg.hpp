// SPDX-License-Identifier: Apache-2.0
//
// Dependency-free SVG emission: line plots of labeled (x, value) series and
// a grayscale heatmap for the intensity surface.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qdc {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

/// Render a self-contained line plot: axes with tick labels, one polyline
/// per series, legend. Axis ranges are padded 5% beyond the data extent.
/// Throws on an empty series set, an empty series, or non-finite values.
std::string render_svg_lineplot(const std::vector<Series>& series, const std::string& x_label,
                                const std::string& y_label, const std::string& title);

void write_svg_lineplot(const std::vector<Series>& series, const std::string& path,
                        const std::string& x_label, const std::string& y_label,
                        const std::string& title);

/// Render a grayscale heatmap (value 0 -> black, 1 -> white) with one rect
/// per cell, labeled axes and a color bar. `grid[r][c]` is the value at
/// (row_coords[r], col_coords[c]); rows run bottom-to-top. Throws on a
/// ragged grid, coordinate/size mismatch, or values outside [0, 1].
std::string render_svg_heatmap(const std::vector<std::vector<double>>& grid,
                               const std::vector<double>& row_coords,
                               const std::vector<double>& col_coords,
                               const std::string& x_label, const std::string& y_label,
                               const std::string& title);

void write_svg_heatmap(const std::vector<std::vector<double>>& grid,
                       const std::vector<double>& row_coords,
                       const std::vector<double>& col_coords, const std::string& path,
                       const std::string& x_label, const std::string& y_label,
                       const std::string& title);

}  // namespace qdc
