#pragma once

// Heatmap rendering of sweep output: a self-contained SVG plus a gnuplot
// script that replots the same slice from the CSV.

#include "unruh/sweep.hpp"

#include <span>
#include <string>
#include <vector>

namespace unruh {

struct FigureSpec {
  RegionSelector region;
  Measure measure = Measure::Concurrence;
  std::string param_name = "param";  // label for the <param> axis
  std::string title;
  std::string csv_path;  // data file referenced by the gnuplot script
};

/// Two swept axes and the measure sampled on their product grid (row-major,
/// y outer).  Missing cells are NaN.
struct Heatmap {
  std::string x_name;
  std::string y_name;
  int x_column = 0;  // 1-based CSV column
  int y_column = 0;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> values;
};

/// Throws std::invalid_argument if no rows match the region or the rows do
/// not span exactly two axes.
Heatmap make_heatmap(std::span<const SweepRow> rows, const FigureSpec& spec);

std::string render_svg(const Heatmap& map, const FigureSpec& spec);
std::string render_gnuplot(const Heatmap& map, const FigureSpec& spec);

/// Writes `<stem>.svg` and `<stem>.gp`; returns the two paths.
std::vector<std::string> render_figure(std::span<const SweepRow> rows, const FigureSpec& spec,
                                       const std::string& stem);

/// One figure per (region, measure) of the config.  `stem` gets a
/// `_<region>_<measure>` suffix per figure.  The separability verdict is not
/// a CSV column and is skipped.
std::vector<std::string> render_sweep_figures(std::span<const SweepRow> rows,
                                              const SweepConfig& cfg, const std::string& csv_path,
                                              const std::string& stem);

}  // namespace unruh
