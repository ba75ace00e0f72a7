#ifndef CORANK2_GRID_HPP
#define CORANK2_GRID_HPP

// Sampling of the identifier on a square window and extraction of its zero
// set by marching squares. Every kernel has a serial reference and an OpenMP
// version producing identical output.

#include <string>
#include <vector>

#include "corank2/jets.hpp"

namespace corank2 {

struct GridSpec {
  double window = 0.5;   // half-width of [-w, w]^2
  int resolution = 400;  // nodes per side
};

/// Node values, row-major: values[iy * n + ix] at (x_i, y_j).
struct ScalarGrid {
  GridSpec spec;
  std::vector<double> values;

  int n() const { return spec.resolution; }
  double coordinate(int k) const;
  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * n() + ix]; }
};

using Polyline = std::vector<Vec2<double>>;

void validate(const GridSpec& spec);

ScalarGrid evaluate_grid_serial(const Jet2<double>& g, const GridSpec& spec);
ScalarGrid evaluate_grid_parallel(const Jet2<double>& g, const GridSpec& spec, int workers = 0);

/// Zero-level polylines of the grid, assembled from cell segments.
std::vector<Polyline> marching_squares_serial(const ScalarGrid& grid);
std::vector<Polyline> marching_squares_parallel(const ScalarGrid& grid, int workers = 0);

std::vector<Polyline> map_polylines(const MapJet2<double>& f, const std::vector<Polyline>& lines);

struct PlotArrow {
  Vec2<double> base;
  Vec2<double> direction;  // unit
};

struct PlotScene {
  std::string title;
  std::vector<Polyline> lines;
  std::vector<PlotArrow> arrows;
  bool isolated_point = false;  // draw a marker at the origin
  std::string note;
};

std::string render_svg(const PlotScene& scene);
/// One "x y" pair per line, polylines separated by blank lines.
std::string render_polylines(const std::vector<Polyline>& lines);

}  // namespace corank2

#endif  // CORANK2_GRID_HPP
