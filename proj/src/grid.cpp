#include "corank2/grid.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace corank2 {

namespace {

// Exact zeros would need ambiguous-case handling; nudge them to the positive side.
double nudged(double x) { return x == 0.0 ? std::numeric_limits<double>::min() : x; }

void fill_row(const Jet2<double>& g, const ScalarGrid& grid, std::vector<double>& values, int iy) {
  const int n = grid.n();
  const double y = grid.coordinate(iy);
  for (int ix = 0; ix < n; ++ix) {
    values[static_cast<std::size_t>(iy) * n + ix] = nudged(evaluate(g, grid.coordinate(ix), y));
  }
}

int effective_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Edges are keyed by the lower node and the direction: key = 2 * node + (0 horizontal | 1 vertical).
using EdgeKey = long long;

struct Segment {
  EdgeKey a, b;
};

EdgeKey edge_key(int n, int ix, int iy, int vertical) {
  return 2LL * (static_cast<long long>(iy) * n + ix) + vertical;
}

Vec2<double> edge_point(const ScalarGrid& grid, EdgeKey key) {
  const int n = grid.n();
  const long long node = key / 2;
  const int ix = static_cast<int>(node % n), iy = static_cast<int>(node / n);
  const bool vertical = key % 2 == 1;
  const int jx = vertical ? ix : ix + 1, jy = vertical ? iy + 1 : iy;
  const double f0 = grid.at(ix, iy), f1 = grid.at(jx, jy);
  const double s = f0 / (f0 - f1);
  const double x0 = grid.coordinate(ix), y0 = grid.coordinate(iy);
  return {x0 + s * (grid.coordinate(jx) - x0), y0 + s * (grid.coordinate(jy) - y0)};
}

// Segments of one row of cells, in a fixed order.
void row_segments(const ScalarGrid& grid, int iy, std::vector<Segment>& out) {
  const int n = grid.n();
  for (int ix = 0; ix + 1 < n; ++ix) {
    const bool s0 = grid.at(ix, iy) > 0, s1 = grid.at(ix + 1, iy) > 0;
    const bool s2 = grid.at(ix + 1, iy + 1) > 0, s3 = grid.at(ix, iy + 1) > 0;
    const EdgeKey bottom = edge_key(n, ix, iy, 0), right = edge_key(n, ix + 1, iy, 1);
    const EdgeKey top = edge_key(n, ix, iy + 1, 0), left = edge_key(n, ix, iy, 1);
    std::vector<EdgeKey> crossed;
    if (s0 != s1) crossed.push_back(bottom);
    if (s1 != s2) crossed.push_back(right);
    if (s2 != s3) crossed.push_back(top);
    if (s3 != s0) crossed.push_back(left);
    if (crossed.size() == 2) {
      out.push_back({crossed[0], crossed[1]});
    } else if (crossed.size() == 4) {
      // Saddle cell: resolve with the centre value.
      const double centre = 0.25 * (grid.at(ix, iy) + grid.at(ix + 1, iy) + grid.at(ix + 1, iy + 1) + grid.at(ix, iy + 1));
      if ((centre > 0) == s0) {
        out.push_back({bottom, right});
        out.push_back({top, left});
      } else {
        out.push_back({bottom, left});
        out.push_back({right, top});
      }
    }
  }
}

std::vector<Polyline> assemble(const ScalarGrid& grid, const std::vector<Segment>& segments) {
  // Each crossed edge belongs to at most two segments.
  std::unordered_map<EdgeKey, std::vector<std::size_t>> touching;
  touching.reserve(segments.size() * 2);
  for (std::size_t k = 0; k < segments.size(); ++k) {
    touching[segments[k].a].push_back(k);
    touching[segments[k].b].push_back(k);
  }
  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> lines;

  auto walk = [&](std::size_t start, EdgeKey from, std::vector<EdgeKey>& chain) {
    std::size_t seg = start;
    EdgeKey at = from;
    while (true) {
      used[seg] = true;
      const EdgeKey next = segments[seg].a == at ? segments[seg].b : segments[seg].a;
      chain.push_back(next);
      std::size_t follow = segments.size();
      for (std::size_t cand : touching[next]) {
        if (!used[cand]) {
          follow = cand;
          break;
        }
      }
      if (follow == segments.size()) return;
      seg = follow;
      at = next;
    }
  };

  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (used[k]) continue;
    // Extend in both directions from segment k.
    std::vector<EdgeKey> forward{segments[k].a};
    walk(k, segments[k].a, forward);
    std::vector<EdgeKey> backward;
    std::size_t back_start = segments.size();
    for (std::size_t cand : touching[segments[k].a]) {
      if (!used[cand]) {
        back_start = cand;
        break;
      }
    }
    if (back_start != segments.size()) walk(back_start, segments[k].a, backward);
    Polyline line;
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) line.push_back(edge_point(grid, *it));
    for (EdgeKey key : forward) line.push_back(edge_point(grid, key));
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

double ScalarGrid::coordinate(int k) const {
  if (spec.resolution == 1) return 0.0;
  return -spec.window + 2.0 * spec.window * k / (spec.resolution - 1);
}

void validate(const GridSpec& spec) {
  if (!(spec.window > 0.0)) throw std::invalid_argument("grid: window must be positive");
  if (spec.resolution < 2) throw std::invalid_argument("grid: resolution must be at least 2");
}

ScalarGrid evaluate_grid_serial(const Jet2<double>& g, const GridSpec& spec) {
  validate(spec);
  ScalarGrid grid{spec, {}};
  grid.values.assign(static_cast<std::size_t>(spec.resolution) * spec.resolution, 0.0);
  for (int iy = 0; iy < spec.resolution; ++iy) fill_row(g, grid, grid.values, iy);
  return grid;
}

ScalarGrid evaluate_grid_parallel(const Jet2<double>& g, const GridSpec& spec, int workers) {
  validate(spec);
  ScalarGrid grid{spec, {}};
  grid.values.assign(static_cast<std::size_t>(spec.resolution) * spec.resolution, 0.0);
  const int n = spec.resolution;
#pragma omp parallel for schedule(static) num_threads(effective_workers(workers))
  for (int iy = 0; iy < n; ++iy) fill_row(g, grid, grid.values, iy);
  return grid;
}

std::vector<Polyline> marching_squares_serial(const ScalarGrid& grid) {
  std::vector<Segment> segments;
  for (int iy = 0; iy + 1 < grid.n(); ++iy) row_segments(grid, iy, segments);
  return assemble(grid, segments);
}

std::vector<Polyline> marching_squares_parallel(const ScalarGrid& grid, int workers) {
  const int rows = grid.n() - 1;
  std::vector<std::vector<Segment>> per_row(static_cast<std::size_t>(std::max(rows, 0)));
#pragma omp parallel for schedule(static) num_threads(effective_workers(workers))
  for (int iy = 0; iy < rows; ++iy) row_segments(grid, iy, per_row[static_cast<std::size_t>(iy)]);
  std::vector<Segment> segments;
  for (auto& row : per_row) segments.insert(segments.end(), row.begin(), row.end());
  return assemble(grid, segments);
}

std::vector<Polyline> map_polylines(const MapJet2<double>& f, const std::vector<Polyline>& lines) {
  std::vector<Polyline> out;
  out.reserve(lines.size());
  for (const Polyline& line : lines) {
    Polyline image;
    image.reserve(line.size());
    for (const auto& p : line) image.push_back(evaluate(f, p[0], p[1]));
    out.push_back(std::move(image));
  }
  return out;
}

std::string render_polylines(const std::vector<Polyline>& lines) {
  std::ostringstream os;
  os << std::setprecision(10);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (k > 0) os << '\n';
    for (const auto& p : lines[k]) os << p[0] << ' ' << p[1] << '\n';
  }
  return os.str();
}

std::string render_svg(const PlotScene& scene) {
  double lo_x = -1e-3, hi_x = 1e-3, lo_y = -1e-3, hi_y = 1e-3;
  auto extend = [&](const Vec2<double>& p) {
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  };
  for (const auto& line : scene.lines)
    for (const auto& p : line) extend(p);
  const double span = std::max(hi_x - lo_x, hi_y - lo_y) * 1.1;
  const double cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);
  const double size = 600.0, margin = 20.0;
  auto px = [&](double x) { return margin + (x - cx + span / 2) / span * (size - 2 * margin); };
  auto py = [&](double y) { return margin + (cy + span / 2 - y) / span * (size - 2 * margin); };

  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 40
     << "\" viewBox=\"0 0 " << size << ' ' << size + 40 << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!scene.title.empty()) os << "<text x=\"10\" y=\"" << size + 15 << "\" font-size=\"13\">" << scene.title << "</text>\n";
  if (!scene.note.empty()) os << "<text x=\"10\" y=\"" << size + 32 << "\" font-size=\"12\">" << scene.note << "</text>\n";
  os << "<line x1=\"" << px(lo_x - span) << "\" y1=\"" << py(0) << "\" x2=\"" << px(hi_x + span) << "\" y2=\"" << py(0)
     << "\" stroke=\"#ddd\"/>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(lo_y - span) << "\" x2=\"" << px(0) << "\" y2=\"" << py(hi_y + span)
     << "\" stroke=\"#ddd\"/>\n";
  for (const auto& line : scene.lines) {
    if (line.size() < 2) continue;
    os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : line) os << px(p[0]) << ',' << py(p[1]) << ' ';
    os << "\"/>\n";
  }
  for (const auto& a : scene.arrows) {
    const double len = 0.15 * span;
    const double x0 = px(a.base[0]), y0 = py(a.base[1]);
    const double x1 = px(a.base[0] + len * a.direction[0]), y1 = py(a.base[1] + len * a.direction[1]);
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1
       << "\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
    os << "<circle cx=\"" << x1 << "\" cy=\"" << y1 << "\" r=\"3\" fill=\"#c0392b\"/>\n";
  }
  if (scene.isolated_point) {
    os << "<circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"5\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace corank2
