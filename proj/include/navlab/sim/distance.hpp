#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "navlab/core/geometry.hpp"
#include "navlab/sim/grid.hpp"

namespace navlab::sim {

/// Euclidean distance (meters) from each cell center to the nearest occupied
/// cell center, sampled on the grid. Supports bilinear interpolation at
/// arbitrary points, with the matching analytic gradient.
struct DistanceField {
  int width = 0;
  int height = 0;
  double resolution = 0.0;
  Vec2 origin;
  std::vector<double> d;  // row-major, meters

  double at(int cx, int cy) const {
    cx = clamp(cx, 0, width - 1);
    cy = clamp(cy, 0, height - 1);
    return d[static_cast<size_t>(cy) * width + cx];
  }

  /// Bilinear interpolation over cell-center samples; queries outside the
  /// sample hull are clamped to it.
  double sample(const Vec2& p) const {
    double gx, gy;
    int x0, y0;
    locate(p, gx, gy, x0, y0);
    const double d00 = at(x0, y0), d10 = at(x0 + 1, y0);
    const double d01 = at(x0, y0 + 1), d11 = at(x0 + 1, y0 + 1);
    return (1 - gy) * ((1 - gx) * d00 + gx * d10) + gy * ((1 - gx) * d01 + gx * d11);
  }

  /// Gradient of sample() w.r.t. p, analytic within each bilinear patch.
  Vec2 gradient(const Vec2& p) const {
    double gx, gy;
    int x0, y0;
    locate(p, gx, gy, x0, y0);
    const double d00 = at(x0, y0), d10 = at(x0 + 1, y0);
    const double d01 = at(x0, y0 + 1), d11 = at(x0 + 1, y0 + 1);
    const double ddx = ((1 - gy) * (d10 - d00) + gy * (d11 - d01)) / resolution;
    const double ddy = ((1 - gx) * (d01 - d00) + gx * (d11 - d10)) / resolution;
    return {ddx, ddy};
  }

 private:
  void locate(const Vec2& p, double& gx, double& gy, int& x0, int& y0) const {
    // Sample lattice sits at cell centers: lattice coord = world/res - 0.5.
    double fx = (p.x - origin.x) / resolution - 0.5;
    double fy = (p.y - origin.y) / resolution - 0.5;
    fx = clamp(fx, 0.0, static_cast<double>(width - 1));
    fy = clamp(fy, 0.0, static_cast<double>(height - 1));
    x0 = std::min(static_cast<int>(fx), width - 2);
    y0 = std::min(static_cast<int>(fy), height - 2);
    gx = fx - x0;
    gy = fy - y0;
  }
};

namespace detail {

/// 1D squared-distance transform (Felzenszwalb & Huttenlocher), lower envelope
/// of parabolas rooted at f.
inline void dt_1d(const std::vector<double>& f, std::vector<double>& out,
                  std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  v.assign(n, 0);
  z.assign(n + 1, 0.0);
  int k = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    double s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
    while (s <= z[k]) {
      --k;
      s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    out[q] = dq * dq + f[v[k]];
  }
}

}  // namespace detail

/// Exact center-to-center Euclidean distance transform of the occupied set.
inline DistanceField distance_field(const OccupancyGrid& g) {
  constexpr double kInf = 1e18;
  DistanceField field;
  field.width = g.width;
  field.height = g.height;
  field.resolution = g.resolution;
  field.origin = g.origin;
  field.d.assign(static_cast<size_t>(g.width) * g.height, 0.0);

  std::vector<double> col(g.height), colout(g.height);
  std::vector<int> v(std::max(g.width, g.height));
  std::vector<double> z(std::max(g.width, g.height) + 1);
  std::vector<double> tmp(field.d.size());

  for (int x = 0; x < g.width; ++x) {
    for (int y = 0; y < g.height; ++y) col[y] = g.occupied(x, y) ? 0.0 : kInf;
    detail::dt_1d(col, colout, v, z);
    for (int y = 0; y < g.height; ++y) tmp[static_cast<size_t>(y) * g.width + x] = colout[y];
  }
  std::vector<double> row(g.width), rowout(g.width);
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) row[x] = tmp[static_cast<size_t>(y) * g.width + x];
    detail::dt_1d(row, rowout, v, z);
    for (int x = 0; x < g.width; ++x)
      field.d[static_cast<size_t>(y) * g.width + x] = std::sqrt(rowout[x]) * g.resolution;
  }
  return field;
}

}  // namespace navlab::sim
