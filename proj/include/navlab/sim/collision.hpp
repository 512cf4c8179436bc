#pragma once

#include <cmath>

#include "navlab/core/geometry.hpp"
#include "navlab/sim/grid.hpp"

namespace navlab::sim {

/// Circular robot footprint.
struct Footprint {
  double radius = 0.21;  // meters
};

/// Exact disc-vs-cell test: true iff any occupied cell rectangle intersects
/// the disc of fp.radius centered at (x, y). Out-of-bounds counts as occupied.
inline bool check_collision(const OccupancyGrid& g, double x, double y, const Footprint& fp) {
  const double r = fp.radius;
  const int cx0 = g.cell_x(x - r), cx1 = g.cell_x(x + r);
  const int cy0 = g.cell_y(y - r), cy1 = g.cell_y(y + r);
  const double r2 = r * r;
  for (int cy = cy0; cy <= cy1; ++cy) {
    for (int cx = cx0; cx <= cx1; ++cx) {
      if (!g.occupied(cx, cy)) continue;
      const double lx = g.origin.x + cx * g.resolution;
      const double ly = g.origin.y + cy * g.resolution;
      const double nx = clamp(x, lx, lx + g.resolution);
      const double ny = clamp(y, ly, ly + g.resolution);
      const double dx = x - nx, dy = y - ny;
      if (dx * dx + dy * dy <= r2) return true;
    }
  }
  return false;
}

inline bool check_collision(const OccupancyGrid& g, const Pose2& pose, const Footprint& fp) {
  return check_collision(g, pose.x, pose.y, fp);
}

}  // namespace navlab::sim
