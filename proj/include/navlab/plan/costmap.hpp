#pragma once

#include <cstdint>
#include <vector>

#include "navlab/sim/distance.hpp"
#include "navlab/sim/grid.hpp"

namespace navlab::plan {

/// Binary traversability raster derived from an occupancy grid by inflation.
struct Costmap {
  int width = 0;
  int height = 0;
  double resolution = 0.0;
  Vec2 origin;
  std::vector<uint8_t> blocked;

  size_t index(int cx, int cy) const { return static_cast<size_t>(cy) * width + cx; }
  bool in_bounds(int cx, int cy) const { return cx >= 0 && cx < width && cy >= 0 && cy < height; }
  bool is_blocked(int cx, int cy) const {
    if (!in_bounds(cx, cy)) return true;
    return blocked[index(cx, cy)] != 0;
  }
  int cell_x(double wx) const { return static_cast<int>(std::floor((wx - origin.x) / resolution)); }
  int cell_y(double wy) const { return static_cast<int>(std::floor((wy - origin.y) / resolution)); }
  Vec2 cell_center(int cx, int cy) const {
    return {origin.x + (cx + 0.5) * resolution, origin.y + (cy + 0.5) * resolution};
  }
};

/// A cell is blocked iff its center lies within `radius` of any occupied cell
/// center (center-to-center Euclidean distance transform).
inline Costmap inflate(const sim::OccupancyGrid& grid, double radius) {
  if (radius < 0.0) throw std::invalid_argument("inflate: radius must be >= 0");
  const sim::DistanceField field = sim::distance_field(grid);
  Costmap cm;
  cm.width = grid.width;
  cm.height = grid.height;
  cm.resolution = grid.resolution;
  cm.origin = grid.origin;
  cm.blocked.resize(grid.cells.size());
  for (size_t i = 0; i < cm.blocked.size(); ++i) cm.blocked[i] = field.d[i] <= radius ? 1 : 0;
  return cm;
}

}  // namespace navlab::plan
