#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "navlab/core/error.hpp"
#include "navlab/core/geometry.hpp"

namespace navlab::sim {

/// Binary occupancy raster. Row-major, cell (0,0) at the origin corner,
/// row index grows with +y. Border cells are always occupied (closed world).
struct OccupancyGrid {
  int width = 0;
  int height = 0;
  double resolution = 0.15;   // meters per cell
  Vec2 origin{0.0, 0.0};      // world position of the (0,0) cell corner
  std::vector<uint8_t> cells; // 1 = occupied

  OccupancyGrid() = default;
  OccupancyGrid(int w, int h, double res, Vec2 org = {0.0, 0.0})
      : width(w), height(h), resolution(res), origin(org), cells(static_cast<size_t>(w) * h, 0) {
    if (w < 3 || h < 3) throw std::invalid_argument("OccupancyGrid: width/height must be >= 3");
    if (res <= 0.0) throw std::invalid_argument("OccupancyGrid: resolution must be > 0");
  }

  size_t index(int cx, int cy) const { return static_cast<size_t>(cy) * width + cx; }
  bool in_bounds(int cx, int cy) const { return cx >= 0 && cx < width && cy >= 0 && cy < height; }

  /// Out-of-bounds cells read as occupied.
  bool occupied(int cx, int cy) const {
    if (!in_bounds(cx, cy)) return true;
    return cells[index(cx, cy)] != 0;
  }

  void set(int cx, int cy, bool occ) { cells[index(cx, cy)] = occ ? 1 : 0; }

  int cell_x(double wx) const { return static_cast<int>(std::floor((wx - origin.x) / resolution)); }
  int cell_y(double wy) const { return static_cast<int>(std::floor((wy - origin.y) / resolution)); }
  Vec2 cell_center(int cx, int cy) const {
    return {origin.x + (cx + 0.5) * resolution, origin.y + (cy + 0.5) * resolution};
  }

  bool occupied_at(const Vec2& p) const { return occupied(cell_x(p.x), cell_y(p.y)); }

  double width_m() const { return width * resolution; }
  double height_m() const { return height * resolution; }

  void close_border() {
    for (int x = 0; x < width; ++x) { set(x, 0, true); set(x, height - 1, true); }
    for (int y = 0; y < height; ++y) { set(0, y, true); set(width - 1, y, true); }
  }

  bool operator==(const OccupancyGrid& o) const {
    return width == o.width && height == o.height && resolution == o.resolution &&
           origin.x == o.origin.x && origin.y == o.origin.y && cells == o.cells;
  }
};

/// A navigation scenario: grid plus start and goal positions in meters.
struct World {
  OccupancyGrid grid;
  Vec2 start;
  Vec2 goal;
};

/// World file format (text):
///   line 1: width height resolution
///   line 2: start_x start_y goal_x goal_y           (meters)
///   then `height` rows of `width` characters, '.' free / '#' occupied.
/// The first character row is the top of the map (highest y row).
inline void save_world(const World& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot open for writing: " + path);
  out << w.grid.width << ' ' << w.grid.height << ' ' << w.grid.resolution << '\n';
  out << w.start.x << ' ' << w.start.y << ' ' << w.goal.x << ' ' << w.goal.y << '\n';
  for (int cy = w.grid.height - 1; cy >= 0; --cy) {
    for (int cx = 0; cx < w.grid.width; ++cx) out << (w.grid.occupied(cx, cy) ? '#' : '.');
    out << '\n';
  }
  if (!out) throw FileError("write failed: " + path);
}

/// Accepts externally authored grids; the border is forced occupied on load
/// to keep the closed-world invariant.
inline World load_world(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open: " + path);
  int width = 0, height = 0;
  double resolution = 0.0;
  if (!(in >> width >> height >> resolution)) throw FormatError("bad header line: " + path);
  if (width < 3 || height < 3 || resolution <= 0.0)
    throw FormatError("invalid dimensions in " + path);
  World w;
  if (!(in >> w.start.x >> w.start.y >> w.goal.x >> w.goal.y))
    throw FormatError("bad start/goal line: " + path);
  w.grid = OccupancyGrid(width, height, resolution);
  std::string row;
  std::getline(in, row);  // consume end of line 2
  for (int cy = height - 1; cy >= 0; --cy) {
    if (!std::getline(in, row)) throw FormatError("missing grid row in " + path);
    if (static_cast<int>(row.size()) < width) throw FormatError("short grid row in " + path);
    for (int cx = 0; cx < width; ++cx) {
      const char c = row[cx];
      if (c != '.' && c != '#') throw FormatError(std::string("bad cell char '") + c + "' in " + path);
      w.grid.set(cx, cy, c == '#');
    }
  }
  w.grid.close_border();
  return w;
}

}  // namespace navlab::sim
