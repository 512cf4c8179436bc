#pragma once

#include <deque>
#include <stdexcept>
#include <vector>

#include "navlab/core/rng.hpp"
#include "navlab/sim/distance.hpp"
#include "navlab/sim/grid.hpp"

namespace navlab::sim {

struct WorldGenConfig {
  int width = 30;
  int height = 30;
  double resolution = 0.15;
  double fill_density = 0.32;    // initial random occupancy of the interior
  int smoothing_iters = 2;       // cellular-automaton passes
  int max_attempts = 64;
  double clearance = 0.32;       // required center-distance along the connectivity corridor (m)
  double endpoint_margin = 0.45; // free radius carved around start and goal (m)
};

namespace detail {

inline void smooth_once(OccupancyGrid& g) {
  OccupancyGrid next = g;
  for (int cy = 1; cy < g.height - 1; ++cy) {
    for (int cx = 1; cx < g.width - 1; ++cx) {
      int n = 0;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
          if (g.occupied(cx + dx, cy + dy)) ++n;
      next.set(cx, cy, n >= 5);  // counts self; ties toward carving corridors
    }
  }
  g = std::move(next);
}

inline void carve_disc(OccupancyGrid& g, const Vec2& c, double radius) {
  const int r = static_cast<int>(std::ceil(radius / g.resolution)) + 1;
  const int cx0 = g.cell_x(c.x), cy0 = g.cell_y(c.y);
  for (int cy = cy0 - r; cy <= cy0 + r; ++cy) {
    for (int cx = cx0 - r; cx <= cx0 + r; ++cx) {
      if (cx <= 0 || cy <= 0 || cx >= g.width - 1 || cy >= g.height - 1) continue;
      if (distance(g.cell_center(cx, cy), c) <= radius) g.set(cx, cy, false);
    }
  }
}

/// BFS over cells whose center-distance to the nearest occupied cell center
/// is at least `clearance`; checks that a robot-sized corridor exists.
inline bool corridor_connected(const OccupancyGrid& g, const Vec2& start, const Vec2& goal,
                               double clearance) {
  const DistanceField field = distance_field(g);
  auto open = [&](int cx, int cy) { return field.at(cx, cy) >= clearance; };
  const int sx = g.cell_x(start.x), sy = g.cell_y(start.y);
  const int gx = g.cell_x(goal.x), gy = g.cell_y(goal.y);
  if (!g.in_bounds(sx, sy) || !g.in_bounds(gx, gy)) return false;
  if (!open(sx, sy) || !open(gx, gy)) return false;
  std::vector<uint8_t> seen(g.cells.size(), 0);
  std::deque<std::pair<int, int>> queue{{sx, sy}};
  seen[g.index(sx, sy)] = 1;
  constexpr int kDx[4] = {1, -1, 0, 0};
  constexpr int kDy[4] = {0, 0, 1, -1};
  while (!queue.empty()) {
    auto [cx, cy] = queue.front();
    queue.pop_front();
    if (cx == gx && cy == gy) return true;
    for (int k = 0; k < 4; ++k) {
      const int nx = cx + kDx[k], ny = cy + kDy[k];
      if (!g.in_bounds(nx, ny) || seen[g.index(nx, ny)] || !open(nx, ny)) continue;
      seen[g.index(nx, ny)] = 1;
      queue.emplace_back(nx, ny);
    }
  }
  return false;
}

}  // namespace detail

/// Procedural clutter: random fill smoothed by a cellular automaton, start at
/// the bottom, goal at the top, retried until a robot-wide corridor connects
/// them. Identical (seed, cfg) yields identical worlds.
inline World generate_world(uint64_t seed, const WorldGenConfig& cfg = {}) {
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Rng rng(mix_seed(seed, 0x77041d00ULL, static_cast<uint64_t>(attempt)));
    OccupancyGrid g(cfg.width, cfg.height, cfg.resolution);
    g.close_border();
    for (int cy = 1; cy < cfg.height - 1; ++cy)
      for (int cx = 1; cx < cfg.width - 1; ++cx)
        g.set(cx, cy, rng.uniform() < cfg.fill_density);
    for (int i = 0; i < cfg.smoothing_iters; ++i) detail::smooth_once(g);
    g.close_border();

    // Start centered near the bottom edge, goal near the top, with jitter.
    const double w = g.width_m(), h = g.height_m();
    const double jitter = 0.2 * w;
    World world;
    world.grid = g;
    world.start = {w / 2 + rng.uniform(-jitter, jitter), cfg.endpoint_margin + cfg.resolution};
    world.goal = {w / 2 + rng.uniform(-jitter, jitter), h - cfg.endpoint_margin - cfg.resolution};
    detail::carve_disc(world.grid, world.start, cfg.endpoint_margin);
    detail::carve_disc(world.grid, world.goal, cfg.endpoint_margin);

    if (detail::corridor_connected(world.grid, world.start, world.goal, cfg.clearance))
      return world;
  }
  throw std::runtime_error("generate_world: no connected world after " +
                           std::to_string(cfg.max_attempts) + " attempts (density too high?)");
}

}  // namespace navlab::sim
