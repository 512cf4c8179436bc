#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "navlab/core/geometry.hpp"
#include "navlab/core/rng.hpp"
#include "navlab/sim/dynamics.hpp"
#include "navlab/sim/grid.hpp"

namespace navlab::sim {

struct SensorConfig {
  double fov = 270.0 * kPi / 180.0;  // radians
  int n_beams = 720;
  double max_range = 5.0;  // meters
  double noise_std = 0.0;  // meters, Gaussian, 0 = noiseless
};

struct LaserScan {
  std::vector<double> ranges;  // beam 0 at -fov/2 relative to heading, uniform spacing
};

/// Beam angle relative to the heading; beams span [-fov/2, +fov/2] inclusive.
inline double beam_angle(const SensorConfig& cfg, int i) {
  if (cfg.n_beams == 1) return 0.0;
  return -cfg.fov / 2.0 + cfg.fov * i / (cfg.n_beams - 1);
}

namespace detail {

/// Amanatides-Woo grid traversal; returns the distance at which the ray first
/// enters an occupied cell, capped at max_range. The start cell must be free.
inline double cast_ray(const OccupancyGrid& g, const Vec2& p, double angle, double max_range) {
  const double dx = std::cos(angle), dy = std::sin(angle);
  int cx = g.cell_x(p.x), cy = g.cell_y(p.y);
  const int step_x = dx > 0 ? 1 : -1;
  const int step_y = dy > 0 ? 1 : -1;
  constexpr double kInf = 1e30;
  const double inv_dx = std::abs(dx) > 1e-15 ? 1.0 / dx : kInf;
  const double inv_dy = std::abs(dy) > 1e-15 ? 1.0 / dy : kInf;
  // Parameter t to the next vertical / horizontal cell boundary.
  double next_bx = g.origin.x + (cx + (step_x > 0 ? 1 : 0)) * g.resolution;
  double next_by = g.origin.y + (cy + (step_y > 0 ? 1 : 0)) * g.resolution;
  double t_max_x = std::abs(dx) > 1e-15 ? (next_bx - p.x) * inv_dx : kInf;
  double t_max_y = std::abs(dy) > 1e-15 ? (next_by - p.y) * inv_dy : kInf;
  const double t_delta_x = std::abs(dx) > 1e-15 ? g.resolution / std::abs(dx) : kInf;
  const double t_delta_y = std::abs(dy) > 1e-15 ? g.resolution / std::abs(dy) : kInf;

  while (true) {
    double t_enter;
    if (t_max_x < t_max_y) {
      t_enter = t_max_x;
      t_max_x += t_delta_x;
      cx += step_x;
    } else {
      t_enter = t_max_y;
      t_max_y += t_delta_y;
      cy += step_y;
    }
    if (t_enter >= max_range) return max_range;
    if (g.occupied(cx, cy)) return t_enter;
  }
}

}  // namespace detail

/// Simulates a planar scan from the given pose. Returns nullopt when the pose
/// sits inside an occupied cell (the caller treats that as a collision).
/// With noise_std > 0, Gaussian noise is added and clamped to (0, max_range].
inline std::optional<LaserScan> raycast_scan(const OccupancyGrid& g, const RobotState& pose,
                                             const SensorConfig& cfg, Rng* noise_rng = nullptr) {
  if (g.occupied(g.cell_x(pose.x), g.cell_y(pose.y))) return std::nullopt;
  LaserScan scan;
  scan.ranges.resize(cfg.n_beams);
  for (int i = 0; i < cfg.n_beams; ++i) {
    double r = detail::cast_ray(g, pose.position(), pose.theta + beam_angle(cfg, i), cfg.max_range);
    if (cfg.noise_std > 0.0 && noise_rng != nullptr)
      r = clamp(r + noise_rng->normal(0.0, cfg.noise_std), 1e-6, cfg.max_range);
    scan.ranges[i] = r;
  }
  return scan;
}

/// Min-pools groups of `factor` beams; conservative (keeps the closest return).
inline LaserScan downsample_scan(const LaserScan& scan, int factor) {
  LaserScan out;
  const int n = static_cast<int>(scan.ranges.size()) / factor;
  out.ranges.resize(n);
  for (int i = 0; i < n; ++i) {
    double m = scan.ranges[static_cast<size_t>(i) * factor];
    for (int j = 1; j < factor; ++j) m = std::min(m, scan.ranges[static_cast<size_t>(i) * factor + j]);
    out.ranges[i] = m;
  }
  return out;
}

}  // namespace navlab::sim
