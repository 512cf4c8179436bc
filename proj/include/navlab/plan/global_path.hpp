#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

#include "navlab/core/geometry.hpp"
#include "navlab/plan/costmap.hpp"

namespace navlab::plan {

enum class PlanStatus { ok, no_path, start_blocked, goal_blocked };

inline const char* to_string(PlanStatus s) {
  switch (s) {
    case PlanStatus::ok: return "ok";
    case PlanStatus::no_path: return "no_path";
    case PlanStatus::start_blocked: return "start_blocked";
    case PlanStatus::goal_blocked: return "goal_blocked";
  }
  return "?";
}

/// Polyline from start to goal with a cumulative arc-length table for
/// projection and progress queries.
struct GlobalPath {
  std::vector<Vec2> waypoints;
  std::vector<double> cum_s;  // cum_s[i] = arc length from start to waypoint i

  void rebuild_arclength() {
    cum_s.resize(waypoints.size());
    double s = 0.0;
    for (size_t i = 0; i < waypoints.size(); ++i) {
      if (i > 0) s += distance(waypoints[i - 1], waypoints[i]);
      cum_s[i] = s;
    }
  }

  double total_length() const { return cum_s.empty() ? 0.0 : cum_s.back(); }

  Vec2 point_at(double s) const {
    if (waypoints.empty()) return {};
    if (s <= 0.0) return waypoints.front();
    if (s >= total_length()) return waypoints.back();
    const auto it = std::upper_bound(cum_s.begin(), cum_s.end(), s);
    const size_t i = static_cast<size_t>(it - cum_s.begin());  // s < cum_s[i]
    const double seg = cum_s[i] - cum_s[i - 1];
    const double t = seg > 0.0 ? (s - cum_s[i - 1]) / seg : 0.0;
    return waypoints[i - 1] + t * (waypoints[i] - waypoints[i - 1]);
  }

  struct Projection {
    double s = 0.0;       // arc length of the nearest point
    double dist = 0.0;    // distance from the query to the path
    Vec2 point;
  };

  /// Nearest point on the polyline to p (linear scan over segments).
  Projection project(const Vec2& p) const {
    Projection best;
    best.dist = std::numeric_limits<double>::infinity();
    if (waypoints.size() == 1) {
      return {0.0, distance(p, waypoints[0]), waypoints[0]};
    }
    for (size_t i = 0; i + 1 < waypoints.size(); ++i) {
      const Vec2 q = closest_point_on_segment(p, waypoints[i], waypoints[i + 1]);
      const double d = distance(p, q);
      if (d < best.dist) {
        best.dist = d;
        best.point = q;
        best.s = cum_s[i] + distance(waypoints[i], q);
      }
    }
    return best;
  }

  double remaining_from(const Vec2& p) const { return total_length() - project(p).s; }

  /// Sub-polyline covering [s0, s1], with interpolated end points.
  GlobalPath slice(double s0, double s1) const {
    GlobalPath out;
    s0 = navlab::clamp(s0, 0.0, total_length());
    s1 = navlab::clamp(s1, s0, total_length());
    out.waypoints.push_back(point_at(s0));
    for (size_t i = 0; i < waypoints.size(); ++i)
      if (cum_s[i] > s0 && cum_s[i] < s1) out.waypoints.push_back(waypoints[i]);
    if (s1 > s0) out.waypoints.push_back(point_at(s1));
    out.rebuild_arclength();
    return out;
  }
};

struct PlanResult {
  PlanStatus status = PlanStatus::no_path;
  GlobalPath path;        // valid iff status == ok
  double cell_cost = 0.0; // Dijkstra cost in cell units (axis 1, diagonal sqrt 2)
};

/// Dijkstra over the 8-connected costmap lattice; axis moves cost 1 cell,
/// diagonals sqrt(2). Diagonal moves require both adjacent orthogonal cells
/// free (no corner cutting). Ties broken by cell index, which fixes the
/// expansion order and makes the result deterministic.
inline PlanResult plan_global(const Costmap& cm, const Vec2& start, const Vec2& goal) {
  PlanResult result;
  const int sx = cm.cell_x(start.x), sy = cm.cell_y(start.y);
  const int gx = cm.cell_x(goal.x), gy = cm.cell_y(goal.y);
  if (cm.is_blocked(sx, sy)) {
    result.status = PlanStatus::start_blocked;
    return result;
  }
  if (cm.is_blocked(gx, gy)) {
    result.status = PlanStatus::goal_blocked;
    return result;
  }

  const size_t n = static_cast<size_t>(cm.width) * cm.height;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<int32_t> parent(n, -1);
  std::vector<uint8_t> done(n, 0);

  using Entry = std::pair<double, int32_t>;  // (cost, cell index)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  const int32_t start_idx = static_cast<int32_t>(cm.index(sx, sy));
  const int32_t goal_idx = static_cast<int32_t>(cm.index(gx, gy));
  dist[start_idx] = 0.0;
  open.emplace(0.0, start_idx);

  constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
  constexpr double kSqrt2 = 1.41421356237309514547;

  while (!open.empty()) {
    const auto [d, idx] = open.top();
    open.pop();
    if (done[idx]) continue;
    done[idx] = 1;
    if (idx == goal_idx) break;
    const int cx = idx % cm.width, cy = idx / cm.width;
    for (int k = 0; k < 8; ++k) {
      const int nx = cx + kDx[k], ny = cy + kDy[k];
      if (!cm.in_bounds(nx, ny) || cm.is_blocked(nx, ny)) continue;
      if (k >= 4 && (cm.is_blocked(cx + kDx[k], cy) || cm.is_blocked(cx, cy + kDy[k]))) continue;
      const int32_t nidx = static_cast<int32_t>(cm.index(nx, ny));
      const double nd = d + (k < 4 ? 1.0 : kSqrt2);
      if (nd < dist[nidx]) {
        dist[nidx] = nd;
        parent[nidx] = idx;
        open.emplace(nd, nidx);
      }
    }
  }

  if (dist[goal_idx] == kInf) {
    result.status = PlanStatus::no_path;
    return result;
  }

  std::vector<Vec2> centers;
  for (int32_t at = goal_idx; at != -1; at = parent[at])
    centers.push_back(cm.cell_center(at % cm.width, at / cm.width));
  std::reverse(centers.begin(), centers.end());

  GlobalPath& path = result.path;
  path.waypoints.push_back(start);
  for (const Vec2& c : centers) {
    if (distance(path.waypoints.back(), c) > 1e-9) path.waypoints.push_back(c);
  }
  if (distance(path.waypoints.back(), goal) > 1e-9) path.waypoints.push_back(goal);
  if (path.waypoints.size() == 1) path.waypoints.push_back(goal);  // degenerate same-cell query
  path.rebuild_arclength();
  result.cell_cost = dist[goal_idx];
  result.status = PlanStatus::ok;
  return result;
}

}  // namespace navlab::plan
