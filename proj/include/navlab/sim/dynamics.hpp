#pragma once

#include <cmath>
#include <stdexcept>

#include "navlab/core/geometry.hpp"

namespace navlab::sim {

struct RobotState {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // (-pi, pi]
  double v = 0.0;      // body linear velocity, m/s
  double omega = 0.0;  // angular velocity, rad/s

  Pose2 pose() const { return {x, y, theta}; }
  Vec2 position() const { return {x, y}; }
};

struct VelocityCommand {
  double v = 0.0;
  double omega = 0.0;
};

struct MotionLimits {
  double v_max = 2.0;       // m/s
  double omega_max = 3.14;  // rad/s
};

inline VelocityCommand clamp_command(const VelocityCommand& cmd, const MotionLimits& lim) {
  return {clamp(cmd.v, -lim.v_max, lim.v_max), clamp(cmd.omega, -lim.omega_max, lim.omega_max)};
}

/// Exact unicycle arc integration over dt. Commands are clamped to the
/// platform limits and take effect for the whole step (no actuator lag).
inline RobotState step_dynamics(const RobotState& s, VelocityCommand cmd, double dt,
                                const MotionLimits& lim = {}) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_dynamics: dt must be > 0");
  if (!std::isfinite(cmd.v) || !std::isfinite(cmd.omega))
    throw std::invalid_argument("step_dynamics: non-finite command");
  cmd = clamp_command(cmd, lim);
  RobotState n = s;
  if (std::abs(cmd.omega) < 1e-9) {
    n.x += cmd.v * dt * std::cos(s.theta);
    n.y += cmd.v * dt * std::sin(s.theta);
    n.theta = wrap_angle(s.theta + cmd.omega * dt);
  } else {
    const double r = cmd.v / cmd.omega;
    const double th1 = s.theta + cmd.omega * dt;
    n.x += r * (std::sin(th1) - std::sin(s.theta));
    n.y += -r * (std::cos(th1) - std::cos(s.theta));
    n.theta = wrap_angle(th1);
  }
  n.v = cmd.v;
  n.omega = cmd.omega;
  return n;
}

}  // namespace navlab::sim
