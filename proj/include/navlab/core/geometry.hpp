#pragma once

#include <cmath>

namespace navlab {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }

/// Normalizes an angle to (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::fmod(a + kPi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  r -= kPi;           // r in [-pi, pi)
  if (r <= -kPi) r = kPi;
  return r;
}

/// Shortest signed angular difference a - b, wrapped to (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Vec2 position() const { return {x, y}; }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

inline double position_distance(const Pose2& a, const Pose2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

template <typename T>
T clamp(T v, T lo, T hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

/// Nearest point on segment [a, b] to p.
inline Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squared_norm();
  if (len2 <= 0.0) return a;
  const double t = clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return a + t * ab;
}

}  // namespace navlab
