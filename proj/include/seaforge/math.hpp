#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace seaforge {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator*(const Vec3& o) const { return {x * o.x, y * o.y, z * o.z}; }
  constexpr Vec3& operator+=(const Vec3& o)
  {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b)
{
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double length(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalize(const Vec3& v)
{
  const double len = length(v);
  return len > 0.0 ? v * (1.0 / len) : v;
}

constexpr Vec3 lerp(const Vec3& a, const Vec3& b, double t) { return a + (b - a) * t; }

constexpr Vec3 reflect(const Vec3& incident, const Vec3& normal)
{
  return incident - normal * (2.0 * dot(incident, normal));
}

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Wraps an angle in degrees to (-180, 180].
inline double wrap_degrees(double deg)
{
  double w = std::fmod(deg, 360.0);
  if (w <= -180.0)
    w += 360.0;
  else if (w > 180.0)
    w -= 360.0;
  return w;
}

/// Horizontal unit vector for a compass azimuth (0 = +z, clockwise toward +x).
inline Vec3 azimuth_dir(double azimuth_deg)
{
  const double a = deg_to_rad(azimuth_deg);
  return {std::sin(a), 0.0, std::cos(a)};
}

/// Rotates about +y by a compass angle: positive turns +z toward +x.
inline Vec3 rotate_y(const Vec3& v, double angle_deg)
{
  const double a = deg_to_rad(angle_deg);
  const double c = std::cos(a);
  const double s = std::sin(a);
  return {c * v.x + s * v.z, v.y, -s * v.x + c * v.z};
}

constexpr double smoothstep(double e0, double e1, double x)
{
  const double t = std::clamp((x - e0) / (e1 - e0), 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

} // namespace seaforge
