#pragma once

#include <cmath>
#include <optional>

#include "seaforge/image.hpp"
#include "seaforge/math.hpp"

namespace seaforge {

struct ScreenPoint {
  double x;     // pixels, 0 at the left edge
  double y;     // pixels, 0 at the top edge
  double depth; // distance along the optical axis, m
};

/// Pinhole camera with a square frame; horizontal FOV equals vertical FOV.
class Camera {
public:
  Camera() : Camera({0.0, 10.0, 0.0}, 0.0, 0.0, 30.0) {}

  Camera(const Vec3& position, double yaw_deg, double pitch_deg, double fov_deg)
      : position_(position), yaw_deg_(yaw_deg), pitch_deg_(pitch_deg), fov_deg_(fov_deg)
  {
    const double yaw = deg_to_rad(yaw_deg), pitch = deg_to_rad(pitch_deg);
    forward_ = {std::cos(pitch) * std::sin(yaw), std::sin(pitch), std::cos(pitch) * std::cos(yaw)};
    right_ = {std::cos(yaw), 0.0, -std::sin(yaw)};
    up_ = cross(forward_, right_);
    tan_half_ = std::tan(0.5 * deg_to_rad(fov_deg));
    focal_px_ = 0.5 * kImageSize / tan_half_;
  }

  const Vec3& position() const { return position_; }
  const Vec3& forward() const { return forward_; }
  const Vec3& right() const { return right_; }
  const Vec3& up() const { return up_; }
  double yaw_deg() const { return yaw_deg_; }
  double pitch_deg() const { return pitch_deg_; }
  double fov_deg() const { return fov_deg_; }
  double focal_px() const { return focal_px_; }

  std::optional<ScreenPoint> project(const Vec3& world, double near = 0.1) const
  {
    const Vec3 d = world - position_;
    const double zc = dot(d, forward_);
    if (zc <= near)
      return std::nullopt;
    const double half = 0.5 * kImageSize;
    return ScreenPoint{half + dot(d, right_) / zc * focal_px_, half - dot(d, up_) / zc * focal_px_, zc};
  }

  /// Unnormalized ray through a continuous pixel position; its forward component is 1.
  Vec3 ray_unnormalized(double px, double py) const
  {
    const double half = 0.5 * kImageSize;
    return forward_ + right_ * ((px - half) / focal_px_) + up_ * ((half - py) / focal_px_);
  }

  Vec3 ray(double px, double py) const { return normalize(ray_unnormalized(px, py)); }

private:
  Vec3 position_;
  double yaw_deg_, pitch_deg_, fov_deg_;
  Vec3 forward_, right_, up_;
  double tan_half_, focal_px_;
};

} // namespace seaforge
