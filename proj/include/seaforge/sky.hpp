#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "seaforge/hash.hpp"
#include "seaforge/math.hpp"
#include "seaforge/scene_grid.hpp"

namespace seaforge {

inline Vec3 sun_direction(const SunAngles& s)
{
  const double el = deg_to_rad(s.elevation_deg);
  const Vec3 h = azimuth_dir(s.azimuth_deg);
  return {h.x * std::cos(el), std::sin(el), h.z * std::cos(el)};
}

/// Overall daylight scale; dawn and dusk are dimmer than noon.
inline double daylight(double elevation_deg) { return 0.3 + 0.7 * smoothstep(0.0, 40.0, elevation_deg); }

/// Horizon reddening at low sun: 1 at the horizon, 0 from 10 degrees up.
inline double warm_shift(double elevation_deg) { return std::clamp(1.0 - elevation_deg / 10.0, 0.0, 1.0); }

inline Vec3 sun_color(double elevation_deg)
{
  const double w = warm_shift(elevation_deg);
  return {1.0, 0.95 - 0.35 * w, 0.88 - 0.55 * w};
}

/// Fraction of direct sunlight reaching the scene.
inline double sun_visibility(SkyCondition sky)
{
  switch (sky) {
  case SkyCondition::Clear: return 1.0;
  case SkyCondition::DynamicClouds: return 0.8;
  case SkyCondition::DenseDynamicClouds: return 0.45;
  case SkyCondition::Overcast:
  case SkyCondition::DenseFog: return 0.0;
  }
  return 0.0;
}

inline double cloud_coverage(SkyCondition sky)
{
  switch (sky) {
  case SkyCondition::DynamicClouds: return 0.35;
  case SkyCondition::DenseDynamicClouds: return 0.7;
  default: return 0.0;
  }
}

inline Vec3 overcast_color(double elevation_deg) { return Vec3{0.52, 0.54, 0.57} * (0.4 + 0.6 * daylight(elevation_deg)); }
inline Vec3 fog_color(double elevation_deg) { return Vec3{0.78, 0.79, 0.80} * (0.75 + 0.25 * daylight(elevation_deg)); }

inline constexpr double kSunDiscCos = 0.99994516; // cos(0.6 deg)
inline constexpr double kSunDiscRadiance = 25.0;

/// Smooth 2D value noise in [0, 1].
inline double value_noise(double x, double y, std::uint64_t seed)
{
  const double fx = std::floor(x), fy = std::floor(y);
  const auto ix = static_cast<std::int32_t>(fx), iy = static_cast<std::int32_t>(fy);
  const double tx = x - fx, ty = y - fy;
  const double sx = tx * tx * (3.0 - 2.0 * tx), sy = ty * ty * (3.0 - 2.0 * ty);
  auto v = [&](std::int32_t dx, std::int32_t dy) { return lattice_hash(ix + dx, iy + dy, seed) * (1.0 / 4294967295.0); };
  const double a = v(0, 0) + (v(1, 0) - v(0, 0)) * sx;
  const double b = v(0, 1) + (v(1, 1) - v(0, 1)) * sx;
  return a + (b - a) * sy;
}

inline double fbm(double x, double y, std::uint64_t seed, int octaves = 4)
{
  double sum = 0.0, amp = 0.5, norm = 0.0;
  for (int o = 0; o < octaves; ++o) {
    sum += amp * value_noise(x, y, seed + static_cast<std::uint64_t>(o) * kGoldenGamma);
    norm += amp;
    amp *= 0.5;
    x *= 2.03;
    y *= 2.03;
  }
  return sum / norm;
}

/// Clear-sky gradient for a world view direction, without clouds or sun disc.
inline Vec3 clear_sky(const SunAngles& sun, const Vec3& view)
{
  const Vec3 zenith{0.10, 0.28, 0.75};
  const Vec3 horizon_cool{0.55, 0.68, 0.85};
  const Vec3 horizon_warm{1.0, 0.55, 0.30};
  const double w = warm_shift(sun.elevation_deg);
  const Vec3 horizon = lerp(horizon_cool, horizon_warm, w);

  const double up = std::clamp(view.y, 0.0, 1.0);
  const double t = std::pow(1.0 - up, 4.0);
  Vec3 c = lerp(zenith, horizon, t);

  const double cos_sun = std::max(0.0, dot(view, sun_direction(sun)));
  c += sun_color(sun.elevation_deg) * (0.6 * std::pow(cos_sun, 8.0));
  return c * daylight(sun.elevation_deg);
}

/// Sky radiance (linear RGB) seen along a unit world direction.
inline Vec3 sky_radiance(const SunAngles& sun, SkyCondition sky, const Vec3& view, std::uint64_t cloud_seed = 0,
                         bool sun_disc = true)
{
  switch (sky) {
  case SkyCondition::Overcast: return overcast_color(sun.elevation_deg);
  case SkyCondition::DenseFog: return fog_color(sun.elevation_deg);
  default: break;
  }

  Vec3 c = clear_sky(sun, view);
  const double cos_sun = dot(view, sun_direction(sun));
  double sun_mask = sun_disc && cos_sun >= kSunDiscCos ? 1.0 : 0.0;

  const double coverage = cloud_coverage(sky);
  if (coverage > 0.0 && view.y > 0.0) {
    const double u = view.x / (view.y + 0.05) * 1.6;
    const double v = view.z / (view.y + 0.05) * 1.6;
    const double n = fbm(u, v, cloud_seed);
    double density = smoothstep(1.0 - coverage - 0.12, 1.0 - coverage + 0.18, n);
    density *= smoothstep(0.0, 0.06, view.y);
    const double shade = sky == SkyCondition::DenseDynamicClouds ? 0.62 : 0.86;
    const Vec3 cloud = Vec3{shade, shade, shade * 1.03} * daylight(sun.elevation_deg) +
                       sun_color(sun.elevation_deg) * (0.25 * std::pow(std::max(0.0, cos_sun), 4.0));
    c = lerp(c, cloud, density);
    sun_mask *= 1.0 - density;
  }
  if (sun_mask > 0.0)
    c += sun_color(sun.elevation_deg) * (kSunDiscRadiance * sun_visibility(sky) * sun_mask);
  return c;
}

/// Diffuse sky light on an upward-facing surface.
inline Vec3 sky_ambient(const SunAngles& sun, SkyCondition sky)
{
  switch (sky) {
  case SkyCondition::Overcast: return overcast_color(sun.elevation_deg) * 0.9;
  case SkyCondition::DenseFog: return fog_color(sun.elevation_deg) * 0.8;
  default: break;
  }
  const Vec3 base = clear_sky(sun, {0.0, 0.7071, 0.7071}) * 0.6;
  const double cov = cloud_coverage(sky);
  return lerp(base, Vec3{0.6, 0.6, 0.62} * daylight(sun.elevation_deg), cov);
}

} // namespace seaforge
