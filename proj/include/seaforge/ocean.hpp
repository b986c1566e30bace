#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "seaforge/hash.hpp"
#include "seaforge/math.hpp"
#include "seaforge/rng.hpp"
#include "seaforge/scene_grid.hpp"

namespace seaforge {

inline constexpr double kGravity = 9.81;
inline constexpr std::size_t kWaveComponents = 8;

struct GerstnerComponent {
  double amplitude = 0.0;  // m
  double wavelength = 1.0; // m
  double dir_x = 1.0;      // horizontal unit direction of travel
  double dir_z = 0.0;
  double phase = 0.0;      // rad
  double steepness = 0.0;  // Q in [0, 1)

  double wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }
  double angular_frequency() const { return std::sqrt(kGravity * wavenumber()); }
  /// Q * A * k; below 1 the trochoid does not fold over itself.
  double crest_sharpness() const { return steepness * amplitude * wavenumber(); }
};

struct OceanField {
  std::array<GerstnerComponent, kWaveComponents> components{};
  double dominant_dir_x = 0.0; // unit vector of the dominant travel direction
  double dominant_dir_z = 1.0;
  double target_hs = 0.0;      // calibration target, m
};

/// Vertical displacement: sum of A cos(k.(x,z) - phase - omega t).
inline double ocean_height(const OceanField& f, double x, double z, double t = 0.0)
{
  double h = 0.0;
  for (const auto& c : f.components) {
    const double k = c.wavenumber();
    h += c.amplitude * std::cos(k * (c.dir_x * x + c.dir_z * z) - c.phase - c.angular_frequency() * t);
  }
  return h;
}

/// Full Gerstner displacement of the rest position (x, 0, z) at time t.
inline Vec3 gerstner_point(const OceanField& f, double x, double z, double t = 0.0)
{
  Vec3 p{x, 0.0, z};
  for (const auto& c : f.components) {
    const double k = c.wavenumber();
    const double theta = k * (c.dir_x * x + c.dir_z * z) - c.phase - c.angular_frequency() * t;
    const double ct = std::cos(theta);
    const double horiz = -c.steepness * c.amplitude * std::sin(theta);
    p.x += horiz * c.dir_x;
    p.z += horiz * c.dir_z;
    p.y += c.amplitude * ct;
  }
  return p;
}

/// Reflects a field across the vertical plane x = plane_x.
inline OceanField mirrored(const OceanField& f, double plane_x)
{
  OceanField m = f;
  for (auto& c : m.components) {
    c.phase -= 2.0 * plane_x * c.wavenumber() * c.dir_x;
    c.dir_x = -c.dir_x;
  }
  m.dominant_dir_x = -m.dominant_dir_x;
  return m;
}

namespace detail {

/// Zero-up-crossing wave heights (crest minus trough per wave) of a sampled record.
inline void zero_crossing_heights(const std::vector<double>& eta, std::vector<double>& out)
{
  std::size_t start = eta.size();
  for (std::size_t i = 1; i < eta.size(); ++i) {
    if (eta[i - 1] < 0.0 && eta[i] >= 0.0) {
      if (start < eta.size()) {
        const auto [lo, hi] = std::minmax_element(eta.begin() + static_cast<std::ptrdiff_t>(start),
                                                  eta.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(*hi - *lo);
      }
      start = i;
    }
  }
}

inline double mean_of_top_third(std::vector<double>& heights)
{
  if (heights.empty())
    return 0.0;
  std::sort(heights.begin(), heights.end(), std::greater<>());
  const std::size_t n = std::max<std::size_t>(1, heights.size() / 3);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    sum += heights[i];
  return sum / static_cast<double>(n);
}

} // namespace detail

/// Significant wave height H1/3: mean crest-to-trough height of the highest third of
/// zero-up-crossing waves. Fixed sampling plan: 16 parallel transects of 8192 points
/// along the dominant direction, spaced across 1.37 km, sample step 1/16 of the shortest wavelength.
inline double significant_wave_height(const OceanField& f)
{
  double min_wavelength = INFINITY;
  bool any = false;
  for (const auto& c : f.components) {
    if (c.amplitude > 0.0) {
      min_wavelength = std::min(min_wavelength, c.wavelength);
      any = true;
    }
  }
  if (!any)
    return 0.0;

  constexpr int kTransects = 16;
  constexpr int kSamples = 8192;
  const double step = min_wavelength / 16.0;
  const double dx = f.dominant_dir_x, dz = f.dominant_dir_z;
  const double px = -dz, pz = dx; // across-wave direction

  std::vector<double> heights;
  std::vector<double> eta(kSamples);
  for (int t = 0; t < kTransects; ++t) {
    const double off = 91.3 * t;
    for (int i = 0; i < kSamples; ++i) {
      const double s = step * i;
      eta[i] = ocean_height(f, px * off + dx * s, pz * off + dz * s);
    }
    detail::zero_crossing_heights(eta, heights);
  }
  return detail::mean_of_top_third(heights);
}

/// Dominant wavelength for a significant wave height; deep-water seas sit near Hs / L ~ 1/15.
inline double peak_wavelength(double hs) { return 12.0 + 14.0 * hs; }

/// Deterministic 8-component field for a sea state, calibrated so that
/// significant_wave_height equals the band midpoint.
inline OceanField ocean_field(SeaState sea, std::uint64_t seed)
{
  Rng rng(seed);
  OceanField f;
  f.target_hs = sea.band().midpoint();

  const double dominant = rng.uniform(0.0, 2.0 * std::numbers::pi);
  f.dominant_dir_x = std::sin(dominant);
  f.dominant_dir_z = std::cos(dominant);

  const double peak = peak_wavelength(f.target_hs);
  for (auto& c : f.components) {
    const double spread = deg_to_rad(rng.uniform(-30.0, 30.0));
    c.dir_x = std::sin(dominant + spread);
    c.dir_z = std::cos(dominant + spread);
    c.wavelength = peak * std::pow(2.0, rng.uniform(-1.5, 0.5));
    // Longer components carry more energy.
    c.amplitude = (c.wavelength / peak) * rng.uniform(0.5, 1.0);
    c.phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    c.steepness = rng.uniform(0.3, 0.8);
  }

  const double raw = significant_wave_height(f);
  const double scale = raw > 0.0 ? f.target_hs / raw : 0.0;
  for (auto& c : f.components) {
    c.amplitude *= scale;
    // Keep Q*A*k under 0.9 so crests never fold.
    const double limit = 0.9 / (c.amplitude * c.wavenumber());
    if (c.steepness > limit)
      c.steepness = limit;
  }
  return f;
}

} // namespace seaforge
