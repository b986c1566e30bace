#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "seaforge/degrade_params.hpp"
#include "seaforge/hash.hpp"
#include "seaforge/image.hpp"
#include "seaforge/observers.hpp"
#include "seaforge/render.hpp"
#include "seaforge/rng.hpp"
#include "seaforge/scene_grid.hpp"
#include "seaforge/sky.hpp"

namespace seaforge {

/// Normalized screen position, (0,0) top-left and (1,1) bottom-right.
using ScreenPos = std::pair<double, double>;

namespace detail {

inline float sample_bilinear(const LinearFrame& f, double x, double y, float LinearFrame::Px::*channel)
{
  // Continuous coordinates with pixel centers at +0.5; clamp to edge.
  x = std::clamp(x - 0.5, 0.0, static_cast<double>(kImageSize - 1));
  y = std::clamp(y - 0.5, 0.0, static_cast<double>(kImageSize - 1));
  const int x0 = static_cast<int>(x), y0 = static_cast<int>(y);
  const int x1 = std::min(x0 + 1, kImageSize - 1), y1 = std::min(y0 + 1, kImageSize - 1);
  const float tx = static_cast<float>(x - x0), ty = static_cast<float>(y - y0);
  const float a = f.at(x0, y0).*channel, b = f.at(x1, y0).*channel;
  const float c = f.at(x0, y1).*channel, d = f.at(x1, y1).*channel;
  return (a + (b - a) * tx) + ((c + (d - c) * tx) - (a + (b - a) * tx)) * ty;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Chromatic aberration

/// Lateral color: red is magnified and blue minified about the frame center so that
/// a feature at radius r moves by strength * r / r_corner pixels. Green is untouched.
inline LinearFrame chromatic_aberration(const LinearFrame& img, double strength_px)
{
  if (strength_px <= 0.0)
    return img;
  const double c = 0.5 * kImageSize;
  const double k = strength_px / (c * std::numbers::sqrt2);
  LinearFrame out = img;
  for (int y = 0; y < kImageSize; ++y) {
    const double dy = y + 0.5 - c;
    for (int x = 0; x < kImageSize; ++x) {
      const double dx = x + 0.5 - c;
      auto& p = out.at(x, y);
      p.r = detail::sample_bilinear(img, c + dx * (1.0 - k), c + dy * (1.0 - k), &LinearFrame::Px::r);
      p.b = detail::sample_bilinear(img, c + dx * (1.0 + k), c + dy * (1.0 + k), &LinearFrame::Px::b);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bloom

/// Normalized 1D Gaussian taps, radius ceil(3 sigma).
inline std::vector<float> gaussian_kernel(double sigma)
{
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<float> k(static_cast<std::size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i)
    sum += std::exp(-0.5 * i * i / (sigma * sigma));
  for (int i = -radius; i <= radius; ++i)
    k[static_cast<std::size_t>(i + radius)] = static_cast<float>(std::exp(-0.5 * i * i / (sigma * sigma)) / sum);
  return k;
}

/// Adds gain * blur(bright_pass) where bright_pass keeps the luminance excess over the
/// threshold (hue preserved). Pixels outside the frame contribute nothing.
inline LinearFrame bloom(const LinearFrame& img, double threshold, double gain, double sigma_px = 3.0)
{
  if (gain <= 0.0)
    return img;
  std::vector<LinearFrame::Px> bright(kPixelCount);
  int bx0 = kImageSize, by0 = kImageSize, bx1 = -1, by1 = -1;
  for (int y = 0; y < kImageSize; ++y)
    for (int x = 0; x < kImageSize; ++x) {
      const auto& p = img.at(x, y);
      const float l = luminance(p);
      if (l > threshold) {
        const float s = (l - static_cast<float>(threshold)) / l;
        bright[static_cast<std::size_t>(y) * kImageSize + x] = {p.r * s, p.g * s, p.b * s};
        bx0 = std::min(bx0, x), by0 = std::min(by0, y), bx1 = std::max(bx1, x), by1 = std::max(by1, y);
      }
    }
  if (bx1 < 0)
    return img;

  const auto kernel = gaussian_kernel(sigma_px);
  const int r = static_cast<int>(kernel.size() / 2);
  const int x0 = std::max(0, bx0 - r), x1 = std::min(kImageSize - 1, bx1 + r);
  const int y0 = std::max(0, by0 - r), y1 = std::min(kImageSize - 1, by1 + r);

  std::vector<LinearFrame::Px> tmp(kPixelCount);
  for (int y = by0; y <= by1; ++y)
    for (int x = x0; x <= x1; ++x) {
      LinearFrame::Px acc{};
      for (int i = -r; i <= r; ++i) {
        const int sx = x + i;
        if (sx < bx0 || sx > bx1)
          continue;
        const auto& s = bright[static_cast<std::size_t>(y) * kImageSize + sx];
        const float w = kernel[static_cast<std::size_t>(i + r)];
        acc.r += w * s.r, acc.g += w * s.g, acc.b += w * s.b;
      }
      tmp[static_cast<std::size_t>(y) * kImageSize + x] = acc;
    }

  LinearFrame out = img;
  const float g = static_cast<float>(gain);
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      LinearFrame::Px acc{};
      for (int i = -r; i <= r; ++i) {
        const int sy = y + i;
        if (sy < by0 || sy > by1)
          continue;
        const auto& s = tmp[static_cast<std::size_t>(sy) * kImageSize + x];
        const float w = kernel[static_cast<std::size_t>(i + r)];
        acc.r += w * s.r, acc.g += w * s.g, acc.b += w * s.b;
      }
      auto& o = out.at(x, y);
      o.r += g * acc.r, o.g += g * acc.g, o.b += g * acc.b;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Lens flare

inline bool flare_possible(const std::optional<ScreenPos>& sun, SkyCondition sky)
{
  if (!sun || sky == SkyCondition::Overcast || sky == SkyCondition::DenseFog)
    return false;
  return sun->first >= 0.0 && sun->first <= 1.0 && sun->second >= 0.0 && sun->second <= 1.0;
}

/// Additive ghost chain on the line through the frame center and the sun.
inline LinearFrame lens_flare(const LinearFrame& img, const std::optional<ScreenPos>& sun, SkyCondition sky,
                              double strength, const std::vector<FlareGhost>& ghosts = DegradeParams{}.flare_ghosts)
{
  if (strength <= 0.0 || !flare_possible(sun, sky))
    return img;
  static constexpr std::array<Vec3, 4> kTints{{{1.0, 0.8, 0.5}, {0.6, 0.9, 1.0}, {0.9, 0.6, 1.0}, {0.7, 1.0, 0.7}}};
  const double scale = strength * sun_visibility(sky);
  LinearFrame out = img;
  const double c = 0.5 * kImageSize;
  const double sx = sun->first * kImageSize, sy = sun->second * kImageSize;
  for (std::size_t g = 0; g < ghosts.size(); ++g) {
    const auto& gh = ghosts[g];
    const double gx = c + gh.t * (sx - c), gy = c + gh.t * (sy - c);
    const Vec3 tint = kTints[g % kTints.size()] * (gh.alpha * scale);
    const int x0 = std::max(0, static_cast<int>(gx - gh.radius_px - 1));
    const int x1 = std::min(kImageSize - 1, static_cast<int>(gx + gh.radius_px + 1));
    const int y0 = std::max(0, static_cast<int>(gy - gh.radius_px - 1));
    const int y1 = std::min(kImageSize - 1, static_cast<int>(gy + gh.radius_px + 1));
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) {
        const double d = std::hypot(x + 0.5 - gx, y + 0.5 - gy);
        const double w = 1.0 - smoothstep(0.7 * gh.radius_px, gh.radius_px, d);
        if (w <= 0.0)
          continue;
        auto& p = out.at(x, y);
        p.r += static_cast<float>(tint.x * w), p.g += static_cast<float>(tint.y * w), p.b += static_cast<float>(tint.z * w);
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lens grit

/// Static per-observer speck opacity map with mean opacity equal to the requested coverage.
class GritMask {
public:
  GritMask() : alpha_(kPixelCount, 0.0f) {}

  static GritMask generate(std::uint8_t observer_id, int level, double coverage, std::uint64_t salt = 0)
  {
    GritMask m;
    if (level <= 0 || coverage <= 0.0)
      return m;
    Rng rng(mix64(0x6A09E667F3BCC909ull ^ (static_cast<std::uint64_t>(observer_id) << 8) ^
                  static_cast<std::uint64_t>(level) ^ mix64(salt)));
    const double target = coverage * static_cast<double>(kPixelCount);
    double total = 0.0;
    while (total < target) {
      const double cx = rng.uniform(0.0, kImageSize), cy = rng.uniform(0.0, kImageSize);
      const double radius = rng.uniform(0.8, 3.5);
      const double peak = rng.uniform(0.4, 0.95);
      const int x0 = std::max(0, static_cast<int>(cx - radius)), x1 = std::min(kImageSize - 1, static_cast<int>(cx + radius));
      const int y0 = std::max(0, static_cast<int>(cy - radius)), y1 = std::min(kImageSize - 1, static_cast<int>(cy + radius));
      for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
          const double d = std::hypot(x + 0.5 - cx, y + 0.5 - cy);
          const double a = peak * (1.0 - smoothstep(0.5 * radius, radius, d));
          if (a <= 0.0)
            continue;
          float& v = m.alpha_[static_cast<std::size_t>(y) * kImageSize + x];
          const double before = v;
          v = static_cast<float>(1.0 - (1.0 - before) * (1.0 - a));
          total += v - before;
        }
    }
    // Trim the overshoot of the last speck so mean opacity hits the target.
    const float s = static_cast<float>(target / total);
    for (auto& v : m.alpha_)
      v *= s;
    return m;
  }

  float at(int x, int y) const { return alpha_[static_cast<std::size_t>(y) * kImageSize + x]; }
  double coverage() const
  {
    double s = 0.0;
    for (float v : alpha_)
      s += v;
    return s / static_cast<double>(kPixelCount);
  }
  bool empty() const { return std::all_of(alpha_.begin(), alpha_.end(), [](float v) { return v == 0.0f; }); }
  bool operator==(const GritMask&) const = default;

private:
  std::vector<float> alpha_;
};

inline constexpr Vec3 kGritColor{0.012, 0.010, 0.008};

inline LinearFrame apply_grit(const LinearFrame& img, const GritMask& mask)
{
  LinearFrame out = img;
  for (int y = 0; y < kImageSize; ++y)
    for (int x = 0; x < kImageSize; ++x) {
      const float a = mask.at(x, y);
      if (a <= 0.0f)
        continue;
      auto& p = out.at(x, y);
      p.r += (static_cast<float>(kGritColor.x) - p.r) * a;
      p.g += (static_cast<float>(kGritColor.y) - p.g) * a;
      p.b += (static_cast<float>(kGritColor.z) - p.b) * a;
    }
  return out;
}

/// Dirt / salt specks on the lens; the mask depends only on observer and level.
inline LinearFrame lens_grit(const LinearFrame& img, int level, std::uint8_t observer_id,
                             const DegradeParams& params = {})
{
  if (level <= 0)
    return img;
  return apply_grit(img, GritMask::generate(observer_id, level, params.grit_coverage[static_cast<std::size_t>(level)],
                                            params.grit_salt));
}

// ---------------------------------------------------------------------------
// Sensor grain

/// Additive zero-mean Gaussian noise with the given sigma on the 8-bit scale, rounded and clamped.
inline ImageBuffer sensor_grain_sigma(const ImageBuffer& img, double sigma, std::uint64_t seed)
{
  if (sigma <= 0.0)
    return img;
  ImageBuffer out = img;
  Rng rng(seed);
  for (auto& v : out.bytes()) {
    const double n = std::round(v + sigma * rng.normal());
    v = static_cast<std::uint8_t>(std::clamp(n, 0.0, 255.0));
  }
  return out;
}

inline ImageBuffer sensor_grain(const ImageBuffer& img, int level, std::uint64_t seed, const DegradeParams& params = {})
{
  if (level <= 0)
    return img;
  return sensor_grain_sigma(img, params.grain_sigma[static_cast<std::size_t>(level)], seed);
}

// ---------------------------------------------------------------------------
// Per-observer pipeline

/// Applies an observer's effects in the order CA -> flare -> bloom -> grit -> grain.
/// Grit masks for all observers are built once and shared read-only between threads.
class Degrader {
public:
  explicit Degrader(DegradeParams params = {}) : params_(std::move(params))
  {
    for (const auto& o : kObservers)
      if (o.grit_level > 0)
        grit_[o.id] = std::make_shared<const GritMask>(GritMask::generate(
            o.id, o.grit_level, params_.grit_coverage[o.grit_level], params_.grit_salt));
  }

  const DegradeParams& params() const { return params_; }

  /// Grit mask used for an observer; empty when the observer has no grit.
  const GritMask& grit_mask(std::uint8_t observer_id) const
  {
    static const GritMask kNone;
    const auto& m = grit_.at(observer(observer_id).id);
    return m ? *m : kNone;
  }

  /// Linear stages only (CA, flare, bloom, grit).
  LinearFrame apply_linear(const LinearFrame& pristine, const ObserverSpec& obs, SkyCondition sky,
                           const std::optional<ScreenPos>& sun) const
  {
    LinearFrame f = pristine;
    if (obs.chromatic_aberration)
      f = chromatic_aberration(f, params_.ca_strength_px);
    if (obs.lens_flare)
      f = lens_flare(f, sun, sky, params_.flare_strength, params_.flare_ghosts);
    if (obs.bloom)
      f = bloom(f, params_.bloom_threshold, params_.bloom_gain, params_.bloom_sigma_px);
    if (obs.grit_level > 0)
      f = apply_grit(f, grit_mask(obs.id));
    return f;
  }

  /// Full pipeline from a pristine linear frame to the final 8-bit image.
  ImageBuffer apply(const LinearFrame& pristine, const SceneSpec& spec, std::uint64_t master_seed,
                    const std::optional<ScreenPos>& sun) const
  {
    const ObserverSpec& obs = observer(spec.observer);
    ImageBuffer img = encode(obs.pristine() ? pristine : apply_linear(pristine, obs, spec.sky, sun));
    if (obs.grain_level > 0)
      img = sensor_grain(img, obs.grain_level, derive_seed(scene_seed(spec, master_seed), kGrainStream), params_);
    return img;
  }

private:
  DegradeParams params_;
  std::array<std::shared_ptr<const GritMask>, kObserverCount> grit_{};
};

/// Degrades a pristine 8-bit frame for the given observer. Observers without effects
/// return the input unchanged.
inline ImageBuffer degrade(const ImageBuffer& img, const ObserverSpec& obs, const SceneSpec& spec,
                           std::uint64_t master_seed = 0, const DegradeParams& params = {})
{
  if (obs.id >= kObserverCount || kObservers[obs.id].name != obs.name)
    throw ConfigError("unknown observer id " + std::to_string(obs.id));
  if (obs.pristine())
    return img;
  SceneSpec s = spec;
  s.observer = obs.id;
  const auto sun = sun_screen_position(scene_layout(s, master_seed, {}, false));
  const Degrader d(params);
  ImageBuffer out = obs.chromatic_aberration || obs.lens_flare || obs.bloom || obs.grit_level > 0
                        ? encode(d.apply_linear(decode(img), obs, s.sky, sun))
                        : img;
  if (obs.grain_level > 0)
    out = sensor_grain(out, obs.grain_level, derive_seed(scene_seed(s, master_seed), kGrainStream), params);
  return out;
}

} // namespace seaforge
