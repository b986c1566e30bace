#pragma once

// Reference computations used only by the tests. Each one follows a different route
// from the library code it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "seaforge/image.hpp"
#include "seaforge/ocean.hpp"

namespace oracle {

/// H1/3 from zero-up-crossing analysis over randomly placed and oriented transects
/// (directions within +-20 degrees of the dominant direction), 0.25 m sample step.
inline double significant_wave_height(const seaforge::OceanField& f, std::uint32_t seed = 7, int transects = 64,
                                      int samples = 4096)
{
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> origin(-5000.0, 5000.0), spread(-20.0, 20.0);
  const double base = std::atan2(f.dominant_dir_x, f.dominant_dir_z);
  std::vector<double> heights;
  for (int t = 0; t < transects; ++t) {
    const double a = base + spread(gen) * std::numbers::pi / 180.0;
    const double dx = std::sin(a), dz = std::cos(a);
    const double ox = origin(gen), oz = origin(gen);
    std::vector<double> eta(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      const double x = ox + dx * 0.25 * i, z = oz + dz * 0.25 * i;
      double h = 0.0;
      for (const auto& c : f.components)
        h += c.amplitude * std::cos(2.0 * std::numbers::pi / c.wavelength * (c.dir_x * x + c.dir_z * z) - c.phase);
      eta[static_cast<std::size_t>(i)] = h;
    }
    int last_up = -1;
    double lo = 0.0, hi = 0.0;
    for (int i = 1; i < samples; ++i) {
      const bool up = eta[i - 1] < 0.0 && eta[i] >= 0.0;
      if (up) {
        if (last_up >= 0)
          heights.push_back(hi - lo);
        last_up = i;
        lo = hi = eta[i];
      } else if (last_up >= 0) {
        lo = std::min(lo, eta[i]);
        hi = std::max(hi, eta[i]);
      }
    }
  }
  if (heights.empty())
    return 0.0;
  std::sort(heights.rbegin(), heights.rend());
  const std::size_t n = std::max<std::size_t>(1, heights.size() / 3);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += heights[i];
  return s / static_cast<double>(n);
}

/// Composite Simpson integral of g over [a, b] with n (even) intervals.
template <class G>
double simpson(G g, double a, double b, int n = 2000)
{
  const double h = (b - a) / n;
  double s = g(a) + g(b);
  for (int i = 1; i < n; ++i)
    s += g(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// Direct (non-separable) 2D convolution of a single-channel image with a
/// full square kernel, zero outside the frame.
inline std::vector<double> convolve2d(const std::vector<double>& img, const std::vector<double>& kernel1d)
{
  const int n = seaforge::kImageSize;
  const int r = static_cast<int>(kernel1d.size() / 2);
  std::vector<double> out(img.size(), 0.0);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const double v = img[static_cast<std::size_t>(y) * n + x];
      if (v == 0.0)
        continue;
      for (int j = -r; j <= r; ++j)
        for (int i = -r; i <= r; ++i) {
          const int tx = x + i, ty = y + j;
          if (tx < 0 || ty < 0 || tx >= n || ty >= n)
            continue;
          out[static_cast<std::size_t>(ty) * n + tx] += v * kernel1d[i + r] * kernel1d[j + r];
        }
    }
  return out;
}

/// Sub-pixel displacement (dx, dy) that best aligns `moved` onto `ref` inside a patch, found by
/// exhaustive normalized cross-correlation over integer shifts then a parabolic peak fit.
inline std::pair<double, double> patch_shift(const std::vector<double>& ref, const std::vector<double>& moved, int x0,
                                             int y0, int size, int max_shift = 4)
{
  const int n = seaforge::kImageSize;
  auto ncc = [&](int sx, int sy) {
    double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
    int cnt = 0;
    for (int y = y0; y < y0 + size; ++y)
      for (int x = x0; x < x0 + size; ++x) {
        const int rx = x - sx, ry = y - sy;
        if (rx < 0 || ry < 0 || rx >= n || ry >= n)
          continue;
        const double a = moved[static_cast<std::size_t>(y) * n + x];
        const double b = ref[static_cast<std::size_t>(ry) * n + rx];
        sa += a, sb += b, saa += a * a, sbb += b * b, sab += a * b;
        ++cnt;
      }
    const double cov = sab - sa * sb / cnt;
    const double va = saa - sa * sa / cnt, vb = sbb - sb * sb / cnt;
    return cov / std::sqrt(va * vb);
  };
  int bx = 0, by = 0;
  double best = -2.0;
  for (int sy = -max_shift; sy <= max_shift; ++sy)
    for (int sx = -max_shift; sx <= max_shift; ++sx) {
      const double c = ncc(sx, sy);
      if (c > best)
        best = c, bx = sx, by = sy;
    }
  auto refine = [](double m, double c0, double p) {
    const double d = m - 2.0 * c0 + p;
    return d == 0.0 ? 0.0 : 0.5 * (m - p) / d;
  };
  return {bx + refine(ncc(bx - 1, by), best, ncc(bx + 1, by)), by + refine(ncc(bx, by - 1), best, ncc(bx, by + 1))};
}

struct Blob {
  double cx = 0.0, cy = 0.0, weight = 0.0;
  std::size_t pixels = 0;
};

/// 4-connected components of (value > threshold); weighted centroids.
inline std::vector<Blob> blobs(const std::vector<double>& img, double threshold)
{
  const int n = seaforge::kImageSize;
  std::vector<int> label(img.size(), -1);
  std::vector<Blob> out;
  std::vector<std::pair<int, int>> stack;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * n + x;
      if (img[i] <= threshold || label[i] >= 0)
        continue;
      Blob b;
      stack.push_back({x, y});
      label[i] = static_cast<int>(out.size());
      while (!stack.empty()) {
        auto [px, py] = stack.back();
        stack.pop_back();
        const double w = img[static_cast<std::size_t>(py) * n + px];
        b.cx += w * (px + 0.5), b.cy += w * (py + 0.5), b.weight += w, ++b.pixels;
        const int nb[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (auto& d : nb) {
          const int qx = px + d[0], qy = py + d[1];
          if (qx < 0 || qy < 0 || qx >= n || qy >= n)
            continue;
          const std::size_t q = static_cast<std::size_t>(qy) * n + qx;
          if (img[q] > threshold && label[q] < 0) {
            label[q] = label[i];
            stack.push_back({qx, qy});
          }
        }
      }
      b.cx /= b.weight, b.cy /= b.weight;
      out.push_back(b);
    }
  return out;
}

inline double iou(const seaforge::Mask& a, const seaforge::Mask& b)
{
  std::size_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const bool p = a.values()[i] != 0, q = b.values()[i] != 0;
    inter += p && q;
    uni += p || q;
  }
  return uni ? static_cast<double>(inter) / static_cast<double>(uni) : 1.0;
}

inline seaforge::Mask flip_horizontal(const seaforge::Mask& m)
{
  seaforge::Mask out;
  for (int y = 0; y < seaforge::kImageSize; ++y)
    for (int x = 0; x < seaforge::kImageSize; ++x)
      out.at(x, y) = m.at(seaforge::kImageSize - 1 - x, y);
  return out;
}

inline std::pair<double, double> centroid(const seaforge::Mask& m)
{
  double sx = 0, sy = 0, n = 0;
  for (int y = 0; y < seaforge::kImageSize; ++y)
    for (int x = 0; x < seaforge::kImageSize; ++x)
      if (m.at(x, y))
        sx += x + 0.5, sy += y + 0.5, n += 1;
  return {sx / n, sy / n};
}

/// Smooth grayscale texture (R = G = B) in [0.05, 0.95]: sum of random plane waves.
inline seaforge::LinearFrame textured_frame(std::uint32_t seed)
{
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  struct W { double kx, ky, ph; };
  std::vector<W> waves;
  for (int i = 0; i < 12; ++i) {
    const double a = u(gen) * 2 * std::numbers::pi, k = 0.25 + 0.35 * u(gen);
    waves.push_back({k * std::cos(a), k * std::sin(a), u(gen) * 2 * std::numbers::pi});
  }
  seaforge::LinearFrame f;
  for (int y = 0; y < seaforge::kImageSize; ++y)
    for (int x = 0; x < seaforge::kImageSize; ++x) {
      double s = 0.0;
      for (const auto& w : waves)
        s += std::cos(w.kx * x + w.ky * y + w.ph);
      const double v = 0.5 + 0.45 * s / 12.0 * 3.0;
      const double c = std::clamp(v, 0.05, 0.95);
      f.set(x, y, {c, c, c});
    }
  return f;
}

} // namespace oracle
