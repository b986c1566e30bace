#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "seaforge/camera.hpp"
#include "seaforge/image.hpp"

namespace seaforge {

/// Color + inverse-depth target for flat-shaded triangles.
struct RasterTarget {
  LinearFrame color;
  std::vector<float> inv_depth = std::vector<float>(kPixelCount, 0.0f); // 0 = empty
  Mask layer;                                                           // id of the nearest surface
};

/// Draws one flat triangle with a depth test. Pixel centers sit at (i + 0.5, j + 0.5);
/// edges use a top-left fill rule so shared edges are covered once.
inline void raster_triangle(RasterTarget& t, const ScreenPoint& a, const ScreenPoint& b, const ScreenPoint& c,
                            const Vec3& color, std::uint8_t layer)
{
  double ax = a.x, ay = a.y, bx = b.x, by = b.y, cx = c.x, cy = c.y;
  double ia = 1.0 / a.depth, ib = 1.0 / b.depth, ic = 1.0 / c.depth;
  double area = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  if (std::abs(area) < 1e-12)
    return;
  if (area < 0.0) {
    std::swap(bx, cx);
    std::swap(by, cy);
    std::swap(ib, ic);
    area = -area;
  }
  const int x0 = std::max(0, static_cast<int>(std::floor(std::min({ax, bx, cx}) - 0.5)));
  const int x1 = std::min(kImageSize - 1, static_cast<int>(std::ceil(std::max({ax, bx, cx}) - 0.5)));
  const int y0 = std::max(0, static_cast<int>(std::floor(std::min({ay, by, cy}) - 0.5)));
  const int y1 = std::min(kImageSize - 1, static_cast<int>(std::ceil(std::max({ay, by, cy}) - 0.5)));
  if (x0 > x1 || y0 > y1)
    return;

  // Edge function e(p) = (q1 - q0) x (p - q0), positive inside for the counter-clockwise order used here.
  auto top_left = [](double ex, double ey) { return (ey < 0.0) || (ey == 0.0 && ex > 0.0); };
  const bool tl0 = top_left(cx - bx, cy - by), tl1 = top_left(ax - cx, ay - cy), tl2 = top_left(bx - ax, by - ay);
  const double inv_area = 1.0 / area;
  const LinearFrame::Px px{static_cast<float>(color.x), static_cast<float>(color.y), static_cast<float>(color.z)};

  for (int y = y0; y <= y1; ++y) {
    const double py = y + 0.5;
    for (int x = x0; x <= x1; ++x) {
      const double pxf = x + 0.5;
      const double w0 = (cx - bx) * (py - by) - (cy - by) * (pxf - bx);
      const double w1 = (ax - cx) * (py - cy) - (ay - cy) * (pxf - cx);
      const double w2 = (bx - ax) * (py - ay) - (by - ay) * (pxf - ax);
      if (w0 < 0.0 || w1 < 0.0 || w2 < 0.0)
        continue;
      if ((w0 == 0.0 && !tl0) || (w1 == 0.0 && !tl1) || (w2 == 0.0 && !tl2))
        continue;
      const float inv = static_cast<float>((w0 * ia + w1 * ib + w2 * ic) * inv_area);
      float& d = t.inv_depth[static_cast<std::size_t>(y) * kImageSize + x];
      if (inv > d) {
        d = inv;
        t.color.at(x, y) = px;
        t.layer.at(x, y) = layer;
      }
    }
  }
}

} // namespace seaforge
