#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "seaforge/math.hpp"
#include "seaforge/rng.hpp"
#include "seaforge/scene_grid.hpp"

namespace seaforge {

enum class Material : std::uint8_t {
  HullDark,
  HullRed,
  Deck,
  Superstructure,
  Funnel,
  Tank,
  Hatch,
  ContainerRed,
  ContainerBlue,
  ContainerGreen,
  ContainerOrange,
  ContainerGray,
  Count
};

/// Linear albedo per material.
inline Vec3 albedo(Material m)
{
  static constexpr std::array<Vec3, static_cast<std::size_t>(Material::Count)> table{{
      {0.035, 0.035, 0.04}, // HullDark
      {0.30, 0.05, 0.04},   // HullRed
      {0.16, 0.18, 0.15},   // Deck
      {0.75, 0.75, 0.72},   // Superstructure
      {0.55, 0.30, 0.08},   // Funnel
      {0.80, 0.78, 0.70},   // Tank
      {0.22, 0.25, 0.30},   // Hatch
      {0.45, 0.06, 0.05},   // ContainerRed
      {0.05, 0.14, 0.40},   // ContainerBlue
      {0.06, 0.28, 0.10},   // ContainerGreen
      {0.65, 0.25, 0.03},   // ContainerOrange
      {0.40, 0.40, 0.40},   // ContainerGray
  }};
  return table[static_cast<std::size_t>(m)];
}

struct Triangle {
  Vec3 a, b, c;
  Material material = Material::HullDark;
};

/// Vessel-local mesh: +x toward the bow, +y up (waterline at 0), +z to starboard.
/// Every part is a closed, port/starboard symmetric solid.
struct HullGeometry {
  VesselClass archetype = VesselClass::LngTanker;
  std::vector<Triangle> triangles;
  double length_overall = 0.0;
  double beam = 0.0;
  double freeboard = 0.0;  // deck height above the waterline
  double max_height = 0.0; // highest point above the waterline
  double centroid_x = 0.0; // beam-on silhouette centroid above the waterline
  double centroid_y = 0.0;
};

namespace detail {

class MeshBuilder {
public:
  explicit MeshBuilder(std::vector<Triangle>& out) : out_(out) {}

  void tri(const Vec3& a, const Vec3& b, const Vec3& c, Material m) { out_.push_back({a, b, c, m}); }
  void quad(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, Material m)
  {
    tri(a, b, c, m);
    tri(a, c, d, m);
  }

  /// Axis-aligned box centered on the vessel centerline when z0 = -z1.
  void box(Vec3 lo, Vec3 hi, Material m)
  {
    const std::vector<std::pair<double, double>> poly{{lo.x, lo.z}, {hi.x, lo.z}, {hi.x, hi.z}, {lo.x, hi.z}};
    prism(poly, lo.y, hi.y, m, m);
  }

  /// Vertical prism over a convex plan polygon (x, z) between heights y0 and y1.
  void prism(const std::vector<std::pair<double, double>>& poly, double y0, double y1, Material side, Material cap)
  {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto [x0, z0] = poly[i];
      const auto [x1, z1] = poly[(i + 1) % n];
      quad({x0, y0, z0}, {x1, y0, z1}, {x1, y1, z1}, {x0, y1, z0}, side);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      tri({poly[0].first, y1, poly[0].second}, {poly[i].first, y1, poly[i].second},
          {poly[i + 1].first, y1, poly[i + 1].second}, cap);
      tri({poly[0].first, y0, poly[0].second}, {poly[i + 1].first, y0, poly[i + 1].second},
          {poly[i].first, y0, poly[i].second}, cap);
    }
  }

  /// Regular n-gon cylinder with a pyramidal cap (spherical tank stand-in).
  void dome(double cx, double radius, double y0, double y1, double apex, int sides, Material m)
  {
    std::vector<std::pair<double, double>> poly;
    for (int i = 0; i < sides; ++i) {
      const double a = 2.0 * std::numbers::pi * (i + 0.5) / sides;
      poly.emplace_back(cx + radius * std::cos(a), radius * std::sin(a));
    }
    prism(poly, y0, y1, m, m);
    const Vec3 top{cx, apex, 0.0};
    for (int i = 0; i < sides; ++i) {
      const auto [x0, z0] = poly[i];
      const auto [x1, z1] = poly[(i + 1) % sides];
      tri({x0, y1, z0}, {x1, y1, z1}, top, m);
    }
  }

private:
  std::vector<Triangle>& out_;
};

inline std::vector<std::pair<double, double>> ship_plan(double length, double beam, double half_z_scale = 1.0)
{
  const double h = 0.5 * length;
  const double b = 0.5 * beam * half_z_scale;
  const double bow_start = h - 0.18 * length;
  return {{-h, -0.84 * b},
          {-h + 0.04 * length, -b},
          {bow_start, -b},
          {bow_start + 0.55 * (h - bow_start), -0.72 * b},
          {h, 0.0},
          {bow_start + 0.55 * (h - bow_start), 0.72 * b},
          {bow_start, b},
          {-h + 0.04 * length, b},
          {-h, 0.84 * b}};
}

inline void ship_hull(MeshBuilder& mb, double length, double beam, double freeboard)
{
  const auto plan = ship_plan(length, beam);
  mb.prism(plan, -4.0, 0.6, Material::HullRed, Material::HullRed);
  mb.prism(plan, 0.6, freeboard, Material::HullDark, Material::Deck);
}

/// Accommodation block with bridge deck and funnel, positioned by its aft edge.
inline void accommodation(MeshBuilder& mb, double aft_x, double length, double width, double deck, double height)
{
  mb.box({aft_x, deck, -0.5 * width}, {aft_x + length, deck + height, 0.5 * width}, Material::Superstructure);
  mb.box({aft_x + 0.55 * length, deck + height, -0.5 * width - 2.5},
         {aft_x + length, deck + height + 3.0, 0.5 * width + 2.5}, Material::Superstructure);
  mb.box({aft_x - 7.0, deck, -3.0}, {aft_x - 1.0, deck + height + 6.0, 3.0}, Material::Funnel);
}

inline void container_stacks(MeshBuilder& mb, double from_x, double to_x, double skip_lo, double skip_hi, double beam,
                             double deck, double min_h, double max_h, std::uint64_t seed, double bow_x, double length)
{
  static constexpr std::array<Material, 5> kColors{Material::ContainerRed, Material::ContainerBlue,
                                                   Material::ContainerGreen, Material::ContainerOrange,
                                                   Material::ContainerGray};
  Rng rng(seed);
  constexpr double kBay = 13.0;
  for (double x = from_x; x + kBay <= to_x; x += kBay + 1.0) {
    if (x + kBay > skip_lo && x < skip_hi)
      continue;
    // Narrow the stacks where the bow tapers.
    const double taper_start = bow_x - 0.18 * length;
    double half = 0.5 * beam - 1.0;
    if (x + kBay > taper_start)
      half *= std::clamp(1.0 - 0.9 * (x + kBay - taper_start) / (bow_x - taper_start), 0.35, 1.0);
    const double h = std::round(rng.uniform(min_h, max_h) / 2.6) * 2.6;
    const Material m = kColors[rng.next_u64() % kColors.size()];
    mb.box({x, deck, -half}, {x + kBay, deck + h, half}, m);
  }
}

inline HullGeometry build_archetype(VesselClass v)
{
  HullGeometry g;
  g.archetype = v;
  MeshBuilder mb(g.triangles);

  switch (v) {
  case VesselClass::LngTanker: {
    g.length_overall = 290.0, g.beam = 46.0, g.freeboard = 17.0;
    ship_hull(mb, g.length_overall, g.beam, g.freeboard);
    for (int i = 0; i < 4; ++i)
      mb.dome(-75.0 + 49.0 * i, 18.5, g.freeboard, g.freeboard + 11.0, g.freeboard + 21.0, 12, Material::Tank);
    accommodation(mb, -135.0, 22.0, 36.0, g.freeboard, 22.0);
    break;
  }
  case VesselClass::OilTanker: {
    g.length_overall = 250.0, g.beam = 44.0, g.freeboard = 8.0;
    ship_hull(mb, g.length_overall, g.beam, g.freeboard);
    mb.box({-95.0, g.freeboard, -2.0}, {100.0, g.freeboard + 1.6, 2.0}, Material::Deck); // pipe rack
    mb.box({95.0, g.freeboard, -5.0}, {100.0, g.freeboard + 9.0, 5.0}, Material::Hatch); // manifold crane post
    accommodation(mb, -117.0, 20.0, 32.0, g.freeboard, 20.0);
    break;
  }
  case VesselClass::Container1Ballast:
  case VesselClass::Container1Full: {
    g.length_overall = 300.0, g.beam = 42.0;
    g.freeboard = v == VesselClass::Container1Ballast ? 14.0 : 7.0;
    ship_hull(mb, g.length_overall, g.beam, g.freeboard);
    accommodation(mb, -88.0, 16.0, 38.0, g.freeboard, 30.0);
    container_stacks(mb, -130.0, 128.0, -100.0, -70.0, g.beam, g.freeboard, 8.0, 16.0, 0xC0471, 150.0, 300.0);
    break;
  }
  case VesselClass::Container2Ballast:
  case VesselClass::Container2Full: {
    g.length_overall = 220.0, g.beam = 32.0;
    g.freeboard = v == VesselClass::Container2Ballast ? 12.0 : 6.0;
    ship_hull(mb, g.length_overall, g.beam, g.freeboard);
    accommodation(mb, -100.0, 18.0, 28.0, g.freeboard, 22.0);
    mb.box({98.0, g.freeboard, -12.0}, {108.0, g.freeboard + 3.0, 12.0}, Material::Deck); // forecastle
    container_stacks(mb, -80.0, 96.0, 1e9, 1e9, g.beam, g.freeboard, 5.0, 10.0, 0xC0472, 110.0, 220.0);
    break;
  }
  case VesselClass::Cargo1: {
    g.length_overall = 160.0, g.beam = 25.0, g.freeboard = 9.0;
    ship_hull(mb, g.length_overall, g.beam, g.freeboard);
    accommodation(mb, -70.0, 16.0, 22.0, g.freeboard, 15.0);
    for (int i = 0; i < 4; ++i) {
      const double x = -46.0 + 32.0 * i;
      mb.box({x, g.freeboard, -8.0}, {x + 20.0, g.freeboard + 2.2, 8.0}, Material::Hatch);
      mb.box({x + 21.5, g.freeboard, -1.0}, {x + 24.0, g.freeboard + 22.0, 1.0}, Material::Funnel); // crane posts
      mb.box({x + 20.5, g.freeboard + 16.0, -3.5}, {x + 25.0, g.freeboard + 19.5, 3.5}, Material::Funnel);
    }
    break;
  }
  case VesselClass::Cargo2: {
    g.length_overall = 190.0, g.beam = 32.0, g.freeboard = 10.0;
    ship_hull(mb, g.length_overall, g.beam, g.freeboard);
    accommodation(mb, -85.0, 16.0, 26.0, g.freeboard, 16.0);
    for (int i = 0; i < 7; ++i) {
      const double x = -60.0 + 21.0 * i;
      mb.box({x, g.freeboard, -11.0}, {x + 16.0, g.freeboard + 2.6, 11.0}, Material::Hatch);
    }
    mb.box({80.0, g.freeboard, -10.0}, {92.0, g.freeboard + 3.0, 10.0}, Material::Deck);
    break;
  }
  case VesselClass::Cargo3: {
    // Ro-ro / car carrier: box superstructure over nearly the full length.
    g.length_overall = 200.0, g.beam = 32.0, g.freeboard = 6.0;
    ship_hull(mb, g.length_overall, g.beam, g.freeboard);
    const auto plan = ship_plan(176.0, 31.0);
    std::vector<std::pair<double, double>> shifted;
    for (auto [x, z] : plan)
      shifted.emplace_back(std::min(x - 10.0, 70.0), z);
    mb.prism(shifted, g.freeboard, g.freeboard + 24.0, Material::Superstructure, Material::Superstructure);
    mb.box({58.0, g.freeboard + 24.0, -14.0}, {68.0, g.freeboard + 28.0, 14.0}, Material::Superstructure);
    break;
  }
  case VesselClass::Barge: {
    g.length_overall = 80.0, g.beam = 22.0, g.freeboard = 3.0;
    const double h = 0.5 * g.length_overall, b = 0.5 * g.beam;
    const std::vector<std::pair<double, double>> plan{{-h, -b}, {h - 7.0, -b}, {h, -0.8 * b},
                                                      {h, 0.8 * b},  {h - 7.0, b}, {-h, b}};
    mb.prism(plan, -2.5, 0.4, Material::HullRed, Material::HullRed);
    mb.prism(plan, 0.4, g.freeboard, Material::Hatch, Material::Deck);
    break;
  }
  }

  for (const auto& t : g.triangles)
    g.max_height = std::max({g.max_height, t.a.y, t.b.y, t.c.y});

  // Beam-on silhouette centroid from the (x, y) projection above the waterline.
  constexpr double kCell = 0.5;
  const double x0 = -0.5 * g.length_overall - 1.0;
  const int nx = static_cast<int>((g.length_overall + 2.0) / kCell) + 1;
  const int ny = static_cast<int>(g.max_height / kCell) + 1;
  std::vector<std::uint8_t> cover(static_cast<std::size_t>(nx) * ny, 0);
  for (const auto& t : g.triangles) {
    const double ax = t.a.x, ay = t.a.y, bx = t.b.x, by = t.b.y, cx = t.c.x, cy = t.c.y;
    const double area = (bx - ax) * (cy - ay) - (cx - ax) * (by - ay);
    if (std::abs(area) < 1e-9)
      continue;
    const int i0 = std::max(0, static_cast<int>((std::min({ax, bx, cx}) - x0) / kCell));
    const int i1 = std::min(nx - 1, static_cast<int>((std::max({ax, bx, cx}) - x0) / kCell) + 1);
    const int j0 = std::max(0, static_cast<int>(std::min({ay, by, cy}) / kCell));
    const int j1 = std::min(ny - 1, static_cast<int>(std::max({ay, by, cy}) / kCell) + 1);
    for (int j = j0; j <= j1; ++j) {
      const double py = (j + 0.5) * kCell;
      for (int i = i0; i <= i1; ++i) {
        const double px = x0 + (i + 0.5) * kCell;
        const double w0 = (bx - px) * (cy - py) - (cx - px) * (by - py);
        const double w1 = (cx - px) * (ay - py) - (ax - px) * (cy - py);
        const double w2 = (ax - px) * (by - py) - (bx - px) * (ay - py);
        if ((w0 >= 0 && w1 >= 0 && w2 >= 0) || (w0 <= 0 && w1 <= 0 && w2 <= 0))
          cover[static_cast<std::size_t>(j) * nx + i] = 1;
      }
    }
  }
  double sx = 0.0, sy = 0.0, n = 0.0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (cover[static_cast<std::size_t>(j) * nx + i]) {
        sx += x0 + (i + 0.5) * kCell;
        sy += (j + 0.5) * kCell;
        n += 1.0;
      }
  g.centroid_x = n > 0 ? sx / n : 0.0;
  g.centroid_y = n > 0 ? sy / n : 0.5 * g.freeboard;
  return g;
}

} // namespace detail

/// Procedural hull for a vessel class. Built once per class and shared read-only.
inline const HullGeometry& vessel_archetype(VesselClass v)
{
  static const std::array<HullGeometry, kVesselClassCount> table = [] {
    std::array<HullGeometry, kVesselClassCount> t;
    for (std::size_t i = 0; i < kVesselClassCount; ++i)
      t[i] = detail::build_archetype(static_cast<VesselClass>(i));
    return t;
  }();
  return table[code(v)];
}

} // namespace seaforge
