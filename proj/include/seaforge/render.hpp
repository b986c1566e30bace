#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "seaforge/camera.hpp"
#include "seaforge/hash.hpp"
#include "seaforge/hull.hpp"
#include "seaforge/image.hpp"
#include "seaforge/ocean.hpp"
#include "seaforge/raster.hpp"
#include "seaforge/rng.hpp"
#include "seaforge/scene_grid.hpp"
#include "seaforge/sky.hpp"

namespace seaforge {

inline constexpr double kMinTargetRange = 400.0;
inline constexpr double kMaxTargetRange = 2000.0;
inline constexpr double kMaxLateralJitter = 0.05; // fraction of frame width
inline constexpr double kFogExtinction = 800.0;   // m, DenseFog transmittance exp(-d / 800)

// Sub-stream ids for derive_seed.
enum SeedStream : std::uint64_t { kOceanStream = 1, kPlacementStream = 2, kCloudStream = 3, kGrainStream = 4 };

struct RenderOptions {
  std::optional<double> range_m;
  std::optional<double> lateral_jitter; // fraction of frame width, positive = right
  /// Render the mirror image of the scene about the camera's vertical mid-plane:
  /// heading, lateral jitter, wave directions and sun azimuth are reflected.
  bool mirror = false;
  std::optional<Camera> camera; // replaces the observer camera
  bool draw_vessel = true;
};

/// Everything about a scene that is fixed before rasterization.
struct SceneLayout {
  Camera camera;
  SunAngles sun{};
  Vec3 sun_dir;
  OceanField ocean;
  std::uint64_t cloud_seed = 0;
  double range_m = 0.0;
  double lateral_jitter = 0.0;
  double heading_deg = 0.0;
  Vec3 vessel_origin;
  Vec3 vessel_bow;       // world unit vector of local +x
  Vec3 vessel_starboard; // world unit vector of local +z
  Vec3 aim_point;

  Vec3 to_world(const Vec3& local) const
  {
    return vessel_origin + vessel_bow * local.x + Vec3{0.0, local.y, 0.0} + vessel_starboard * local.z;
  }
};

inline constexpr double kMinTargetHeightPx = 3.0;

/// Upper end of the range band for a target seen from eye height `eye_y` with focal length
/// `focal_px`. The hull must span at least kMinTargetHeightPx rows, and a significant crest one
/// peak wavelength in front of it must not reach the sight line to its silhouette centroid.
inline double max_target_range(SeaState sea, const HullGeometry& hull, double eye_y, double focal_px)
{
  double r = hull.max_height * focal_px / kMinTargetHeightPx;
  const double hs = sea.band().midpoint();
  const double crest = 0.75 * hs;
  const double y = hull.centroid_y;
  if (crest > y)
    r = std::min(r, (eye_y - y) * peak_wavelength(hs) / (crest - y));
  return std::clamp(r, kMinTargetRange, kMaxTargetRange);
}

namespace detail {

/// In-frame centroid of the target silhouette, sampled on a 3 px lattice.
inline std::optional<std::pair<double, double>> silhouette_centroid(const SceneLayout& L, const HullGeometry& hull)
{
  constexpr int kStep = 3, kCells = kImageSize / kStep;
  std::vector<std::uint8_t> cover(static_cast<std::size_t>(kCells) * kCells, 0);
  for (const auto& t : hull.triangles) {
    const auto a = L.camera.project(L.to_world(t.a), 1.0), b = L.camera.project(L.to_world(t.b), 1.0),
               c = L.camera.project(L.to_world(t.c), 1.0);
    if (!a || !b || !c)
      continue;
    const double area = (b->x - a->x) * (c->y - a->y) - (b->y - a->y) * (c->x - a->x);
    if (std::abs(area) < 1e-12)
      continue;
    const double sgn = area > 0 ? 1.0 : -1.0;
    const int i0 = std::max(0, static_cast<int>(std::min({a->x, b->x, c->x}) / kStep));
    const int i1 = std::min(kCells - 1, static_cast<int>(std::max({a->x, b->x, c->x}) / kStep));
    const int j0 = std::max(0, static_cast<int>(std::min({a->y, b->y, c->y}) / kStep));
    const int j1 = std::min(kCells - 1, static_cast<int>(std::max({a->y, b->y, c->y}) / kStep));
    for (int j = j0; j <= j1; ++j) {
      const double py = (j + 0.5) * kStep;
      for (int i = i0; i <= i1; ++i) {
        const double px = (i + 0.5) * kStep;
        const double w0 = sgn * ((c->x - b->x) * (py - b->y) - (c->y - b->y) * (px - b->x));
        const double w1 = sgn * ((a->x - c->x) * (py - c->y) - (a->y - c->y) * (px - c->x));
        const double w2 = sgn * ((b->x - a->x) * (py - a->y) - (b->y - a->y) * (px - a->x));
        if (w0 >= 0 && w1 >= 0 && w2 >= 0)
          cover[static_cast<std::size_t>(j) * kCells + i] = 1;
      }
    }
  }
  double sx = 0.0, sy = 0.0, n = 0.0;
  for (int j = 0; j < kCells; ++j)
    for (int i = 0; i < kCells; ++i)
      if (cover[static_cast<std::size_t>(j) * kCells + i]) {
        sx += (i + 0.5) * kStep;
        sy += (j + 0.5) * kStep;
        n += 1.0;
      }
  if (n == 0.0)
    return std::nullopt;
  return std::pair{sx / n, sy / n};
}

} // namespace detail

/// `with_ocean = false` skips the (costly) wave-field calibration when only geometry is needed.
inline SceneLayout scene_layout(const SceneSpec& spec, std::uint64_t master_seed, const RenderOptions& opt = {},
                                bool with_ocean = true)
{
  const std::uint64_t seed = scene_seed(spec, master_seed);
  const ObserverSpec& obs = observer(spec.observer);
  const MountPose pose = mount_pose(obs.mount);
  const HullGeometry& hull = vessel_archetype(spec.vessel);

  SceneLayout L;
  Rng placement(derive_seed(seed, kPlacementStream));
  L.range_m = placement.uniform(kMinTargetRange, max_target_range(spec.sea, hull, pose.position.y, 0.5 * kImageSize / std::tan(0.5 * deg_to_rad(obs.fov_deg))));
  L.lateral_jitter = placement.uniform(-kMaxLateralJitter, kMaxLateralJitter);
  if (opt.range_m)
    L.range_m = *opt.range_m;
  if (opt.lateral_jitter)
    L.lateral_jitter = *opt.lateral_jitter;
  L.heading_deg = spec.heading.degrees();
  L.sun = sun_angles(spec.sun);
  if (with_ocean)
    L.ocean = ocean_field(spec.sea, derive_seed(seed, kOceanStream));
  L.cloud_seed = derive_seed(seed, kCloudStream);

  if (opt.mirror) {
    L.heading_deg = -L.heading_deg;
    L.lateral_jitter = -L.lateral_jitter;
    L.ocean = mirrored(L.ocean, pose.position.x);
    L.sun.azimuth_deg = wrap_degrees(2.0 * pose.yaw_deg - L.sun.azimuth_deg);
  }
  L.sun_dir = sun_direction(L.sun);

  // Target sits on the mount's optical bearing; heading is measured from the line of sight back to us.
  const Vec3 bearing = azimuth_dir(pose.yaw_deg);
  L.vessel_origin = Vec3{pose.position.x, 0.0, pose.position.z} + bearing * L.range_m;
  L.vessel_bow = rotate_y(-bearing, L.heading_deg);
  L.vessel_starboard = rotate_y(L.vessel_bow, 90.0);
  L.aim_point = L.to_world({hull.centroid_x, hull.centroid_y, 0.0});

  if (opt.camera) {
    L.camera = *opt.camera;
  } else {
    const Vec3 d = L.aim_point - pose.position;
    const double yaw = rad_to_deg(std::atan2(d.x, d.z));
    const double pitch = rad_to_deg(std::atan2(d.y, std::hypot(d.x, d.z)));
    const double offset = rad_to_deg(std::atan(2.0 * L.lateral_jitter * std::tan(0.5 * deg_to_rad(obs.fov_deg))));
    L.camera = Camera(pose.position, yaw - offset, pitch, obs.fov_deg);
    const auto p = L.camera.project(L.aim_point);
    if (!p || p->x < 0 || p->x >= kImageSize || p->y < 0 || p->y >= kImageSize)
      throw std::logic_error("internal fault: target outside the camera frustum");
    // Perspective shifts the on-screen silhouette away from the projected 3D centroid; re-aim at it.
    const double goal_x = 0.5 * kImageSize + L.lateral_jitter * kImageSize, goal_y = 0.5 * kImageSize;
    double yaw_c = yaw - offset, pitch_c = pitch;
    for (int pass = 0; pass < 2; ++pass) {
      const auto c = detail::silhouette_centroid(L, hull);
      if (!c)
        break;
      const double f = L.camera.focal_px();
      yaw_c += rad_to_deg(std::atan((c->first - goal_x) / f));
      pitch_c += rad_to_deg(std::atan((goal_y - c->second) / f));
      L.camera = Camera(pose.position, yaw_c, pitch_c, obs.fov_deg);
    }
  }
  return L;
}

/// Sun position in normalized screen coordinates ([0,1]^2 when on-screen), if in front of the camera.
inline std::optional<std::pair<double, double>> sun_screen_position(const SceneLayout& L)
{
  const auto p = L.camera.project(L.camera.position() + L.sun_dir * 1.0e4);
  if (!p)
    return std::nullopt;
  return std::pair{p->x / kImageSize, p->y / kImageSize};
}

struct RenderResult {
  LinearFrame frame;
  Mask vessel_mask;            // 1 where the nearest surface is the target vessel
  std::vector<float> distance; // m along the view ray, 0 for sky
  SceneLayout layout;
};

namespace detail {

enum : std::uint8_t { kLayerSky = 0, kLayerOcean = 1, kLayerVessel = 2 };

inline constexpr double kOceanFarDistance = 20000.0;
inline constexpr int kOceanGridStep = 3; // px between projected-grid vertices
inline constexpr int kOceanGridPad = 8;  // off-screen cells absorbing horizontal displacement

inline Vec3 ocean_shade(const SceneLayout& L, SkyCondition sky, const Vec3& p, const Vec3& normal)
{
  const Vec3 view = normalize(L.camera.position() - p);
  Vec3 n = normal.y < 0.0 ? -normal : normal;
  double ndv = dot(n, view);
  if (ndv < 0.0) {
    // Facet turned away from the camera; tilt it back toward the view direction.
    n = normalize(n + view * (0.05 - ndv));
    ndv = dot(n, view);
  }
  Vec3 r = reflect(-view, n);
  if (r.y < 0.002)
    r = normalize(Vec3{r.x, 0.002, r.z});
  const double fresnel = 0.02 + 0.98 * std::pow(1.0 - std::clamp(ndv, 0.0, 1.0), 5.0);
  const Vec3 reflected = sky_radiance(L.sun, sky, r, L.cloud_seed, false);

  const double vis = sun_visibility(sky);
  const Vec3 sunlight = sun_color(L.sun.elevation_deg) * (daylight(L.sun.elevation_deg) * vis);
  const Vec3 body{0.006, 0.03, 0.045};
  const Vec3 diffuse = body * (sky_ambient(L.sun, sky) + sunlight * std::max(0.0, dot(n, L.sun_dir)));
  const double spec = std::pow(std::max(0.0, dot(r, L.sun_dir)), 900.0);
  return reflected * fresnel + diffuse * (1.0 - fresnel) + sunlight * (60.0 * spec * (0.1 + fresnel));
}

inline void draw_ocean(RasterTarget& target, const SceneLayout& L, SkyCondition sky)
{
  const Camera& cam = L.camera;
  const int lo = -kOceanGridPad, hi = kImageSize / kOceanGridStep + kOceanGridPad;
  const int n = hi - lo + 1;
  std::vector<Vec3> world(static_cast<std::size_t>(n) * n);
  std::vector<std::optional<ScreenPoint>> screen(world.size());

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double px = (lo + i) * kOceanGridStep, py = (lo + j) * kOceanGridStep;
      const Vec3 ray = cam.ray(px, py);
      Vec3 horiz{ray.x, 0.0, ray.z};
      const double hl = length(horiz);
      horiz = hl > 1e-9 ? horiz * (1.0 / hl) : cam.forward();
      double dist = kOceanFarDistance;
      if (ray.y < 0.0) {
        const double t = cam.position().y / -ray.y;
        dist = std::min(kOceanFarDistance, t * hl);
      }
      const Vec3 rest = Vec3{cam.position().x, 0.0, cam.position().z} + horiz * dist;
      Vec3 p = gerstner_point(L.ocean, rest.x, rest.z);
      // Distant displacement fades out to limit facet aliasing near the horizon.
      const double fade = 1.0 - 0.85 * smoothstep(3000.0, 12000.0, dist);
      p = rest + (p - rest) * fade;
      world[static_cast<std::size_t>(j) * n + i] = p;
      screen[static_cast<std::size_t>(j) * n + i] = cam.project(p);
    }
  }

  const int mid_cell = (n - 1) / 2;
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(j) * n + i; };
  auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (!screen[a] || !screen[b] || !screen[c])
      return;
    const Vec3 normal = cross(world[c] - world[a], world[b] - world[a]);
    if (length(normal) < 1e-12)
      return;
    const Vec3 centroid = (world[a] + world[b] + world[c]) * (1.0 / 3.0);
    raster_triangle(target, *screen[a], *screen[b], *screen[c], ocean_shade(L, sky, centroid, normalize(normal)),
                    kLayerOcean);
  };
  for (int j = 0; j + 1 < n; ++j) {
    for (int i = 0; i + 1 < n; ++i) {
      const auto a = idx(i, j), b = idx(i + 1, j), c = idx(i, j + 1), d = idx(i + 1, j + 1);
      // Diagonals mirror about the vertical center line.
      if (i < mid_cell) {
        emit(a, b, d);
        emit(a, d, c);
      } else {
        emit(a, b, c);
        emit(b, d, c);
      }
    }
  }
}

inline void draw_vessel(RasterTarget& target, const SceneLayout& L, SkyCondition sky, const HullGeometry& hull)
{
  const double vis = sun_visibility(sky);
  const Vec3 sunlight = sun_color(L.sun.elevation_deg) * (1.1 * daylight(L.sun.elevation_deg) * vis);
  const Vec3 ambient = sky_ambient(L.sun, sky);
  for (const auto& t : hull.triangles) {
    const Vec3 a = L.to_world(t.a), b = L.to_world(t.b), c = L.to_world(t.c);
    const auto sa = L.camera.project(a, 1.0), sb = L.camera.project(b, 1.0), sc = L.camera.project(c, 1.0);
    if (!sa || !sb || !sc)
      continue;
    Vec3 n = normalize(cross(b - a, c - a));
    if (dot(n, L.camera.position() - a) < 0.0)
      n = -n;
    const Vec3 light = ambient * (0.55 + 0.45 * n.y) + sunlight * std::max(0.0, dot(n, L.sun_dir));
    raster_triangle(target, *sa, *sb, *sc, albedo(t.material) * light, kLayerVessel);
  }
}

} // namespace detail

/// Full-precision render: linear frame, vessel mask and per-pixel distance.
inline RenderResult render_linear(const SceneSpec& spec, std::uint64_t master_seed = 0, const RenderOptions& opt = {})
{
  RenderResult out;
  out.layout = scene_layout(spec, master_seed, opt);
  const SceneLayout& L = out.layout;
  const Camera& cam = L.camera;

  RasterTarget target;
  detail::draw_ocean(target, L, spec.sky);
  if (opt.draw_vessel)
    detail::draw_vessel(target, L, spec.sky, vessel_archetype(spec.vessel));

  const double haze_distance = spec.sky == SkyCondition::Overcast ? 9000.0 : 22000.0;
  out.distance.assign(kPixelCount, 0.0f);
  for (int y = 0; y < kImageSize; ++y) {
    for (int x = 0; x < kImageSize; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * kImageSize + x;
      const Vec3 ray_u = cam.ray_unnormalized(x + 0.5, y + 0.5);
      const Vec3 ray = normalize(ray_u);
      const std::uint8_t layer = target.layer.at(x, y);
      if (layer == detail::kLayerSky) {
        out.frame.set(x, y, sky_radiance(L.sun, spec.sky, ray, L.cloud_seed));
        continue;
      }
      const double dist = length(ray_u) / target.inv_depth[i];
      out.distance[i] = static_cast<float>(dist);
      Vec3 c = target.color.get(x, y);
      if (spec.sky == SkyCondition::DenseFog) {
        c = lerp(fog_color(L.sun.elevation_deg), c, std::exp(-dist / kFogExtinction));
      } else {
        const Vec3 horizon = sky_radiance(L.sun, spec.sky, normalize(Vec3{ray.x, 0.0, ray.z}), L.cloud_seed, false);
        c = lerp(horizon, c, std::exp(-dist / haze_distance));
      }
      out.frame.set(x, y, c);
      if (layer == detail::kLayerVessel)
        out.vessel_mask.at(x, y) = 1;
    }
  }
  return out;
}

/// Pristine 8-bit frame for a scene.
inline ImageBuffer render_scene(const SceneSpec& spec, std::uint64_t master_seed = 0, const RenderOptions& opt = {})
{
  return encode(render_linear(spec, master_seed, opt).frame);
}

} // namespace seaforge
