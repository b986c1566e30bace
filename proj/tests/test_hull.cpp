#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <set>

#include "oracles.hpp"
#include "seaforge/hull.hpp"
#include "seaforge/render.hpp"

using namespace seaforge;

namespace {

SceneSpec beam_on(VesselClass v, int heading = 90)
{
  SceneSpec s;
  s.vessel = v;
  s.heading = Heading::from_degrees(heading);
  s.sun = SunPosition::make(0, 2);
  s.sea = SeaState::from_code(2);
  s.observer = 0;
  return s;
}

RenderOptions fixed_range(double r)
{
  RenderOptions o;
  o.range_m = r;
  o.lateral_jitter = 0.0;
  return o;
}

// Count non-vessel pixels not reachable from the frame border through non-vessel pixels.
int enclosed_holes(const Mask& m)
{
  std::vector<std::uint8_t> seen(kPixelCount, 0);
  std::queue<std::pair<int, int>> q;
  auto push = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= kImageSize || y >= kImageSize)
      return;
    const std::size_t i = static_cast<std::size_t>(y) * kImageSize + x;
    if (seen[i] || m.at(x, y))
      return;
    seen[i] = 1;
    q.emplace(x, y);
  };
  for (int i = 0; i < kImageSize; ++i) {
    push(i, 0), push(i, kImageSize - 1), push(0, i), push(kImageSize - 1, i);
  }
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop();
    push(x + 1, y), push(x - 1, y), push(x, y + 1), push(x, y - 1);
  }
  int holes = 0;
  for (int y = 0; y < kImageSize; ++y)
    for (int x = 0; x < kImageSize; ++x)
      if (!m.at(x, y) && !seen[static_cast<std::size_t>(y) * kImageSize + x])
        ++holes;
  return holes;
}

} // namespace

TEST(Hull, BallastAndFullShareHullButNotFreeboard)
{
  const std::pair<VesselClass, VesselClass> pairs[] = {
      {VesselClass::Container1Ballast, VesselClass::Container1Full},
      {VesselClass::Container2Ballast, VesselClass::Container2Full}};
  for (auto [ballast, full] : pairs) {
    const auto& b = vessel_archetype(ballast);
    const auto& f = vessel_archetype(full);
    EXPECT_EQ(b.length_overall, f.length_overall);
    EXPECT_EQ(b.beam, f.beam);
    EXPECT_GT(b.freeboard, f.freeboard);
  }
}

TEST(Hull, BargeHasNothingAboveDeck)
{
  const auto& g = vessel_archetype(VesselClass::Barge);
  EXPECT_LE(g.max_height, g.freeboard + 0.5);
  for (std::size_t i = 0; i < kVesselClassCount; ++i)
    if (static_cast<VesselClass>(i) != VesselClass::Barge) {
      const auto& h = vessel_archetype(static_cast<VesselClass>(i));
      EXPECT_GT(h.max_height, h.freeboard + 5.0) << kVesselNames[i];
    }
}

TEST(Hull, BasicGeometryInvariants)
{
  for (std::size_t i = 0; i < kVesselClassCount; ++i) {
    const auto& g = vessel_archetype(static_cast<VesselClass>(i));
    EXPECT_EQ(code(g.archetype), i);
    EXPECT_GT(g.length_overall, 0.0);
    EXPECT_FALSE(g.triangles.empty());
    double lo = 1e9, hi = -1e9;
    for (const auto& t : g.triangles)
      for (const Vec3& p : {t.a, t.b, t.c}) {
        lo = std::min(lo, p.x), hi = std::max(hi, p.x);
        EXPECT_LE(std::abs(p.z), 0.5 * g.beam + 3.0);
      }
    EXPECT_NEAR(hi - lo, g.length_overall, 1e-9) << kVesselNames[i];
    EXPECT_GT(g.centroid_y, 0.0);
    EXPECT_LT(g.centroid_y, g.max_height);
  }
}

TEST(Hull, BuildIsDeterministic)
{
  const auto a = detail::build_archetype(VesselClass::Container1Full);
  const auto b = detail::build_archetype(VesselClass::Container1Full);
  ASSERT_EQ(a.triangles.size(), b.triangles.size());
  for (std::size_t i = 0; i < a.triangles.size(); ++i)
    EXPECT_EQ(a.triangles[i].a.y, b.triangles[i].a.y);
}

TEST(Hull, SilhouettesAreWatertightFromHorizontalViews)
{
  for (std::size_t i = 0; i < kVesselClassCount; ++i)
    for (int heading : {0, 45, 90, 135, 180}) {
      const auto r = render_linear(beam_on(static_cast<VesselClass>(i), heading), 0, fixed_range(700.0));
      EXPECT_GT(r.vessel_mask.count(), 50u);
      EXPECT_EQ(enclosed_holes(r.vessel_mask), 0) << kVesselNames[i] << " heading " << heading;
    }
}

TEST(Hull, TenDistinctBeamOnSilhouettes)
{
  std::vector<Mask> masks;
  for (std::size_t i = 0; i < kVesselClassCount; ++i)
    masks.push_back(render_linear(beam_on(static_cast<VesselClass>(i)), 0, fixed_range(1500.0)).vessel_mask);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      EXPECT_LT(oracle::iou(masks[i], masks[j]), 0.95) << kVesselNames[i] << " vs " << kVesselNames[j];
}
