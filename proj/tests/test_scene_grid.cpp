#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "seaforge/scene_grid.hpp"
#include "seaforge/sweep.hpp"

using namespace seaforge;

TEST(Vessels, TenClassesWithStableCodes)
{
  ASSERT_EQ(kVesselNames.size(), 10u);
  EXPECT_EQ(code(VesselClass::LngTanker), 0);
  EXPECT_EQ(code(VesselClass::Barge), 9);
  for (std::size_t i = 0; i < kVesselNames.size(); ++i)
    EXPECT_EQ(code(*vessel_from_name(kVesselNames[i])), i);
  EXPECT_FALSE(vessel_from_name("Trawler"));
}

TEST(Headings, TwentyDistinctInCanonicalRange)
{
  std::vector<int> h(kHeadings.begin(), kHeadings.end());
  std::sort(h.begin(), h.end());
  EXPECT_EQ(std::adjacent_find(h.begin(), h.end()), h.end());
  EXPECT_EQ(h.size(), 20u);
  for (int d : h) {
    EXPECT_GT(d, -180);
    EXPECT_LE(d, 180);
  }
}

TEST(Headings, RejectsValuesOutsideTheGrid)
{
  EXPECT_THROW(Heading::from_degrees(10), ConfigError);
  EXPECT_THROW(Heading::from_degrees(-180), ConfigError);
  EXPECT_THROW(Heading::from_degrees(360), ConfigError);
  EXPECT_EQ(Heading::from_degrees(-135).degrees(), -135);
  EXPECT_THROW(heading_zone(7), ConfigError);
}

TEST(HeadingZone, Examples)
{
  EXPECT_EQ(heading_zone(0), Zone::Zone0);
  EXPECT_EQ(heading_zone(-90), Zone::Zone2);
  EXPECT_EQ(heading_zone(180), Zone::Zone3);
  EXPECT_EQ(heading_zone(45), Zone::Zone1);
  EXPECT_EQ(heading_zone(135), Zone::Zone3);
}

TEST(HeadingZone, SignSymmetricAndMonotone)
{
  for (int d : kHeadings) {
    if (d != 180)
      EXPECT_EQ(heading_zone(d), heading_zone(-d)) << d;
    for (int e : kHeadings)
      if (std::abs(d) < std::abs(e))
        EXPECT_LE(heading_zone(d), heading_zone(e)) << d << " vs " << e;
  }
}

TEST(HeadingZone, CardinalitiesAre3665)
{
  std::array<int, 4> n{};
  for (int d : kHeadings)
    ++n[code(heading_zone(d))];
  EXPECT_EQ(n, (std::array<int, 4>{3, 6, 6, 5}));
}

TEST(HeadingZone, ZoneOrder) { EXPECT_TRUE(Zone::Zone0 < Zone::Zone1 && Zone::Zone1 < Zone::Zone2 && Zone::Zone2 < Zone::Zone3); }

TEST(ZoneMap, CustomTableMustBeSymmetric)
{
  auto t = ZoneMap::standard().table();
  t[*heading_index(90)] = Zone::Zone3;
  EXPECT_THROW(ZoneMap::from_table(t), ConfigError);
  t[*heading_index(-90)] = Zone::Zone3;
  const auto m = ZoneMap::from_table(t);
  EXPECT_EQ(heading_zone(-90, m), Zone::Zone3);
}

TEST(SunAngles, TableLookup)
{
  const auto a = sun_angles(SunPosition::make(0, 2));
  EXPECT_DOUBLE_EQ(a.elevation_deg, 75.0);
  EXPECT_DOUBLE_EQ(a.azimuth_deg, 0.0);
  const auto b = sun_angles(SunPosition::make(3, 0));
  EXPECT_DOUBLE_EQ(b.elevation_deg, 2.0);
  EXPECT_DOUBLE_EQ(b.azimuth_deg, 55.0);
  const auto c = sun_angles(SunPosition::make(1, 4));
  EXPECT_DOUBLE_EQ(c.elevation_deg, 2.0);
  EXPECT_DOUBLE_EQ(c.azimuth_deg, 125.0);
}

TEST(SunAngles, TwentyPositionsWithinElevationBounds)
{
  int n = 0;
  for (int p = 0; p < 4; ++p)
    for (int s = 0; s < 5; ++s, ++n) {
      const auto a = sun_angles(SunPosition::make(p, s));
      EXPECT_GE(a.elevation_deg, 2.0);
      EXPECT_LE(a.elevation_deg, 75.0);
      EXPECT_EQ(SunPosition::from_index(SunPosition::make(p, s).index()), SunPosition::make(p, s));
    }
  EXPECT_EQ(n, 20);
  EXPECT_THROW(SunPosition::make(4, 0), ConfigError);
  EXPECT_THROW(SunPosition::make(0, 5), ConfigError);
}

TEST(SeaState, BandsContiguousAndIncreasing)
{
  EXPECT_THROW(SeaState::from_code(1), ConfigError);
  EXPECT_THROW(SeaState::from_code(7), ConfigError);
  EXPECT_DOUBLE_EQ(SeaState::from_code(2).band().low_m, 0.1);
  EXPECT_DOUBLE_EQ(SeaState::from_code(6).band().high_m, 6.0);
  for (int c = 2; c < 6; ++c) {
    const auto a = SeaState::from_code(c).band(), b = SeaState::from_code(c + 1).band();
    EXPECT_LT(a.low_m, a.high_m);
    EXPECT_DOUBLE_EQ(a.high_m, b.low_m);
  }
}

TEST(SkyCondition, FiveMembers)
{
  EXPECT_EQ(kSkyNames.size(), 5u);
  EXPECT_EQ(*sky_from_name("DenseFog"), SkyCondition::DenseFog);
}

TEST(SceneSeed, FrozenValues)
{
  // Reference values computed with an independent Python implementation of the mixing hash.
  EXPECT_EQ(scene_seed(SceneSpec{}, 0), 5197578548964807871ull);
  EXPECT_EQ(scene_seed(SceneSpec{}, 1), 15916886550466581944ull);
  SceneSpec s{VesselClass::OilTanker, Heading::from_degrees(-90), SunPosition::make(2, 3), SkyCondition::Overcast,
              SeaState::from_code(5), 6};
  EXPECT_EQ(pack_codes(s), 6740673ull);
  EXPECT_EQ(scene_seed(s, 0), 2427481882226094778ull);
  EXPECT_EQ(scene_seed(s, 0xDEADBEEF), 15111090114182100594ull);
}

TEST(SceneSeed, PureAndMasterSensitive)
{
  SceneSpec s;
  s.heading = Heading::from_degrees(120);
  EXPECT_EQ(scene_seed(s, 42), scene_seed(s, 42));
  EXPECT_NE(scene_seed(s, 0), scene_seed(s, 1));
}

TEST(SceneSeed, InjectiveOverFullGrid)
{
  const Sweep sweep(SweepConfig::defaults());
  std::vector<std::uint64_t> seeds;
  seeds.reserve(sweep.size());
  for (std::uint64_t i = 0; i < sweep.size(); ++i)
    seeds.push_back(scene_seed(sweep.at(i), 0x5EAF0E6E));
  std::sort(seeds.begin(), seeds.end());
  EXPECT_EQ(seeds.size(), 1'000'000u);
  EXPECT_EQ(std::adjacent_find(seeds.begin(), seeds.end()), seeds.end());
}
