#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "seaforge/ocean.hpp"

using namespace seaforge;

namespace {

OceanField single(double amplitude, double wavelength, double phase = 0.0)
{
  OceanField f;
  f.components[0] = {amplitude, wavelength, 1.0, 0.0, phase, 0.5};
  for (std::size_t i = 1; i < f.components.size(); ++i)
    f.components[i].amplitude = 0.0;
  f.dominant_dir_x = 1.0;
  f.dominant_dir_z = 0.0;
  return f;
}

} // namespace

TEST(Ocean, ZeroFieldIsFlat)
{
  OceanField f;
  for (auto& c : f.components)
    c.amplitude = 0.0;
  EXPECT_EQ(ocean_height(f, 12.5, -40.0), 0.0);
  EXPECT_EQ(significant_wave_height(f), 0.0);
}

TEST(Ocean, SingleComponentCrestEqualsAmplitude)
{
  const auto f = single(1.7, 60.0);
  EXPECT_NEAR(ocean_height(f, 0.0, 0.0), 1.7, 1e-12);
  EXPECT_NEAR(ocean_height(f, 30.0, 0.0), -1.7, 1e-12);
  EXPECT_NEAR(ocean_height(f, 0.0, 123.0), 1.7, 1e-12);
}

TEST(Ocean, MeanOverOneWavelengthIsZero)
{
  const auto f = single(2.0, 45.0, 0.3);
  const double mean = oracle::simpson([&](double x) { return ocean_height(f, x, 0.0); }, 0.0, 45.0) / 45.0;
  EXPECT_NEAR(mean, 0.0, 1e-6 * 2.0);
}

TEST(Ocean, SingleSinusoidHasHsOfTwiceAmplitude)
{
  const auto f = single(0.8, 40.0, 1.1);
  EXPECT_NEAR(significant_wave_height(f), 1.6, 1.6 * 0.01);
  EXPECT_NEAR(oracle::significant_wave_height(f), 1.6, 1.6 * 0.01);
}

TEST(Ocean, GerstnerPointMatchesHeightAndRestAtZeroSteepness)
{
  auto f = single(1.0, 50.0);
  f.components[0].steepness = 0.0;
  const Vec3 p = gerstner_point(f, 7.0, 3.0);
  EXPECT_NEAR(p.x, 7.0, 1e-12);
  EXPECT_NEAR(p.z, 3.0, 1e-12);
  EXPECT_NEAR(p.y, ocean_height(f, 7.0, 3.0), 1e-12);
}

TEST(Ocean, MirroredFieldReflectsHeights)
{
  const auto f = ocean_field(SeaState::from_code(4), 99);
  const auto m = mirrored(f, 3.5);
  for (double x : {-40.0, 0.0, 17.0})
    for (double z : {-5.0, 80.0})
      EXPECT_NEAR(ocean_height(m, 7.0 - x, z), ocean_height(f, x, z), 1e-9);
}

TEST(Ocean, CalibratedFieldsLandInBand)
{
  for (int code = 2; code <= 6; ++code) {
    const auto sea = SeaState::from_code(code);
    const auto band = sea.band();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto f = ocean_field(sea, seed * 7919 + 13);
      EXPECT_NEAR(significant_wave_height(f), band.midpoint(), 0.15 * band.midpoint());
      const double hs = oracle::significant_wave_height(f, static_cast<std::uint32_t>(seed));
      EXPECT_TRUE(band.contains(hs)) << "code " << code << " seed " << seed << " oracle Hs " << hs;
    }
  }
}

TEST(Ocean, SeaStateSixAroundFiveMetres)
{
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto f = ocean_field(SeaState::from_code(6), seed);
    EXPECT_NEAR(oracle::significant_wave_height(f, 3), 5.0, 0.75);
  }
}

TEST(Ocean, CrestsNeverFold)
{
  for (int code = 2; code <= 6; ++code)
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      for (const auto& c : ocean_field(SeaState::from_code(code), seed).components) {
        EXPECT_LE(c.crest_sharpness(), 0.9 + 1e-12);
        EXPECT_GE(c.steepness, 0.0);
      }
}

TEST(Ocean, PureFunctionOfSeed)
{
  const auto a = ocean_field(SeaState::from_code(3), 5);
  const auto b = ocean_field(SeaState::from_code(3), 5);
  const auto c = ocean_field(SeaState::from_code(3), 6);
  for (double x : {0.0, 11.0, -300.0}) {
    EXPECT_EQ(ocean_height(a, x, 2.0 * x), ocean_height(b, x, 2.0 * x));
  }
  EXPECT_NE(ocean_height(a, 11.0, 22.0), ocean_height(c, 11.0, 22.0));
}
