#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace seaforge {

struct FlareGhost {
  double t;      // position along center -> sun; 0 = frame center, 1 = sun
  double alpha;  // peak additive intensity (linear)
  double radius_px;

  bool operator==(const FlareGhost&) const = default;
};

/// Numeric strengths behind the per-observer effect flags. Index 0 of the level arrays is "off".
struct DegradeParams {
  double ca_strength_px = 1.5;
  double bloom_threshold = 0.8;
  double bloom_gain = 0.5;
  double bloom_sigma_px = 3.0;
  double flare_strength = 1.0;
  std::vector<FlareGhost> flare_ghosts{{-0.4, 0.30, 14.0}, {0.3, 0.22, 9.0}, {0.7, 0.15, 12.0}, {1.3, 0.10, 20.0}};
  std::array<double, 3> grit_coverage{0.0, 0.01, 0.03};
  std::array<double, 3> grain_sigma{0.0, 4.0, 10.0};
  std::uint64_t grit_salt = 0; // selects an alternative family of grit masks

  bool operator==(const DegradeParams&) const = default;
};

} // namespace seaforge
