#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "seaforge/error.hpp"
#include "seaforge/math.hpp"

namespace seaforge {

enum class Mount : std::uint8_t { Lookout, Forward, Mast, Aft };

/// One virtual observer: camera geometry plus the optical effects applied to its feed.
/// Levels are 0 (off), 1 or 2 (heavy).
struct ObserverSpec {
  std::uint8_t id;
  std::string_view name;
  std::string_view display_name;
  double fov_deg;
  double focal_length_mm; // metadata; projection uses fov_deg
  Mount mount;
  bool chromatic_aberration;
  bool lens_flare;
  bool bloom;
  std::uint8_t grit_level;
  std::uint8_t grain_level;

  constexpr bool pristine() const
  {
    return !chromatic_aberration && !lens_flare && !bloom && grit_level == 0 && grain_level == 0;
  }
};

inline constexpr std::size_t kObserverCount = 10;

// clang-format off
inline constexpr std::array<ObserverSpec, kObserverCount> kObservers{{
  {0, "TopsideLookout", "Topside Lookout",  31.0, 54.7, Mount::Lookout, false, false, false, 0, 0},
  {1, "ForwardCamera1", "Forward Camera 1", 33.2, 58.7, Mount::Forward, true,  false, false, 0, 1},
  {2, "ForwardCamera2", "Forward Camera 2", 33.2, 58.7, Mount::Forward, true,  false, true,  1, 1},
  {3, "ForwardCamera3", "Forward Camera 3", 33.2, 58.7, Mount::Forward, true,  true,  true,  2, 2},
  {4, "MastCamera1",    "Mast Camera 1",    22.0, 58.7, Mount::Mast,    true,  false, false, 0, 1},
  {5, "MastCamera2",    "Mast Camera 2",    22.0, 58.7, Mount::Mast,    true,  true,  true,  1, 1},
  {6, "MastCamera3",    "Mast Camera 3",    22.0, 58.7, Mount::Mast,    true,  true,  true,  2, 2},
  {7, "AftCamera1",     "Aft Camera 1",     53.1, 35.0, Mount::Aft,     true,  false, false, 0, 1},
  {8, "AftCamera2",     "Aft Camera 2",     53.1, 35.0, Mount::Aft,     true,  true,  true,  1, 1},
  {9, "AftCamera3",     "Aft Camera 3",     53.1, 35.0, Mount::Aft,     true,  true,  true,  2, 2},
}};
// clang-format on

inline const ObserverSpec& observer(std::uint8_t id)
{
  if (id >= kObserverCount)
    throw ConfigError("unknown observer id " + std::to_string(id));
  return kObservers[id];
}

/// Accepts the identifier form ("MastCamera2") or the display form ("Mast Camera 2").
inline std::optional<std::uint8_t> observer_from_name(std::string_view name)
{
  for (const auto& o : kObservers)
    if (o.name == name || o.display_name == name)
      return o.id;
  return std::nullopt;
}

struct MountPose {
  Vec3 position;      // ownship frame, meters; +z is ownship bow, +y up
  double yaw_deg;     // compass bearing of the optical axis relative to the bow
};

inline constexpr MountPose mount_pose(Mount m)
{
  switch (m) {
  case Mount::Lookout: return {{-8.0, 21.0, 40.0}, 0.0};
  case Mount::Forward: return {{0.0, 15.0, 85.0}, 0.0};
  case Mount::Mast:    return {{0.0, 34.0, 20.0}, 0.0};
  case Mount::Aft:     return {{0.0, 12.0, -90.0}, 180.0};
  }
  return {{0.0, 15.0, 0.0}, 0.0};
}

} // namespace seaforge
