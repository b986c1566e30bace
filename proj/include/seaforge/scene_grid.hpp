#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "seaforge/error.hpp"
#include "seaforge/hash.hpp"
#include "seaforge/observers.hpp"

namespace seaforge {

// ---------------------------------------------------------------------------
// Vessel classes

enum class VesselClass : std::uint8_t {
  LngTanker,
  OilTanker,
  Container1Ballast,
  Container1Full,
  Container2Ballast,
  Container2Full,
  Cargo1,
  Cargo2,
  Cargo3,
  Barge,
};

inline constexpr std::size_t kVesselClassCount = 10;

inline constexpr std::array<std::string_view, kVesselClassCount> kVesselNames{
    "LngTanker",      "OilTanker", "Container1Ballast", "Container1Full", "Container2Ballast",
    "Container2Full", "Cargo1",    "Cargo2",            "Cargo3",         "Barge"};

constexpr std::uint8_t code(VesselClass v) { return static_cast<std::uint8_t>(v); }
constexpr std::string_view name(VesselClass v) { return kVesselNames[code(v)]; }

inline std::optional<VesselClass> vessel_from_name(std::string_view s)
{
  for (std::size_t i = 0; i < kVesselNames.size(); ++i)
    if (kVesselNames[i] == s)
      return static_cast<VesselClass>(i);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Headings (relative to the line of sight, 0 = bow-on)

inline constexpr std::size_t kHeadingCount = 20;

// Canonical order; the index is the heading's integer code.
inline constexpr std::array<int, kHeadingCount> kHeadings{
    0, 5, -5, 15, -15, 30, -30, 45, -45, 60, -60, 90, -90, 120, -120, 135, -135, 160, -160, 180};

constexpr std::optional<std::uint8_t> heading_index(int deg)
{
  for (std::size_t i = 0; i < kHeadings.size(); ++i)
    if (kHeadings[i] == deg)
      return static_cast<std::uint8_t>(i);
  return std::nullopt;
}

class Heading {
public:
  /// Throws ConfigError for values outside the 20-member heading set.
  static Heading from_degrees(int deg)
  {
    const auto idx = heading_index(deg);
    if (!idx)
      throw ConfigError("heading " + std::to_string(deg) + " is not one of the 20 grid headings");
    return Heading(*idx);
  }

  static constexpr Heading from_index(std::uint8_t idx) { return Heading(idx); }

  constexpr int degrees() const { return kHeadings[index_]; }
  constexpr std::uint8_t index() const { return index_; }

  constexpr bool operator==(const Heading&) const = default;

private:
  constexpr explicit Heading(std::uint8_t idx) : index_(idx) {}
  std::uint8_t index_;
};

// ---------------------------------------------------------------------------
// Collision zones

enum class Zone : std::uint8_t { Zone0, Zone1, Zone2, Zone3 };

inline constexpr std::array<std::string_view, 4> kZoneNames{"Zone0", "Zone1", "Zone2", "Zone3"};

constexpr std::uint8_t code(Zone z) { return static_cast<std::uint8_t>(z); }
constexpr std::string_view name(Zone z) { return kZoneNames[code(z)]; }
constexpr auto operator<=>(Zone a, Zone b) { return code(a) <=> code(b); }

inline std::optional<Zone> zone_from_name(std::string_view s)
{
  for (std::size_t i = 0; i < kZoneNames.size(); ++i)
    if (kZoneNames[i] == s)
      return static_cast<Zone>(i);
  return std::nullopt;
}

/// Heading-to-zone data table, indexed by heading code.
class ZoneMap {
public:
  /// Default grouping: danger decreases monotonically with |heading|.
  static constexpr ZoneMap standard()
  {
    ZoneMap m;
    for (std::size_t i = 0; i < kHeadingCount; ++i) {
      const int a = kHeadings[i] < 0 ? -kHeadings[i] : kHeadings[i];
      m.zones_[i] = a <= 5 ? Zone::Zone0 : a <= 45 ? Zone::Zone1 : a <= 120 ? Zone::Zone2 : Zone::Zone3;
    }
    return m;
  }

  /// Builds a custom table. Every heading must be assigned, and +h / -h must share a zone.
  static ZoneMap from_table(const std::array<Zone, kHeadingCount>& zones)
  {
    ZoneMap m;
    m.zones_ = zones;
    for (std::size_t i = 0; i < kHeadingCount; ++i) {
      const auto mirror = heading_index(-kHeadings[i] == -180 ? 180 : -kHeadings[i]);
      if (mirror && zones[*mirror] != zones[i])
        throw ConfigError("zone map is not sign-symmetric at heading " + std::to_string(kHeadings[i]));
    }
    return m;
  }

  constexpr Zone operator()(Heading h) const { return zones_[h.index()]; }
  constexpr const std::array<Zone, kHeadingCount>& table() const { return zones_; }
  constexpr bool operator==(const ZoneMap&) const = default;

private:
  std::array<Zone, kHeadingCount> zones_{};
};

inline Zone heading_zone(Heading h, const ZoneMap& map = ZoneMap::standard()) { return map(h); }

/// Validating overload for raw degrees.
inline Zone heading_zone(int deg, const ZoneMap& map = ZoneMap::standard())
{
  return map(Heading::from_degrees(deg));
}

// ---------------------------------------------------------------------------
// Sun positions

inline constexpr int kSunPathCount = 4;
inline constexpr int kSunStationCount = 5;

struct SunPosition {
  std::uint8_t path = 0;    // 0..3
  std::uint8_t station = 0; // 0..4, dawn -> dusk

  static SunPosition make(int path, int station)
  {
    if (path < 0 || path >= kSunPathCount || station < 0 || station >= kSunStationCount)
      throw ConfigError("sun position (" + std::to_string(path) + "," + std::to_string(station) +
                        ") out of range; path 0-3, station 0-4");
    return {static_cast<std::uint8_t>(path), static_cast<std::uint8_t>(station)};
  }

  constexpr std::uint8_t index() const { return static_cast<std::uint8_t>(path * kSunStationCount + station); }
  static constexpr SunPosition from_index(std::uint8_t idx)
  {
    return {static_cast<std::uint8_t>(idx / kSunStationCount), static_cast<std::uint8_t>(idx % kSunStationCount)};
  }
  constexpr bool operator==(const SunPosition&) const = default;
};

struct SunAngles {
  double elevation_deg;
  double azimuth_deg; // compass bearing relative to ownship bow
};

inline constexpr std::array<double, kSunStationCount> kStationElevationDeg{2.0, 30.0, 75.0, 30.0, 2.0};

constexpr SunAngles sun_angles(SunPosition s)
{
  return {kStationElevationDeg[s.station], 45.0 * s.path + 40.0 * (static_cast<int>(s.station) - 2)};
}

// ---------------------------------------------------------------------------
// Sky and sea

enum class SkyCondition : std::uint8_t { Clear, DynamicClouds, DenseDynamicClouds, Overcast, DenseFog };

inline constexpr std::array<std::string_view, 5> kSkyNames{"Clear", "DynamicClouds", "DenseDynamicClouds", "Overcast",
                                                           "DenseFog"};

constexpr std::uint8_t code(SkyCondition s) { return static_cast<std::uint8_t>(s); }
constexpr std::string_view name(SkyCondition s) { return kSkyNames[code(s)]; }

inline std::optional<SkyCondition> sky_from_name(std::string_view s)
{
  for (std::size_t i = 0; i < kSkyNames.size(); ++i)
    if (kSkyNames[i] == s)
      return static_cast<SkyCondition>(i);
  return std::nullopt;
}

struct WaveHeightBand {
  double low_m;
  double high_m;
  constexpr double midpoint() const { return 0.5 * (low_m + high_m); }
  constexpr bool contains(double hs) const { return hs >= low_m && hs <= high_m; }
};

/// WMO sea-state code 2..6 with its significant wave height band.
class SeaState {
public:
  static SeaState from_code(int c)
  {
    if (c < 2 || c > 6)
      throw ConfigError("sea state " + std::to_string(c) + " not in 2..6");
    return SeaState(static_cast<std::uint8_t>(c));
  }
  static constexpr SeaState from_index(std::uint8_t idx) { return SeaState(static_cast<std::uint8_t>(idx + 2)); }

  constexpr int code() const { return code_; }
  constexpr std::uint8_t index() const { return static_cast<std::uint8_t>(code_ - 2); }
  constexpr WaveHeightBand band() const { return kBands[index()]; }
  constexpr bool operator==(const SeaState&) const = default;

  static constexpr std::array<WaveHeightBand, 5> kBands{{{0.1, 0.5}, {0.5, 1.25}, {1.25, 2.5}, {2.5, 4.0}, {4.0, 6.0}}};

private:
  constexpr explicit SeaState(std::uint8_t c) : code_(c) {}
  std::uint8_t code_;
};

inline constexpr std::size_t kSeaStateCount = 5;
inline constexpr std::size_t kSkyCount = 5;
inline constexpr std::size_t kSunPositionCount = kSunPathCount * kSunStationCount;

// ---------------------------------------------------------------------------
// Scene specification

struct SceneSpec {
  VesselClass vessel = VesselClass::LngTanker;
  Heading heading = Heading::from_index(0);
  SunPosition sun{};
  SkyCondition sky = SkyCondition::Clear;
  SeaState sea = SeaState::from_index(0);
  std::uint8_t observer = 0;

  constexpr bool operator==(const SceneSpec&) const = default;
};

/// Packs the six field codes into 24 bits: vessel(4) heading(5) sun(5) sky(3) sea(3) observer(4).
constexpr std::uint64_t pack_codes(const SceneSpec& s)
{
  return static_cast<std::uint64_t>(code(s.vessel)) | static_cast<std::uint64_t>(s.heading.index()) << 4 |
         static_cast<std::uint64_t>(s.sun.index()) << 9 | static_cast<std::uint64_t>(code(s.sky)) << 14 |
         static_cast<std::uint64_t>(s.sea.index()) << 17 | static_cast<std::uint64_t>(s.observer) << 20;
}

/// seed = mix64(mix64(master + gamma) XOR packed_codes).
/// mix64 is a bijection, so for a fixed master seed distinct specs never collide.
constexpr std::uint64_t scene_seed(const SceneSpec& s, std::uint64_t master_seed)
{
  return mix64(mix64(master_seed + kGoldenGamma) ^ pack_codes(s));
}

} // namespace seaforge
