#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "seaforge/error.hpp"
#include "seaforge/scene_grid.hpp"

namespace seaforge {

/// One label row. Serialized as one JSON object per line with these exact field names.
struct ManifestRecord {
  std::string file; // relative to the dataset root
  VesselClass vessel = VesselClass::LngTanker;
  Heading heading = Heading::from_index(0);
  Zone zone = Zone::Zone0;
  SunPosition sun{};
  SkyCondition sky = SkyCondition::Clear;
  SeaState sea = SeaState::from_index(0);
  std::uint8_t observer = 0;
  std::uint64_t seed = 0;
  std::string generator_version;

  SceneSpec scene() const { return {vessel, heading, sun, sky, sea, observer}; }
  bool operator==(const ManifestRecord&) const = default;
};

inline std::string to_json_line(const ManifestRecord& r)
{
  nlohmann::ordered_json j;
  j["file"] = r.file;
  j["vessel"] = std::string(name(r.vessel));
  j["heading_deg"] = r.heading.degrees();
  j["zone"] = std::string(name(r.zone));
  j["sun_path"] = r.sun.path;
  j["sun_station"] = r.sun.station;
  j["sky"] = std::string(name(r.sky));
  j["sea_state"] = r.sea.code();
  j["observer"] = std::string(observer(r.observer).name);
  j["seed"] = std::to_string(r.seed);
  j["generator_version"] = r.generator_version;
  return j.dump();
}

/// Parses one manifest line; `line_no` is used for error messages.
inline ManifestRecord parse_manifest_line(const std::string& text, std::size_t line_no)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw ManifestError("malformed JSON", line_no);
  }
  if (!j.is_object())
    throw ManifestError("record is not a JSON object", line_no);

  auto str = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_string())
      throw ManifestError(std::string("missing or non-string field '") + key + "'", line_no);
    return j[key].get<std::string>();
  };
  auto integer = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw ManifestError(std::string("missing or non-integer field '") + key + "'", line_no);
    return j[key].get<int>();
  };

  ManifestRecord r;
  try {
    r.file = str("file");
    if (r.file.empty())
      throw ManifestError("empty file path", line_no);
    const auto vessel = vessel_from_name(str("vessel"));
    if (!vessel)
      throw ManifestError("unknown vessel class '" + str("vessel") + "'", line_no);
    r.vessel = *vessel;
    r.heading = Heading::from_degrees(integer("heading_deg"));
    const auto zone = zone_from_name(str("zone"));
    if (!zone)
      throw ManifestError("unknown zone '" + str("zone") + "'", line_no);
    r.zone = *zone;
    r.sun = SunPosition::make(integer("sun_path"), integer("sun_station"));
    const auto sky = sky_from_name(str("sky"));
    if (!sky)
      throw ManifestError("unknown sky '" + str("sky") + "'", line_no);
    r.sky = *sky;
    r.sea = SeaState::from_code(integer("sea_state"));
    const auto obs = observer_from_name(str("observer"));
    if (!obs)
      throw ManifestError("unknown observer '" + str("observer") + "'", line_no);
    r.observer = *obs;
    const auto seed = str("seed");
    std::size_t pos = 0;
    if (seed.empty() || seed[0] == '-')
      throw ManifestError("seed must be an unsigned decimal string", line_no);
    r.seed = std::stoull(seed, &pos, 10);
    if (pos != seed.size())
      throw ManifestError("seed must be an unsigned decimal string", line_no);
    r.generator_version = str("generator_version");
  } catch (const ConfigError& e) {
    throw ManifestError(e.what(), line_no);
  } catch (const std::logic_error&) { // stoull range / format
    throw ManifestError("seed is not a 64-bit unsigned value", line_no);
  }
  return r;
}

inline void write_manifest(const std::vector<ManifestRecord>& records, const std::filesystem::path& path)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot open manifest '" + path.string() + "' for writing");
  for (const auto& r : records)
    out << to_json_line(r) << '\n';
  out.flush();
  if (!out)
    throw IoError("failed writing manifest '" + path.string() + "'");
}

/// Reads a manifest written by write_manifest. Rejects malformed lines and duplicated file paths.
inline std::vector<ManifestRecord> read_manifest(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open manifest '" + path.string() + "'");
  std::vector<ManifestRecord> records;
  std::unordered_set<std::string> files;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto rec = parse_manifest_line(line, line_no);
    if (!files.insert(rec.file).second)
      throw ManifestError("duplicate file path '" + rec.file + "'", line_no);
    records.push_back(std::move(rec));
  }
  return records;
}

} // namespace seaforge
