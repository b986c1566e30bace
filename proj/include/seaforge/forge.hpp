#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "seaforge/error.hpp"
#include "seaforge/manifest.hpp"
#include "seaforge/optics.hpp"
#include "seaforge/png_io.hpp"
#include "seaforge/render.hpp"
#include "seaforge/sweep.hpp"
#include "seaforge/version.hpp"

namespace seaforge {

namespace fs = std::filesystem;

inline constexpr const char* kManifestName = "manifest.jsonl";
inline constexpr const char* kDatasetInfoName = "dataset.json";
inline constexpr const char* kPartialMarkerName = "INCOMPLETE";
inline constexpr const char* kImageDirName = "images";

/// dimension -> value -> count
using Histograms = std::map<std::string, std::map<std::string, std::uint64_t>>;

inline void add_to_histograms(Histograms& h, const ManifestRecord& r)
{
  ++h["vessel"][std::string(name(r.vessel))];
  ++h["heading_deg"][std::to_string(r.heading.degrees())];
  ++h["zone"][std::string(name(r.zone))];
  ++h["sun"][std::to_string(r.sun.path) + "," + std::to_string(r.sun.station)];
  ++h["sky"][std::string(name(r.sky))];
  ++h["sea_state"][std::to_string(r.sea.code())];
  ++h["observer"][std::string(observer(r.observer).name)];
}

/// Image path for an enumeration index: zero-padded index plus the top 32 bits of the seed in hex.
inline std::string image_file_name(std::uint64_t index, std::uint64_t seed)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s/%07llu_%08llx.png", kImageDirName, static_cast<unsigned long long>(index),
                static_cast<unsigned long long>(seed >> 32));
  return buf;
}

inline ManifestRecord make_record(const SweepConfig& cfg, std::uint64_t index, const SceneSpec& s)
{
  ManifestRecord r;
  r.seed = scene_seed(s, cfg.master_seed);
  r.file = image_file_name(index, r.seed);
  r.vessel = s.vessel;
  r.heading = s.heading;
  r.zone = heading_zone(s.heading, cfg.zone_map);
  r.sun = s.sun;
  r.sky = s.sky;
  r.sea = s.sea;
  r.observer = s.observer;
  r.generator_version = kGeneratorVersion;
  return r;
}

struct DatasetReport {
  std::uint64_t images_written = 0;
  double wall_seconds = 0.0;
  double images_per_hour = 0.0;
  unsigned jobs = 1;
  Histograms histograms;
};

inline nlohmann::json to_json(const DatasetReport& r)
{
  return {{"images_written", r.images_written},
          {"wall_seconds", r.wall_seconds},
          {"images_per_hour", r.images_per_hour},
          {"jobs", r.jobs},
          {"histograms", r.histograms}};
}

/// Renders, degrades and writes one image.
inline ImageBuffer produce_image(const SceneSpec& spec, std::uint64_t master_seed, const Degrader& degrader)
{
  const RenderResult res = render_linear(spec, master_seed);
  return degrader.apply(res.frame, spec, master_seed, sun_screen_position(res.layout));
}

struct GenerateOptions {
  unsigned jobs = 1;
  /// Called from worker threads after each image; must be thread safe.
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

/// Generates the dataset for a sweep into out_dir: images/, manifest.jsonl, dataset.json.
/// Output bytes do not depend on the number of jobs. An INCOMPLETE marker stays behind if writing fails.
inline DatasetReport generate(const SweepConfig& cfg, const fs::path& out_dir, const GenerateOptions& opt = {})
{
  if (opt.jobs < 1)
    throw ConfigError("jobs must be >= 1");
  const Sweep sweep(cfg); // validates before anything touches the disk
  const std::uint64_t total = sweep.size();

  const auto t0 = std::chrono::steady_clock::now();
  const fs::path marker = out_dir / kPartialMarkerName;
  auto write_marker = [&](const std::string& why) {
    std::ofstream m(marker, std::ios::trunc);
    m << why << '\n';
  };
  try {
    fs::create_directories(out_dir);
    write_marker("generation in progress");
    fs::create_directories(out_dir / kImageDirName);
  } catch (const fs::filesystem_error& e) {
    if (fs::is_directory(out_dir))
      write_marker(e.what());
    throw IoError(std::string("cannot prepare output directory: ") + e.what());
  }

  const Degrader degrader(cfg.degrade);
  std::atomic<bool> abort{false};
  std::atomic<std::uint64_t> done{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    try {
      for (std::uint64_t i = begin; i < end && !abort.load(std::memory_order_relaxed); ++i) {
        const SceneSpec spec = sweep.at(i);
        const ImageBuffer img = produce_image(spec, cfg.master_seed, degrader);
        write_png(out_dir / image_file_name(i, scene_seed(spec, cfg.master_seed)), img, cfg.output.png_compression);
        const auto n = done.fetch_add(1) + 1;
        if (opt.progress)
          opt.progress(n, total);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure)
        failure = std::current_exception();
      abort = true;
    }
  };

  // Static block partition of the index space.
  const unsigned jobs = static_cast<unsigned>(std::min<std::uint64_t>(opt.jobs, std::max<std::uint64_t>(total, 1)));
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 1; w < jobs; ++w)
      threads.emplace_back(worker, total * w / jobs, total * (w + 1) / jobs);
    worker(0, total / jobs);
  }

  if (failure) {
    std::string why = "generation failed";
    try {
      std::rethrow_exception(failure);
    } catch (const std::exception& e) {
      why = e.what();
    }
    write_marker(why);
    throw IoError("generation aborted: " + why);
  }

  DatasetReport report;
  try {
    std::vector<ManifestRecord> records;
    records.reserve(total);
    for (auto it = sweep.begin(); it != sweep.end(); ++it) {
      records.push_back(make_record(cfg, it.index(), *it));
      add_to_histograms(report.histograms, records.back());
    }
    write_manifest(records, out_dir / kManifestName);

    nlohmann::json info = to_json(cfg);
    info["generator_version"] = kGeneratorVersion;
    info["image_count"] = total;
    info["image_size"] = {kImageSize, kImageSize};
    std::ofstream out(out_dir / kDatasetInfoName, std::ios::binary | std::ios::trunc);
    out << info.dump(2) << '\n';
    out.flush();
    if (!out)
      throw IoError("failed writing dataset.json");
  } catch (const std::exception& e) {
    write_marker(e.what());
    throw IoError(e.what());
  }
  fs::remove(marker);

  report.images_written = total;
  report.jobs = jobs;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report.images_per_hour = report.wall_seconds > 0 ? 3600.0 * static_cast<double>(total) / report.wall_seconds : 0.0;
  return report;
}

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string kind; // missing-file, bad-image, zone-mismatch, duplicate-scene, seed-mismatch
  std::size_t line = 0;
  std::string file;
  std::string message;
};

struct ValidationReport {
  std::uint64_t records = 0;
  std::vector<Violation> violations;
  Histograms histograms;

  bool ok() const { return violations.empty(); }
  std::size_t count(const std::string& kind) const
  {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; }));
  }
};

inline nlohmann::json to_json(const ValidationReport& r)
{
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations)
    v.push_back({{"kind", x.kind}, {"line", x.line}, {"file", x.file}, {"message", x.message}});
  return {{"records", r.records}, {"ok", r.ok()}, {"violations", v}, {"histograms", r.histograms}};
}

/// Checks a generated dataset. Uses the zone map and master seed recorded in dataset.json
/// when present; otherwise the standard zone map and no seed check.
inline ValidationReport validate_dataset(const fs::path& dir)
{
  const fs::path manifest = dir / kManifestName;
  if (!fs::is_regular_file(manifest))
    throw IoError("no manifest at '" + manifest.string() + "'");

  ZoneMap zones = ZoneMap::standard();
  std::optional<std::uint64_t> master_seed;
  if (fs::is_regular_file(dir / kDatasetInfoName)) {
    std::ifstream in(dir / kDatasetInfoName);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json info;
    try {
      info = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw IoError(std::string("dataset.json is not valid JSON: ") + e.what());
    }
    nlohmann::json sub;
    for (const char* k : {"zone_map", "master_seed"})
      if (info.contains(k))
        sub[k] = info[k];
    const SweepConfig c = parse_sweep_config(sub);
    zones = c.zone_map;
    if (info.contains("master_seed"))
      master_seed = c.master_seed;
  }

  ValidationReport rep;
  const auto records = read_manifest(manifest);
  rep.records = records.size();
  std::set<std::uint64_t> scenes;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::size_t line = i + 1;
    add_to_histograms(rep.histograms, r);
    if (!scenes.insert(pack_codes(r.scene())).second)
      rep.violations.push_back({"duplicate-scene", line, r.file, "scene tuple appears more than once"});
    const Zone expected = heading_zone(r.heading, zones);
    if (expected != r.zone)
      rep.violations.push_back({"zone-mismatch", line, r.file,
                                "zone " + std::string(name(r.zone)) + " but heading " +
                                    std::to_string(r.heading.degrees()) + " maps to " + std::string(name(expected))});
    if (master_seed && scene_seed(r.scene(), *master_seed) != r.seed)
      rep.violations.push_back({"seed-mismatch", line, r.file, "seed does not match the scene and master seed"});
    const fs::path img = dir / r.file;
    if (!fs::is_regular_file(img)) {
      rep.violations.push_back({"missing-file", line, r.file, "image file not found"});
      continue;
    }
    try {
      const PngInfo info = read_png_info(img);
      if (info.width != kImageSize || info.height != kImageSize || info.channels != 3 || info.bit_depth != 8)
        rep.violations.push_back({"bad-image", line, r.file,
                                  "expected 384x384 8-bit RGB, got " + std::to_string(info.width) + "x" +
                                      std::to_string(info.height) + " with " + std::to_string(info.channels) +
                                      " channels"});
    } catch (const IoError& e) {
      rep.violations.push_back({"bad-image", line, r.file, e.what()});
    }
  }
  return rep;
}

} // namespace seaforge
