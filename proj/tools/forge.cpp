// forge: dataset generation front end.
//
//   forge generate --config <json> --out <dir> --jobs <n> --master-seed <u64>
//   forge count    --config <json>
//   forge validate <dir>
//   forge preview  --vessel <name> --heading <deg> --sea <code> --sky <name>
//                  --sun <path,station> --observer <name> --out <file>

#include <cstdint>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "seaforge/seaforge.hpp"

namespace {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfig = 2, kIo = 3, kInvalid = 4 };

int fail(const char* kind, const std::string& message, int code)
{
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

seaforge::SweepConfig load_config(const std::string& path)
{
  return path.empty() ? seaforge::SweepConfig::defaults() : seaforge::load_sweep_config(path);
}

std::uint64_t parse_u64(const std::string& s)
{
  std::size_t pos = 0;
  if (s.empty() || s[0] == '-')
    throw seaforge::ConfigError("master seed must be an unsigned 64-bit integer");
  try {
    const auto v = std::stoull(s, &pos, 0);
    if (pos == s.size())
      return v;
  } catch (const std::logic_error&) {
  }
  throw seaforge::ConfigError("master seed must be an unsigned 64-bit integer");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Synthetic maritime dataset generator"};
  app.require_subcommand(1);

  std::string config_path, out_dir, master_seed;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool quiet = false;
  auto* gen = app.add_subcommand("generate", "Render a sweep into a dataset directory");
  gen->add_option("--config", config_path, "Sweep configuration JSON (default: full grid)")->check(CLI::ExistingFile);
  gen->add_option("--out", out_dir, "Output directory")->required();
  gen->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  gen->add_option("--master-seed", master_seed, "Master seed (overrides the config)");
  gen->add_flag("--quiet", quiet, "No progress output");

  std::string count_config;
  auto* cnt = app.add_subcommand("count", "Print the number of scenes a configuration enumerates");
  cnt->add_option("--config", count_config, "Sweep configuration JSON (default: full grid)")->check(CLI::ExistingFile);

  std::string validate_dir;
  auto* val = app.add_subcommand("validate", "Check a generated dataset");
  val->add_option("dir", validate_dir, "Dataset directory")->required();

  std::string pv_vessel, pv_sky = "Clear", pv_sun = "0,2", pv_observer = "TopsideLookout", pv_out, pv_seed, pv_config;
  int pv_heading = 0, pv_sea = 3;
  auto* pre = app.add_subcommand("preview", "Render a single scene to a PNG file");
  pre->add_option("--vessel", pv_vessel, "Vessel class")->required();
  pre->add_option("--heading", pv_heading, "Relative heading in degrees")->required();
  pre->add_option("--sea", pv_sea, "Sea state code 2..6");
  pre->add_option("--sky", pv_sky, "Sky condition");
  pre->add_option("--sun", pv_sun, "Sun position as path,station");
  pre->add_option("--observer", pv_observer, "Observer name");
  pre->add_option("--out", pv_out, "Output PNG")->required();
  pre->add_option("--master-seed", pv_seed, "Master seed");
  pre->add_option("--config", pv_config, "Configuration supplying degradation parameters")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kConfig);
  }

  try {
    if (*cnt) {
      std::cout << seaforge::count(load_config(count_config)) << '\n';
      return kOk;
    }

    if (*gen) {
      auto cfg = load_config(config_path);
      if (!master_seed.empty())
        cfg.master_seed = parse_u64(master_seed);
      seaforge::GenerateOptions opt;
      opt.jobs = jobs;
      std::mutex mu;
      if (!quiet)
        opt.progress = [&mu](std::uint64_t done, std::uint64_t total) {
          if (done % 100 == 0 || done == total) {
            std::lock_guard lock(mu);
            std::cerr << "\r" << done << "/" << total << std::flush;
            if (done == total)
              std::cerr << '\n';
          }
        };
      const auto report = seaforge::generate(cfg, out_dir, opt);
      std::cout << seaforge::to_json(report).dump(2) << '\n';
      return kOk;
    }

    if (*val) {
      const auto report = seaforge::validate_dataset(validate_dir);
      std::cout << seaforge::to_json(report).dump(2) << '\n';
      if (!report.ok())
        return fail("invalid-dataset", std::to_string(report.violations.size()) + " violations", kInvalid);
      return kOk;
    }

    if (*pre) {
      nlohmann::json doc = nlohmann::json::object();
      if (!pv_config.empty()) {
        const auto full = seaforge::load_sweep_config(pv_config);
        doc = seaforge::to_json(full);
      }
      doc["vessels"] = {pv_vessel};
      doc["headings"] = {pv_heading};
      doc["sea_states"] = {pv_sea};
      doc["skies"] = {pv_sky};
      doc["sun_positions"] = {pv_sun};
      doc["observers"] = {pv_observer};
      if (!pv_seed.empty())
        doc["master_seed"] = std::to_string(parse_u64(pv_seed));
      const auto cfg = seaforge::parse_sweep_config(doc);
      const seaforge::SceneSpec spec = seaforge::Sweep(cfg).at(0);
      const auto img = seaforge::produce_image(spec, cfg.master_seed, seaforge::Degrader(cfg.degrade));
      seaforge::write_png(pv_out, img, cfg.output.png_compression);
      std::cout << nlohmann::json{{"file", pv_out},
                                  {"seed", std::to_string(seaforge::scene_seed(spec, cfg.master_seed))},
                                  {"zone", std::string(seaforge::name(seaforge::heading_zone(spec.heading, cfg.zone_map)))}}
                       .dump()
                << '\n';
      return kOk;
    }
  } catch (const seaforge::ConfigError& e) {
    return fail("config", e.what(), kConfig);
  } catch (const seaforge::ManifestError& e) {
    return fail("manifest", e.what(), kInvalid);
  } catch (const seaforge::IoError& e) {
    return fail("io", e.what(), kIo);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kFailure);
  }
  return kFailure;
}
