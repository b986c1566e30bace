#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seaforge/degrade_params.hpp"
#include "seaforge/error.hpp"
#include "seaforge/scene_grid.hpp"

namespace seaforge {

struct OutputSettings {
  int png_compression = 1; // zlib level 0..9
  bool operator==(const OutputSettings&) const = default;
};

/// Per-dimension selectors (each a non-empty subset, stored in canonical code order),
/// master seed, zone table, degradation strengths and output settings.
struct SweepConfig {
  std::vector<VesselClass> vessels;
  std::vector<Heading> headings;
  std::vector<SunPosition> suns;
  std::vector<SkyCondition> skies;
  std::vector<SeaState> seas;
  std::vector<std::uint8_t> observers;
  std::uint64_t master_seed = 0;
  ZoneMap zone_map = ZoneMap::standard();
  DegradeParams degrade{};
  OutputSettings output{};

  /// Full grid on every dimension.
  static SweepConfig defaults()
  {
    SweepConfig c;
    for (std::size_t i = 0; i < kVesselClassCount; ++i)
      c.vessels.push_back(static_cast<VesselClass>(i));
    for (std::size_t i = 0; i < kHeadingCount; ++i)
      c.headings.push_back(Heading::from_index(static_cast<std::uint8_t>(i)));
    for (std::size_t i = 0; i < kSunPositionCount; ++i)
      c.suns.push_back(SunPosition::from_index(static_cast<std::uint8_t>(i)));
    for (std::size_t i = 0; i < kSkyCount; ++i)
      c.skies.push_back(static_cast<SkyCondition>(i));
    for (std::size_t i = 0; i < kSeaStateCount; ++i)
      c.seas.push_back(SeaState::from_index(static_cast<std::uint8_t>(i)));
    for (std::size_t i = 0; i < kObserverCount; ++i)
      c.observers.push_back(static_cast<std::uint8_t>(i));
    return c;
  }

  /// Throws ConfigError on an empty selector or an out-of-order / duplicated entry.
  void validate() const
  {
    check_dim(vessels, "vessels", [](VesselClass v) { return code(v); });
    check_dim(headings, "headings", [](Heading h) { return h.index(); });
    check_dim(suns, "sun_positions", [](SunPosition s) { return s.index(); });
    check_dim(skies, "skies", [](SkyCondition s) { return code(s); });
    check_dim(seas, "sea_states", [](SeaState s) { return s.index(); });
    check_dim(observers, "observers", [](std::uint8_t o) {
      if (o >= kObserverCount)
        throw ConfigError("observer id out of range");
      return o;
    });
    const auto& d = degrade;
    const bool bad = d.ca_strength_px < 0 || d.bloom_threshold < 0 || d.bloom_threshold > 1 || d.bloom_gain < 0 ||
                     d.bloom_sigma_px <= 0 || d.flare_strength < 0 ||
                     std::any_of(d.grit_coverage.begin(), d.grit_coverage.end(), [](double v) { return v < 0 || v > 0.5; }) ||
                     std::any_of(d.grain_sigma.begin(), d.grain_sigma.end(), [](double v) { return v < 0; }) ||
                     std::any_of(d.flare_ghosts.begin(), d.flare_ghosts.end(),
                                 [](const FlareGhost& g) { return g.alpha < 0 || g.radius_px <= 0; });
    if (bad)
      throw ConfigError("degrade parameters must be non-negative (bloom_threshold in [0,1], grit coverage <= 0.5)");
    if (d.grit_coverage[2] <= d.grit_coverage[1] || d.grain_sigma[2] <= d.grain_sigma[1])
      throw ConfigError("level-2 grit coverage and grain sigma must exceed level 1");
    if (output.png_compression < 0 || output.png_compression > 9)
      throw ConfigError("output.png_compression must be 0..9");
  }

private:
  template <class T, class CodeFn>
  static void check_dim(const std::vector<T>& v, const char* what, CodeFn code_of)
  {
    if (v.empty())
      throw ConfigError(std::string("selector '") + what + "' is empty");
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!(code_of(v[i - 1]) < code_of(v[i])))
        throw ConfigError(std::string("selector '") + what + "' has duplicate entries");
  }
};

/// Number of scenes the config enumerates, without rendering anything.
inline std::uint64_t count(const SweepConfig& cfg)
{
  cfg.validate();
  return static_cast<std::uint64_t>(cfg.vessels.size()) * cfg.headings.size() * cfg.suns.size() * cfg.skies.size() *
         cfg.seas.size() * cfg.observers.size();
}

/// Random-access view of the Cartesian sweep in lexicographic
/// (vessel, heading, sun, sky, sea, observer) order; the observer varies fastest.
class Sweep {
public:
  explicit Sweep(SweepConfig cfg) : cfg_(std::move(cfg)), size_(count(cfg_)) {}

  std::uint64_t size() const { return size_; }
  const SweepConfig& config() const { return cfg_; }

  SceneSpec at(std::uint64_t index) const
  {
    if (index >= size_)
      throw std::out_of_range("sweep index out of range");
    SceneSpec s;
    auto take = [&index](std::size_t radix) {
      const std::size_t digit = static_cast<std::size_t>(index % radix);
      index /= radix;
      return digit;
    };
    s.observer = cfg_.observers[take(cfg_.observers.size())];
    s.sea = cfg_.seas[take(cfg_.seas.size())];
    s.sky = cfg_.skies[take(cfg_.skies.size())];
    s.sun = cfg_.suns[take(cfg_.suns.size())];
    s.heading = cfg_.headings[take(cfg_.headings.size())];
    s.vessel = cfg_.vessels[take(cfg_.vessels.size())];
    return s;
  }

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SceneSpec;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = SceneSpec;

    iterator() = default;
    iterator(const Sweep* sweep, std::uint64_t pos) : sweep_(sweep), pos_(pos) {}
    SceneSpec operator*() const { return sweep_->at(pos_); }
    iterator& operator++()
    {
      ++pos_;
      return *this;
    }
    iterator operator++(int)
    {
      auto t = *this;
      ++pos_;
      return t;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }
    std::uint64_t index() const { return pos_; }

  private:
    const Sweep* sweep_ = nullptr;
    std::uint64_t pos_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

private:
  SweepConfig cfg_;
  std::uint64_t size_;
};

inline Sweep enumerate_sweep(const SweepConfig& cfg) { return Sweep(cfg); }

// ---------------------------------------------------------------------------
// JSON configuration document

namespace detail {

template <class T, class Parse, class CodeFn>
std::vector<T> parse_selector(const nlohmann::json& arr, const char* key, Parse parse, CodeFn code_of)
{
  if (!arr.is_array())
    throw ConfigError(std::string("'") + key + "' must be an array");
  if (arr.empty())
    throw ConfigError(std::string("selector '") + key + "' is empty");
  std::vector<T> out;
  for (const auto& item : arr)
    out.push_back(parse(item));
  std::sort(out.begin(), out.end(), [&](const T& a, const T& b) { return code_of(a) < code_of(b); });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (code_of(out[i - 1]) == code_of(out[i]))
      throw ConfigError(std::string("selector '") + key + "' has duplicate entries");
  return out;
}

inline std::string expect_string(const nlohmann::json& j, const char* key)
{
  if (!j.is_string())
    throw ConfigError(std::string("'") + key + "' entries must be strings");
  return j.get<std::string>();
}

inline SunPosition parse_sun(const nlohmann::json& j)
{
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return SunPosition::make(j[0].get<int>(), j[1].get<int>());
  if (j.is_object() && j.contains("path") && j.contains("station"))
    return SunPosition::make(j.at("path").get<int>(), j.at("station").get<int>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    int path = -1, station = -1;
    char comma = 0;
    std::istringstream is(s);
    if (is >> path >> comma >> station && comma == ',' && is.peek() == EOF)
      return SunPosition::make(path, station);
  }
  throw ConfigError("sun position must be [path, station], {\"path\":..,\"station\":..} or \"path,station\"");
}

inline double number_or(const nlohmann::json& j, const char* key, double fallback)
{
  if (!j.contains(key))
    return fallback;
  if (!j.at(key).is_number())
    throw ConfigError(std::string("'") + key + "' must be a number");
  return j.at(key).get<double>();
}

inline std::array<double, 3> levels_or(const nlohmann::json& j, const char* key, std::array<double, 3> fallback)
{
  if (!j.contains(key))
    return fallback;
  const auto& a = j.at(key);
  if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
    throw ConfigError(std::string("'") + key + "' must be [level1, level2]");
  return {0.0, a[0].get<double>(), a[1].get<double>()};
}

inline void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> allowed, const char* where)
{
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; }))
      throw ConfigError(std::string("unknown key '") + it.key() + "' in " + where);
  }
}

} // namespace detail

/// Parses a sweep configuration document. Missing selectors default to the full dimension.
inline SweepConfig parse_sweep_config(const nlohmann::json& doc)
{
  using namespace detail;
  if (!doc.is_object())
    throw ConfigError("configuration document must be a JSON object");
  reject_unknown(doc,
                 {"vessels", "headings", "sun_positions", "skies", "sea_states", "observers", "master_seed", "zone_map",
                  "degrade", "output"},
                 "configuration");

  SweepConfig cfg = SweepConfig::defaults();
  if (doc.contains("vessels"))
    cfg.vessels = parse_selector<VesselClass>(
        doc["vessels"], "vessels",
        [](const nlohmann::json& j) {
          const auto s = expect_string(j, "vessels");
          if (auto v = vessel_from_name(s))
            return *v;
          throw ConfigError("unknown vessel class '" + s + "'");
        },
        [](VesselClass v) { return code(v); });
  if (doc.contains("headings"))
    cfg.headings = parse_selector<Heading>(
        doc["headings"], "headings",
        [](const nlohmann::json& j) {
          if (!j.is_number_integer())
            throw ConfigError("'headings' entries must be integers");
          return Heading::from_degrees(j.get<int>());
        },
        [](Heading h) { return h.index(); });
  if (doc.contains("sun_positions"))
    cfg.suns = parse_selector<SunPosition>(doc["sun_positions"], "sun_positions", parse_sun,
                                           [](SunPosition s) { return s.index(); });
  if (doc.contains("skies"))
    cfg.skies = parse_selector<SkyCondition>(
        doc["skies"], "skies",
        [](const nlohmann::json& j) {
          const auto s = expect_string(j, "skies");
          if (auto v = sky_from_name(s))
            return *v;
          throw ConfigError("unknown sky condition '" + s + "'");
        },
        [](SkyCondition s) { return code(s); });
  if (doc.contains("sea_states"))
    cfg.seas = parse_selector<SeaState>(
        doc["sea_states"], "sea_states",
        [](const nlohmann::json& j) {
          if (!j.is_number_integer())
            throw ConfigError("'sea_states' entries must be integer codes 2..6");
          return SeaState::from_code(j.get<int>());
        },
        [](SeaState s) { return s.index(); });
  if (doc.contains("observers"))
    cfg.observers = parse_selector<std::uint8_t>(
        doc["observers"], "observers",
        [](const nlohmann::json& j) {
          const auto s = expect_string(j, "observers");
          if (auto v = observer_from_name(s))
            return *v;
          throw ConfigError("unknown observer '" + s + "'");
        },
        [](std::uint8_t o) { return o; });

  if (doc.contains("master_seed")) {
    const auto& m = doc["master_seed"];
    if (m.is_number_unsigned())
      cfg.master_seed = m.get<std::uint64_t>();
    else if (m.is_number_integer() && m.get<std::int64_t>() >= 0)
      cfg.master_seed = static_cast<std::uint64_t>(m.get<std::int64_t>());
    else if (m.is_string())
      try {
        std::size_t pos = 0;
        cfg.master_seed = std::stoull(m.get<std::string>(), &pos, 0);
        if (pos != m.get<std::string>().size())
          throw ConfigError("bad master_seed");
      } catch (const std::logic_error&) {
        throw ConfigError("master_seed string is not an unsigned 64-bit number");
      }
    else
      throw ConfigError("master_seed must be an unsigned integer");
  }

  if (doc.contains("zone_map")) {
    const auto& zm = doc["zone_map"];
    if (!zm.is_object())
      throw ConfigError("zone_map must map zone names to heading arrays");
    std::array<Zone, kHeadingCount> table{};
    std::array<bool, kHeadingCount> seen{};
    for (auto it = zm.begin(); it != zm.end(); ++it) {
      const auto z = zone_from_name(it.key());
      if (!z)
        throw ConfigError("unknown zone '" + it.key() + "' in zone_map");
      if (!it.value().is_array())
        throw ConfigError("zone_map entries must be heading arrays");
      for (const auto& h : it.value()) {
        if (!h.is_number_integer())
          throw ConfigError("zone_map headings must be integers");
        const auto heading = Heading::from_degrees(h.get<int>());
        if (seen[heading.index()])
          throw ConfigError("heading " + std::to_string(heading.degrees()) + " assigned twice in zone_map");
        seen[heading.index()] = true;
        table[heading.index()] = *z;
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw ConfigError("zone_map must assign all 20 headings");
    cfg.zone_map = ZoneMap::from_table(table);
  }

  if (doc.contains("degrade")) {
    const auto& d = doc["degrade"];
    if (!d.is_object())
      throw ConfigError("'degrade' must be an object");
    reject_unknown(d,
                   {"ca_strength_px", "bloom_threshold", "bloom_gain", "bloom_sigma_px", "flare_strength",
                    "flare_ghosts", "grit_coverage", "grain_sigma", "grit_salt"},
                   "degrade");
    auto& p = cfg.degrade;
    p.ca_strength_px = number_or(d, "ca_strength_px", p.ca_strength_px);
    p.bloom_threshold = number_or(d, "bloom_threshold", p.bloom_threshold);
    p.bloom_gain = number_or(d, "bloom_gain", p.bloom_gain);
    p.bloom_sigma_px = number_or(d, "bloom_sigma_px", p.bloom_sigma_px);
    p.flare_strength = number_or(d, "flare_strength", p.flare_strength);
    p.grit_coverage = levels_or(d, "grit_coverage", p.grit_coverage);
    p.grain_sigma = levels_or(d, "grain_sigma", p.grain_sigma);
    if (d.contains("grit_salt")) {
      if (!d["grit_salt"].is_number_unsigned() && !(d["grit_salt"].is_number_integer() && d["grit_salt"].get<std::int64_t>() >= 0))
        throw ConfigError("grit_salt must be an unsigned integer");
      p.grit_salt = d["grit_salt"].get<std::uint64_t>();
    }
    if (d.contains("flare_ghosts")) {
      p.flare_ghosts.clear();
      for (const auto& g : d["flare_ghosts"]) {
        if (!g.is_object())
          throw ConfigError("flare_ghosts entries must be objects {t, alpha, radius_px}");
        p.flare_ghosts.push_back({number_or(g, "t", 0.0), number_or(g, "alpha", 0.0), number_or(g, "radius_px", 10.0)});
      }
    }
  }

  if (doc.contains("output")) {
    const auto& o = doc["output"];
    if (!o.is_object())
      throw ConfigError("'output' must be an object");
    reject_unknown(o, {"png_compression"}, "output");
    if (o.contains("png_compression")) {
      if (!o["png_compression"].is_number_integer())
        throw ConfigError("output.png_compression must be an integer");
      cfg.output.png_compression = o["png_compression"].get<int>();
    }
  }

  cfg.validate();
  return cfg;
}

inline SweepConfig parse_sweep_config(const std::string& text)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
  }
  try {
    return parse_sweep_config(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("configuration type error: ") + e.what());
  }
}

inline SweepConfig parse_sweep_config(const char* text) { return parse_sweep_config(std::string(text)); }

inline SweepConfig load_sweep_config(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open configuration file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sweep_config(ss.str());
}

/// Canonical JSON echo of a config; written next to generated datasets.
inline nlohmann::json to_json(const SweepConfig& cfg)
{
  nlohmann::json j;
  auto& v = j["vessels"] = nlohmann::json::array();
  for (auto x : cfg.vessels)
    v.push_back(std::string(name(x)));
  auto& h = j["headings"] = nlohmann::json::array();
  for (auto x : cfg.headings)
    h.push_back(x.degrees());
  auto& s = j["sun_positions"] = nlohmann::json::array();
  for (auto x : cfg.suns)
    s.push_back({x.path, x.station});
  auto& k = j["skies"] = nlohmann::json::array();
  for (auto x : cfg.skies)
    k.push_back(std::string(name(x)));
  auto& e = j["sea_states"] = nlohmann::json::array();
  for (auto x : cfg.seas)
    e.push_back(x.code());
  auto& o = j["observers"] = nlohmann::json::array();
  for (auto x : cfg.observers)
    o.push_back(std::string(observer(x).name));
  j["master_seed"] = std::to_string(cfg.master_seed);
  nlohmann::json zm = nlohmann::json::object();
  for (auto zn : kZoneNames)
    zm[std::string(zn)] = nlohmann::json::array();
  for (std::size_t i = 0; i < kHeadingCount; ++i)
    zm[std::string(name(cfg.zone_map.table()[i]))].push_back(kHeadings[i]);
  j["zone_map"] = zm;
  const auto& d = cfg.degrade;
  nlohmann::json ghosts = nlohmann::json::array();
  for (const auto& g : d.flare_ghosts)
    ghosts.push_back({{"t", g.t}, {"alpha", g.alpha}, {"radius_px", g.radius_px}});
  j["degrade"] = {{"ca_strength_px", d.ca_strength_px},
                  {"bloom_threshold", d.bloom_threshold},
                  {"bloom_gain", d.bloom_gain},
                  {"bloom_sigma_px", d.bloom_sigma_px},
                  {"flare_strength", d.flare_strength},
                  {"flare_ghosts", ghosts},
                  {"grit_coverage", {d.grit_coverage[1], d.grit_coverage[2]}},
                  {"grain_sigma", {d.grain_sigma[1], d.grain_sigma[2]}},
                  {"grit_salt", d.grit_salt}};
  j["output"] = {{"png_compression", cfg.output.png_compression}};
  return j;
}

} // namespace seaforge
