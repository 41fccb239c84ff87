// SPDX-License-Identifier: Apache-2.0
//
// risorient — orientation-aware link simulator for RIS-assisted MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "config_io.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace risorient {

namespace {

using nlohmann::json;

struct RawValue {
  json value;     // scalar, string, or array
  int line = 0;   // 0 for JSON input
  mutable bool consumed = false;
};

using RawMap = std::map<std::string, RawValue>;

[[noreturn]] void fail(const std::string &origin, int line,
                       const std::string &what) {
  std::ostringstream os;
  os << origin;
  if (line > 0)
    os << ":" << line;
  os << ": " << what;
  throw ConfigError(os.str());
}

std::string trim(const std::string &s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

// Converts one key/value token to a JSON leaf: bool, integer, number, array
// of numbers (whitespace separated), or string. "inf" stays a string and is
// interpreted where infinities are meaningful.
json token_to_json(const std::string &token) {
  if (token == "true")
    return true;
  if (token == "false")
    return false;

  const auto parse_word = [](const std::string &word) -> json {
    if (word == "inf" || word == "+inf" || word == "-inf" || word == "nan")
      return word;
    char *end = nullptr;
    if (word.find_first_of(".eE") == std::string::npos) {
      errno = 0;
      if (word.front() == '-') {
        const long long i = std::strtoll(word.c_str(), &end, 10);
        if (end != word.c_str() && *end == '\0' && errno == 0)
          return static_cast<std::int64_t>(i);
      } else {
        const unsigned long long u = std::strtoull(word.c_str(), &end, 10);
        if (end != word.c_str() && *end == '\0' && errno == 0)
          return static_cast<std::uint64_t>(u);
      }
    }
    end = nullptr;
    const double v = std::strtod(word.c_str(), &end);
    if (end != word.c_str() && *end == '\0')
      return v;
    return word;
  };

  std::istringstream is(token);
  std::vector<json> parts;
  std::string word;
  while (is >> word)
    parts.push_back(parse_word(word));
  if (parts.size() == 1)
    return parts.front();
  const bool all_numeric =
      !parts.empty() && std::all_of(parts.begin(), parts.end(),
                                    [](const json &p) { return p.is_number(); });
  if (all_numeric)
    return json(parts);
  return token;
}

RawMap parse_kv_text(const std::string &text, const std::string &origin) {
  RawMap map;
  std::istringstream is(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        fail(origin, line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        fail(origin, line_no, "empty section name");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(origin, line_no, "expected `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      fail(origin, line_no, "empty key");
    if (value.empty())
      fail(origin, line_no, "empty value for key '" + key + "'");
    const std::string path = section.empty() ? key : section + "." + key;
    if (map.count(path))
      fail(origin, line_no, "duplicate key '" + path + "'");
    map[path] = RawValue{token_to_json(value), line_no};
  }
  return map;
}

RawMap parse_json_text(const std::string &text, const std::string &origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    fail(origin, 0, std::string("JSON parse error: ") + e.what());
  }
  if (!root.is_object())
    fail(origin, 0, "top-level JSON value must be an object");
  RawMap map;
  for (const auto &[key, value] : root.items()) {
    if (value.is_object()) {
      for (const auto &[sub, leaf] : value.items()) {
        if (leaf.is_object())
          fail(origin, 0, "unexpected nested object at " + key + "." + sub);
        map[key + "." + sub] = RawValue{leaf, 0};
      }
    } else {
      map[key] = RawValue{value, 0};
    }
  }
  return map;
}

class Builder {
public:
  Builder(RawMap raw, std::string origin)
      : raw_(std::move(raw)), origin_(std::move(origin)) {}

  bool has(const std::string &key) const { return raw_.count(key) != 0; }

  const RawValue *find(const std::string &key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end())
      return nullptr;
    it->second.consumed = true;
    return &it->second;
  }

  template <typename Fn>
  void with(const std::string &key, Fn &&fn) const {
    if (const RawValue *rv = find(key))
      fn(*rv);
  }

  double number(const std::string &key, const RawValue &rv,
                bool allow_inf = false) const {
    if (rv.value.is_number())
      return rv.value.get<double>();
    if (allow_inf && rv.value.is_string()) {
      const std::string s = rv.value.get<std::string>();
      if (s == "inf" || s == "+inf")
        return std::numeric_limits<double>::infinity();
    }
    fail(origin_, rv.line, "expected a number for '" + key + "'");
  }

  int integer(const std::string &key, const RawValue &rv) const {
    const double v = number(key, rv);
    if (v != std::floor(v) || std::abs(v) > 2e9)
      fail(origin_, rv.line, "expected an integer for '" + key + "'");
    return static_cast<int>(v);
  }

  std::uint64_t unsigned64(const std::string &key, const RawValue &rv) const {
    if (rv.value.is_number_unsigned())
      return rv.value.get<std::uint64_t>();
    if (rv.value.is_number_integer() && rv.value.get<std::int64_t>() >= 0)
      return static_cast<std::uint64_t>(rv.value.get<std::int64_t>());
    fail(origin_, rv.line, "expected a non-negative integer for '" + key +
                               "'");
  }

  bool boolean(const std::string &key, const RawValue &rv) const {
    if (rv.value.is_boolean())
      return rv.value.get<bool>();
    fail(origin_, rv.line, "expected true/false for '" + key + "'");
  }

  std::string text(const std::string &key, const RawValue &rv) const {
    if (rv.value.is_string())
      return rv.value.get<std::string>();
    fail(origin_, rv.line, "expected a string for '" + key + "'");
  }

  std::vector<double> numbers(const std::string &key, const RawValue &rv,
                              int exact = -1) const {
    std::vector<double> out;
    if (rv.value.is_array()) {
      for (const auto &e : rv.value) {
        if (!e.is_number())
          fail(origin_, rv.line, "expected numbers in '" + key + "'");
        out.push_back(e.get<double>());
      }
    } else if (rv.value.is_number()) {
      out.push_back(rv.value.get<double>());
    } else {
      fail(origin_, rv.line, "expected a number list for '" + key + "'");
    }
    if (exact >= 0 && static_cast<int>(out.size()) != exact)
      fail(origin_, rv.line, "'" + key + "' needs exactly " +
                                 std::to_string(exact) + " numbers");
    return out;
  }

  Vec3 vec3(const std::string &key, const RawValue &rv) const {
    const auto v = numbers(key, rv, 3);
    return {v[0], v[1], v[2]};
  }

  void finish() const {
    for (const auto &[key, rv] : raw_)
      if (!rv.consumed)
        fail(origin_, rv.line, "unknown key '" + key + "'");
  }

  [[noreturn]] void error(const std::string &key, const RawValue &rv,
                          const std::string &what) const {
    fail(origin_, rv.line, "'" + key + "': " + what);
  }

private:
  RawMap raw_;
  std::string origin_;
};

void build_array(const Builder &b, const std::string &section, ArraySpec &a) {
  b.with(section + ".kind", [&](const RawValue &rv) {
    const std::string k = b.text(section + ".kind", rv);
    if (k == "ula")
      a.kind = ArrayKind::ULA;
    else if (k == "upa")
      a.kind = ArrayKind::UPA;
    else
      b.error(section + ".kind", rv, "must be 'ula' or 'upa'");
  });
  b.with(section + ".nx", [&](const RawValue &rv) {
    a.nx = b.integer(section + ".nx", rv);
  });
  b.with(section + ".ny", [&](const RawValue &rv) {
    a.ny = b.integer(section + ".ny", rv);
  });
  b.with(section + ".spacing", [&](const RawValue &rv) {
    a.spacing_wavelengths = b.number(section + ".spacing", rv);
  });
  b.with(section + ".q", [&](const RawValue &rv) {
    a.pattern_exponent_q = b.number(section + ".q", rv);
  });
  b.with(section + ".cutoff", [&](const RawValue &rv) {
    a.hemisphere_cutoff = b.boolean(section + ".cutoff", rv);
  });
  b.with(section + ".facing", [&](const RawValue &rv) {
    if (rv.value.is_string()) {
      const std::string f = rv.value.get<std::string>();
      if (f == "auto")
        a.facing.mode = FacingSpec::Mode::Auto;
      else if (f == "global")
        a.facing.mode = FacingSpec::Mode::Global;
      else
        b.error(section + ".facing", rv,
                "must be 'auto', 'global', or a 3-vector");
    } else {
      a.facing.mode = FacingSpec::Mode::Explicit;
      a.facing.boresight = b.vec3(section + ".facing", rv);
    }
  });
}

json facing_to_json(const FacingSpec &f) {
  switch (f.mode) {
  case FacingSpec::Mode::Auto:
    return "auto";
  case FacingSpec::Mode::Global:
    return "global";
  case FacingSpec::Mode::Explicit:
  default:
    return json{f.boresight.x(), f.boresight.y(), f.boresight.z()};
  }
}

json array_to_json(const ArraySpec &a) {
  json j;
  j["kind"] = a.kind == ArrayKind::ULA ? "ula" : "upa";
  j["nx"] = a.nx;
  j["ny"] = a.ny;
  j["spacing"] = a.spacing_wavelengths;
  j["q"] = a.pattern_exponent_q;
  j["cutoff"] = a.hemisphere_cutoff;
  j["facing"] = facing_to_json(a.facing);
  return j;
}

json number_or_inf(double v) {
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  return v;
}

} // namespace

LoadedConfig load_config_text(const std::string &text,
                              const std::string &origin) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  const bool is_json = first != std::string::npos && text[first] == '{';
  Builder b(is_json ? parse_json_text(text, origin)
                    : parse_kv_text(text, origin),
            origin);

  LoadedConfig cfg;
  ScenarioConfig &sc = cfg.scenario;

  // Environment first: it selects the propagation defaults.
  b.with("environment", [&](const RawValue &rv) {
    const std::string e = b.text("environment", rv);
    if (e == "indoor")
      sc.environment = Environment::Indoor;
    else if (e == "outdoor")
      sc.environment = Environment::Outdoor;
    else
      b.error("environment", rv, "must be 'indoor' or 'outdoor'");
  });
  sc.path_loss = PathLossParams::defaults_for(sc.environment);
  sc.los = LosParams::defaults_for(sc.environment);

  b.with("frequency_ghz", [&](const RawValue &rv) {
    sc.frequency_ghz = b.number("frequency_ghz", rv);
  });
  b.with("seed", [&](const RawValue &rv) {
    sc.master_seed = b.unsigned64("seed", rv);
  });
  b.with("realizations", [&](const RawValue &rv) {
    sc.realizations = b.integer("realizations", rv);
  });
  b.with("noise_dbm", [&](const RawValue &rv) {
    sc.noise_dbm = b.number("noise_dbm", rv);
  });
  b.with("tx_power_dbm", [&](const RawValue &rv) {
    sc.tx_power_dbm = b.number("tx_power_dbm", rv);
  });
  b.with("threads", [&](const RawValue &rv) {
    sc.threads = b.integer("threads", rv);
  });

  b.with("layout.tx", [&](const RawValue &rv) {
    sc.layout.tx_pos = b.vec3("layout.tx", rv);
  });
  b.with("layout.rx", [&](const RawValue &rv) {
    sc.layout.rx_pos = b.vec3("layout.rx", rv);
  });
  b.with("layout.ris", [&](const RawValue &rv) {
    sc.layout.ris_pos = b.vec3("layout.ris", rv);
  });
  b.with("layout.direct_blocked", [&](const RawValue &rv) {
    sc.layout.direct_link_blocked = b.boolean("layout.direct_blocked", rv);
  });

  build_array(b, "bs_array", sc.bs_array);
  build_array(b, "user_array", sc.user_array);
  build_array(b, "ris_array", sc.ris_array);

  b.with("los.override", [&](const RawValue &rv) {
    const std::string o = b.text("los.override", rv);
    if (o == "none")
      sc.los.force = LosParams::Override::None;
    else if (o == "los")
      sc.los.force = LosParams::Override::ForceLos;
    else if (o == "nlos")
      sc.los.force = LosParams::Override::ForceNlos;
    else
      b.error("los.override", rv, "must be 'none', 'los', or 'nlos'");
  });
  b.with("los.d1_m",
         [&](const RawValue &rv) { sc.los.d1_m = b.number("los.d1_m", rv); });
  b.with("los.d2_m",
         [&](const RawValue &rv) { sc.los.d2_m = b.number("los.d2_m", rv); });

  const auto pl_num = [&](const char *key, double &dst) {
    b.with(std::string("path_loss.") + key, [&](const RawValue &rv) {
      dst = b.number(std::string("path_loss.") + key, rv);
    });
  };
  pl_num("a_los", sc.path_loss.a_los);
  pl_num("n_los", sc.path_loss.n_los);
  pl_num("sigma_los_db", sc.path_loss.sigma_los_db);
  pl_num("a_nlos", sc.path_loss.a_nlos);
  pl_num("n_nlos", sc.path_loss.n_nlos);
  pl_num("sigma_nlos_db", sc.path_loss.sigma_nlos_db);
  b.with("path_loss.shadowing", [&](const RawValue &rv) {
    sc.path_loss.shadowing_enabled = b.boolean("path_loss.shadowing", rv);
  });

  b.with("clusters.mean_count", [&](const RawValue &rv) {
    sc.clusters.mean_cluster_count = b.number("clusters.mean_count", rv);
  });
  b.with("clusters.subrays", [&](const RawValue &rv) {
    sc.clusters.subrays_per_cluster = b.integer("clusters.subrays", rv);
  });
  b.with("clusters.angular_spread_deg", [&](const RawValue &rv) {
    sc.clusters.angular_spread_deg =
        b.number("clusters.angular_spread_deg", rv);
  });
  b.with("clusters.center_range_deg", [&](const RawValue &rv) {
    sc.clusters.center_range_deg = b.number("clusters.center_range_deg", rv);
  });
  b.with("clusters.subray_clip_sigmas", [&](const RawValue &rv) {
    sc.clusters.subray_clip_sigmas =
        b.number("clusters.subray_clip_sigmas", rv);
  });
  b.with("clusters.ricean_k_db", [&](const RawValue &rv) {
    sc.clusters.ricean_k_db = b.number("clusters.ricean_k_db", rv, true);
  });
  b.with("clusters.shadow_sigma_db", [&](const RawValue &rv) {
    sc.clusters.shadow_sigma_db = b.number("clusters.shadow_sigma_db", rv);
  });

  b.with("phases.strategy", [&](const RawValue &rv) {
    const std::string s = b.text("phases.strategy", rv);
    if (s == "dominant_pair")
      sc.phases.strategy = PhaseStrategy::DominantPair;
    else if (s == "random")
      sc.phases.strategy = PhaseStrategy::Random;
    else if (s == "zero")
      sc.phases.strategy = PhaseStrategy::Zero;
    else
      b.error("phases.strategy", rv,
              "must be 'dominant_pair', 'random', or 'zero'");
  });
  b.with("phases.reoptimize_per_rotation", [&](const RawValue &rv) {
    sc.phases.reoptimize_per_rotation =
        b.boolean("phases.reoptimize_per_rotation", rv);
  });
  b.with("phases.oracle_bits", [&](const RawValue &rv) {
    sc.phases.oracle_bits = b.integer("phases.oracle_bits", rv);
  });

  const auto grid = [&](const char *key, GridSpec &g) {
    b.with(std::string("sweep.") + key, [&](const RawValue &rv) {
      const auto v = b.numbers(std::string("sweep.") + key, rv, 3);
      g.start_deg = v[0];
      g.stop_deg = v[1];
      g.step_deg = v[2];
    });
  };
  grid("azimuth", cfg.sweep.azimuth);
  grid("elevation", cfg.sweep.elevation);
  b.with("sweep.hold_azimuth_deg", [&](const RawValue &rv) {
    cfg.sweep.hold_azimuth_deg = b.number("sweep.hold_azimuth_deg", rv);
  });
  b.with("sweep.hold_elevation_deg", [&](const RawValue &rv) {
    cfg.sweep.hold_elevation_deg = b.number("sweep.hold_elevation_deg", rv);
  });
  b.with("sweep.powers", [&](const RawValue &rv) {
    cfg.sweep.powers_dbm = b.numbers("sweep.powers", rv);
  });

  b.finish();
  return cfg;
}

LoadedConfig load_config_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config_text(buf.str(), path);
}

std::string canonical_json(const LoadedConfig &config) {
  const ScenarioConfig &sc = config.scenario;
  json j;
  j["environment"] =
      sc.environment == Environment::Indoor ? "indoor" : "outdoor";
  j["frequency_ghz"] = sc.frequency_ghz;
  j["seed"] = sc.master_seed;
  j["realizations"] = sc.realizations;
  j["noise_dbm"] = sc.noise_dbm;
  j["tx_power_dbm"] = sc.tx_power_dbm;

  j["layout"]["tx"] = {sc.layout.tx_pos.x(), sc.layout.tx_pos.y(),
                       sc.layout.tx_pos.z()};
  j["layout"]["rx"] = {sc.layout.rx_pos.x(), sc.layout.rx_pos.y(),
                       sc.layout.rx_pos.z()};
  j["layout"]["ris"] = {sc.layout.ris_pos.x(), sc.layout.ris_pos.y(),
                        sc.layout.ris_pos.z()};
  j["layout"]["direct_blocked"] = sc.layout.direct_link_blocked;

  j["bs_array"] = array_to_json(sc.bs_array);
  j["user_array"] = array_to_json(sc.user_array);
  j["ris_array"] = array_to_json(sc.ris_array);

  j["los"]["d1_m"] = sc.los.d1_m;
  j["los"]["d2_m"] = sc.los.d2_m;
  j["los"]["override"] = sc.los.force == LosParams::Override::None
                             ? "none"
                             : (sc.los.force == LosParams::Override::ForceLos
                                    ? "los"
                                    : "nlos");

  j["path_loss"]["a_los"] = sc.path_loss.a_los;
  j["path_loss"]["n_los"] = sc.path_loss.n_los;
  j["path_loss"]["sigma_los_db"] = sc.path_loss.sigma_los_db;
  j["path_loss"]["a_nlos"] = sc.path_loss.a_nlos;
  j["path_loss"]["n_nlos"] = sc.path_loss.n_nlos;
  j["path_loss"]["sigma_nlos_db"] = sc.path_loss.sigma_nlos_db;
  j["path_loss"]["shadowing"] = sc.path_loss.shadowing_enabled;

  j["clusters"]["mean_count"] = sc.clusters.mean_cluster_count;
  j["clusters"]["subrays"] = sc.clusters.subrays_per_cluster;
  j["clusters"]["angular_spread_deg"] = sc.clusters.angular_spread_deg;
  j["clusters"]["center_range_deg"] = sc.clusters.center_range_deg;
  j["clusters"]["subray_clip_sigmas"] = sc.clusters.subray_clip_sigmas;
  j["clusters"]["ricean_k_db"] = number_or_inf(sc.clusters.ricean_k_db);
  if (sc.clusters.shadow_sigma_db)
    j["clusters"]["shadow_sigma_db"] = *sc.clusters.shadow_sigma_db;

  j["phases"]["strategy"] =
      sc.phases.strategy == PhaseStrategy::DominantPair
          ? "dominant_pair"
          : (sc.phases.strategy == PhaseStrategy::Random ? "random" : "zero");
  j["phases"]["reoptimize_per_rotation"] = sc.phases.reoptimize_per_rotation;
  j["phases"]["oracle_bits"] = sc.phases.oracle_bits;

  const SweepSpec &sw = config.sweep;
  j["sweep"]["azimuth"] = {sw.azimuth.start_deg, sw.azimuth.stop_deg,
                           sw.azimuth.step_deg};
  j["sweep"]["elevation"] = {sw.elevation.start_deg, sw.elevation.stop_deg,
                             sw.elevation.step_deg};
  j["sweep"]["hold_azimuth_deg"] = sw.hold_azimuth_deg;
  j["sweep"]["hold_elevation_deg"] = sw.hold_elevation_deg;
  j["sweep"]["powers"] = sw.powers_dbm;

  return j.dump();
}

std::string config_digest(const LoadedConfig &config) {
  const std::string canon = canonical_json(config);
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

} // namespace risorient
