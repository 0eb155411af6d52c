/* Copyright 2026 photonnet authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "photonnet/budget.hpp"
#include "photonnet/net_sync.hpp"

namespace photonnet {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat run configuration shared by the CLI flags and the config file.
struct RunConfig {
  std::string network = "async";  // constant | sync | async
  int rows = 5;
  int columns = 10;       // constant and sync
  int64_t duration = 40;  // async emission horizon in delta_t
  std::string system = "Cs";
  double g = 0;           // optional explicit (g, delta) pair; overrides system
  double delta = 0;
  int64_t dtp_ticks = 1;
  int64_t slowdown = 1;
  uint64_t seed = 0;
  std::string consume = "x";  // x | z | none
  int64_t feedforward_ns = 150;
  std::string routing_table_path;
  std::string report_path;
  std::string trace_path;
  std::string graph_path;
  bool allow_budget_fail = false;

  void validate() const {
    if (network != "constant" && network != "sync" && network != "async")
      throw ConfigError("network must be one of constant|sync|async");
    if (rows < 1) throw ConfigError("rows must be >= 1");
    if (network != "async" && columns < 1) throw ConfigError("columns must be >= 1");
    if (network == "sync" && columns < 5) throw ConfigError("sync runs need columns >= 5");
    if (network == "async" && rows < 2) throw ConfigError("async runs need rows >= 2");
    if (network == "async" && duration < 20) throw ConfigError("async duration must be >= 20");
    if (system != "Cs" && system != "Rb" && system != "NV")
      throw ConfigError("system must be one of Cs|Rb|NV");
    if ((g != 0) != (delta != 0)) throw ConfigError("give both g and delta or neither");
    if (g < 0) throw ConfigError("g must be positive");
    if (dtp_ticks < 0) throw ConfigError("dtp_ticks must be >= 0");
    if (slowdown < 1) throw ConfigError("slowdown must be >= 1");
    if (consume != "x" && consume != "z" && consume != "none")
      throw ConfigError("consume must be one of x|z|none");
    if (feedforward_ns < 0) throw ConfigError("feedforward_ns must be >= 0");
  }

  CavitySystem cavity_system() const {
    if (system == "Cs") return CavitySystem::Cs;
    if (system == "Rb") return CavitySystem::Rb;
    return CavitySystem::NV;
  }

  ConsumeMode consume_mode() const {
    if (consume == "x") return ConsumeMode::X;
    if (consume == "z") return ConsumeMode::Z;
    return ConsumeMode::None;
  }
};

inline const std::set<std::string>& config_keys() {
  static const std::set<std::string> keys = {
      "network", "rows", "columns", "duration", "system", "g", "delta",
      "dtp_ticks", "slowdown", "seed", "consume", "feedforward_ns",
      "routing_table", "report", "trace", "graph", "allow_budget_fail"};
  return keys;
}

/// Parses the flat key = value config format. '#' starts a comment,
/// [section] lines group keys cosmetically, and the key names mirror the
/// RunConfig fields exactly; unknown keys are rejected.
inline std::map<std::string, std::string> parse_config_file(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    lineno++;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') continue;  // section header
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!config_keys().count(key))
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (out.count(key))
      throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    out[key] = value;
  }
  return out;
}

/// Applies config-file values onto a RunConfig. Flags are applied afterwards
/// by the CLI, so flags win over file values.
inline void apply_config_values(RunConfig& cfg,
                                const std::map<std::string, std::string>& kv) {
  auto to_i64 = [](const std::string& k, const std::string& v) {
    try {
      size_t used = 0;
      int64_t x = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (...) {
      throw ConfigError("config key '" + k + "': expected an integer, got '" + v + "'");
    }
  };
  auto to_f64 = [](const std::string& k, const std::string& v) {
    try {
      size_t used = 0;
      double x = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (...) {
      throw ConfigError("config key '" + k + "': expected a number, got '" + v + "'");
    }
  };
  for (const auto& [k, v] : kv) {
    if (k == "network") cfg.network = v;
    else if (k == "rows") cfg.rows = static_cast<int>(to_i64(k, v));
    else if (k == "columns") cfg.columns = static_cast<int>(to_i64(k, v));
    else if (k == "duration") cfg.duration = to_i64(k, v);
    else if (k == "system") cfg.system = v;
    else if (k == "g") cfg.g = to_f64(k, v);
    else if (k == "delta") cfg.delta = to_f64(k, v);
    else if (k == "dtp_ticks") cfg.dtp_ticks = to_i64(k, v);
    else if (k == "slowdown") cfg.slowdown = to_i64(k, v);
    else if (k == "seed") cfg.seed = static_cast<uint64_t>(to_i64(k, v));
    else if (k == "consume") cfg.consume = v;
    else if (k == "feedforward_ns") cfg.feedforward_ns = to_i64(k, v);
    else if (k == "routing_table") cfg.routing_table_path = v;
    else if (k == "report") cfg.report_path = v;
    else if (k == "trace") cfg.trace_path = v;
    else if (k == "graph") cfg.graph_path = v;
    else if (k == "allow_budget_fail") cfg.allow_budget_fail = (v == "true" || v == "1");
  }
}

}  // namespace photonnet
