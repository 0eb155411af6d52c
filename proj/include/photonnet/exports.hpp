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

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "photonnet/lattice.hpp"
#include "photonnet/sim_result.hpp"

namespace photonnet {

/// Structured report; field order is fixed so identical (config, seed) runs
/// export byte-identical documents.
inline nlohmann::ordered_json report_json(const SimResult& res) {
  nlohmann::ordered_json j;
  j["network"] = res.network;
  j["seed"] = res.seed;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : res.config_echo) j["config"][k] = v;

  j["verification"]["verdict"] = res.verification.verdict;
  j["verification"]["generators_checked"] = res.verification.generators_checked;
  j["verification"]["sign_fixes"] = res.verification.sign_fixes;
  j["verification"]["mismatched"] = res.verification.mismatched;

  j["throughput"]["columns_completed"] = res.throughput.columns_completed;
  j["throughput"]["warmup_cycles"] = res.throughput.warmup_cycles;
  j["throughput"]["steady_ticks_per_column"] = res.throughput.steady_ticks_per_column;
  j["throughput"]["steady_rate_uniform"] = res.throughput.steady_rate_uniform;

  auto hist = [](const std::map<int64_t, int64_t>& h) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [ticks, count] : h) o[std::to_string(ticks)] = count;
    return o;
  };
  j["latency_ticks"] = hist(res.latency_histogram);
  j["atom_window_ticks"] = hist(res.atom_window_histogram);

  j["budget"]["system"] = res.budget.system;
  j["budget"]["delta_t_ns"] = res.budget.delta_t_ns;
  j["budget"]["slowdown"] = res.budget.slowdown;
  j["budget"]["interval_ns"] = res.budget.interval_ns;
  j["budget"]["feedforward_ns"] = res.budget.feedforward_ns;
  j["budget"]["ok"] = res.budget.ok;
  j["budget"]["min_slowdown"] = res.budget.min_slowdown;

  j["counts"]["events"] = res.event_count();
  j["counts"]["photons_emitted"] = res.photons_emitted;
  j["counts"]["photons_exited"] = res.photons_exited;
  j["counts"]["photons_consumed"] = res.photons_consumed;
  j["counts"]["photons_in_flight"] = res.photons_in_flight;
  j["counts"]["module_cycles"] = res.module_cycles;
  j["counts"]["frame_updates"] = res.frame_updates;

  j["role_coverage_ok"] = res.role_coverage_ok;
  j["total_ticks"] = res.total_ticks;
  return j;
}

inline std::string report_text(const SimResult& res) { return report_json(res).dump(2) + "\n"; }

/// Event trace, one row per event: time,kind,photon,chip,detail.
inline std::string trace_csv(const SimResult& res) {
  std::ostringstream out;
  out << "time,kind,photon,chip,detail\n";
  for (const auto& e : res.trace) {
    out << e.time << ',' << event_kind_name(e.kind) << ',';
    if (e.photon >= 0) out << e.photon;
    out << ',';
    if (e.chip >= 0) out << e.chip;
    out << ',' << e.detail << '\n';
  }
  return out.str();
}

/// Cluster graph in DOT form, nodes labeled by lattice coordinates.
inline std::string graph_dot(const LatticeSpec& spec) {
  std::ostringstream out;
  out << "graph cluster {\n";
  for (int idx = 0; idx < spec.sites(); idx++) {
    Site s = spec.site(idx);
    out << "  \"" << s.i << ',' << s.j << "\";\n";
  }
  for (const auto& [a, b] : spec.edges())
    out << "  \"" << a.i << ',' << a.j << "\" -- \"" << b.i << ',' << b.j << "\";\n";
  out << "}\n";
  return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace photonnet
