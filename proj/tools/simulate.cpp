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

#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "photonnet/exports.hpp"
#include "photonnet/module.hpp"
#include "photonnet/net_async.hpp"
#include "photonnet/net_constant.hpp"
#include "photonnet/net_sync.hpp"
#include "photonnet/run_config.hpp"

namespace {

using namespace photonnet;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

BudgetReport budget_for(const RunConfig& cfg) {
  if (cfg.g != 0) {
    double t_int_s = interaction_time(cfg.g, cfg.delta);
    auto ns = static_cast<int64_t>(t_int_s * 1e9 + 0.5);
    TimingBudget custom{"custom", std::max<int64_t>(ns, 1), cfg.feedforward_ns};
    return check_budget(custom, cfg.slowdown);
  }
  return check_budget(cfg.cavity_system(), cfg.feedforward_ns, cfg.slowdown);
}

SimResult run_one(const RunConfig& cfg, uint64_t seed, bool keep_trace) {
  SimResult res;
  if (cfg.network == "constant") {
    ConstantRunConfig c;
    c.spec = LatticeSpec{cfg.columns, cfg.rows, LatticeKind::Square};
    c.dtp_ticks = cfg.dtp_ticks;
    c.slowdown = cfg.slowdown;
    c.seed = seed;
    c.keep_trace = keep_trace;
    res = run_constant(c);
    res.config_echo = {{"rows", std::to_string(cfg.rows)},
                       {"columns", std::to_string(cfg.columns)},
                       {"dtp_ticks", std::to_string(cfg.dtp_ticks)},
                       {"slowdown", std::to_string(cfg.slowdown)}};
  } else if (cfg.network == "sync") {
    SyncRunConfig c;
    c.rows = cfg.rows;
    c.columns = cfg.columns;
    c.dtp_ticks = cfg.dtp_ticks;
    c.slowdown = cfg.slowdown;
    c.seed = seed;
    c.consume = cfg.consume_mode();
    c.keep_trace = keep_trace;
    res = run_sync(c).result;
  } else {
    AsyncRunConfig c;
    c.rows = cfg.rows;
    c.duration = cfg.duration;
    c.slowdown = cfg.slowdown;
    c.seed = seed;
    c.consume = cfg.consume_mode();
    c.keep_trace = keep_trace;
    if (!cfg.routing_table_path.empty())
      c.table = RoutingTable::parse(read_file(cfg.routing_table_path));
    res = run_async(c).result;
  }
  res.config_echo["network"] = cfg.network;
  res.config_echo["seed"] = std::to_string(seed);
  res.config_echo["system"] = cfg.g != 0 ? "custom" : cfg.system;
  res.config_echo["feedforward_ns"] = std::to_string(cfg.feedforward_ns);
  res.budget = budget_for(cfg);
  return res;
}

int finish(const RunConfig& cfg, const SimResult& res) {
  std::cout << "network=" << res.network << " seed=" << res.seed
            << " verification=" << res.verification.verdict
            << " columns=" << res.throughput.columns_completed
            << " rate_ticks_per_column=" << res.throughput.steady_ticks_per_column
            << " budget=" << (res.budget.ok ? "ok" : "violated") << "\n";
  if (!cfg.report_path.empty()) write_file(cfg.report_path, report_text(res));
  if (!cfg.trace_path.empty()) write_file(cfg.trace_path, trace_csv(res));
  if (!cfg.graph_path.empty()) {
    LatticeSpec spec = cfg.network == "async"
                           ? LatticeSpec{static_cast<int>(cfg.duration / 2), cfg.rows,
                                         LatticeKind::Rhombus}
                           : LatticeSpec{cfg.columns, cfg.rows, LatticeKind::Square};
    write_file(cfg.graph_path, graph_dot(spec));
  }

  if (res.verification.failed()) {
    std::cerr << "verification failed; mismatched generators:\n";
    for (const auto& s : res.verification.mismatched) std::cerr << "  " << s << "\n";
    return 1;
  }
  if (!res.budget.ok && !cfg.allow_budget_fail) {
    std::cerr << "feedforward budget violated: interval " << res.budget.interval_ns
              << " ns < feedforward " << res.budget.feedforward_ns
              << " ns (minimal slowdown " << res.budget.min_slowdown << ")\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Stabilizer-level simulator for deterministic optical cluster-state\n"
      "preparation with photonic modules: constant-time, synchronous, and\n"
      "asynchronous preparation networks with per-run output verification."};
  app.name("simulate");

  RunConfig cfg;
  std::string config_path, seeds_range;
  app.add_option("--config", config_path, "Config file (key = value, flags win)");
  auto* o_network = app.add_option("--network", cfg.network, "Network: constant|sync|async");
  auto* o_rows = app.add_option("--rows", cfg.rows, "Cluster rows");
  auto* o_columns = app.add_option("--columns", cfg.columns,
                                   "Cluster columns (constant and sync networks)");
  auto* o_duration = app.add_option("--duration", cfg.duration,
                                    "Emission horizon in delta_t (async network)");
  auto* o_system = app.add_option("--system", cfg.system, "Atom-cavity system: Cs|Rb|NV");
  auto* o_g = app.add_option("--g", cfg.g, "Explicit atom-cavity coupling (with --delta)");
  auto* o_delta = app.add_option("--delta", cfg.delta, "Explicit detuning (with --g)");
  auto* o_dtp = app.add_option("--dtp-ticks", cfg.dtp_ticks,
                               "Atomic readout interval delta_t' in ticks");
  auto* o_slowdown = app.add_option("--slowdown", cfg.slowdown,
                                    "Rate-slowdown multiplier (integer >= 1)");
  auto* o_seed = app.add_option("--seed", cfg.seed, "PRNG seed");
  app.add_option("--seeds", seeds_range, "Seed sweep A..B (inclusive), merged by seed");
  auto* o_consume = app.add_option("--consume", cfg.consume,
                                   "Detector mode for exiting photons: x|z|none "
                                   "(none keeps photons for end-of-run verification)");
  auto* o_ff = app.add_option("--feedforward-ns", cfg.feedforward_ns,
                              "Detector + feedforward latency in ns");
  auto* o_table = app.add_option("--routing-table", cfg.routing_table_path,
                                 "Override routing table file (async network)");
  auto* o_report = app.add_option("--report", cfg.report_path, "Write JSON report here");
  auto* o_trace = app.add_option("--trace", cfg.trace_path, "Write CSV event trace here");
  auto* o_graph = app.add_option("--graph", cfg.graph_path, "Write DOT cluster graph here");
  auto* o_allow = app.add_flag("--allow-budget-fail", cfg.allow_budget_fail,
                               "Exit 0 even when the feedforward budget is violated");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      RunConfig file_cfg;  // defaults
      apply_config_values(file_cfg, parse_config_file(read_file(config_path)));
      // Flags win: only fields the user left untouched take file values.
      if (!*o_network) cfg.network = file_cfg.network;
      if (!*o_rows) cfg.rows = file_cfg.rows;
      if (!*o_columns) cfg.columns = file_cfg.columns;
      if (!*o_duration) cfg.duration = file_cfg.duration;
      if (!*o_system) cfg.system = file_cfg.system;
      if (!*o_g) cfg.g = file_cfg.g;
      if (!*o_delta) cfg.delta = file_cfg.delta;
      if (!*o_dtp) cfg.dtp_ticks = file_cfg.dtp_ticks;
      if (!*o_slowdown) cfg.slowdown = file_cfg.slowdown;
      if (!*o_seed) cfg.seed = file_cfg.seed;
      if (!*o_consume) cfg.consume = file_cfg.consume;
      if (!*o_ff) cfg.feedforward_ns = file_cfg.feedforward_ns;
      if (!*o_table) cfg.routing_table_path = file_cfg.routing_table_path;
      if (!*o_report) cfg.report_path = file_cfg.report_path;
      if (!*o_trace) cfg.trace_path = file_cfg.trace_path;
      if (!*o_graph) cfg.graph_path = file_cfg.graph_path;
      if (!*o_allow) cfg.allow_budget_fail = file_cfg.allow_budget_fail;
    }
    cfg.validate();

    if (seeds_range.empty())
      return finish(cfg, run_one(cfg, cfg.seed, true));

    auto sep = seeds_range.find("..");
    if (sep == std::string::npos)
      throw ConfigError("--seeds expects a range like 0..19");
    uint64_t first = std::stoull(seeds_range.substr(0, sep));
    uint64_t last = std::stoull(seeds_range.substr(sep + 2));
    if (last < first) throw ConfigError("--seeds range is empty");

    // Independent runs fan out across workers; results merge in seed order.
    std::vector<std::future<SimResult>> futures;
    for (uint64_t s = first; s <= last; s++)
      futures.push_back(std::async(std::launch::async,
                                   [&cfg, s] { return run_one(cfg, s, false); }));
    nlohmann::ordered_json merged = nlohmann::ordered_json::array();
    int failures = 0;
    bool budget_ok = true;
    for (auto& f : futures) {
      SimResult res = f.get();
      if (res.verification.failed()) failures++;
      budget_ok = budget_ok && res.budget.ok;
      std::cout << "seed=" << res.seed << " verification=" << res.verification.verdict << "\n";
      merged.push_back(report_json(res));
    }
    if (!cfg.report_path.empty()) write_file(cfg.report_path, merged.dump(2) + "\n");
    if (failures > 0) {
      std::cerr << failures << " seed(s) failed verification\n";
      return 1;
    }
    if (!budget_ok && !cfg.allow_budget_fail) {
      std::cerr << "feedforward budget violated\n";
      return 1;
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const SimAbort& e) {
    std::cerr << "simulation aborted: " << e.what() << "\n";
    size_t n = e.trace.size();
    for (size_t i = n > 20 ? n - 20 : 0; i < n; i++) {
      const auto& ev = e.trace[i];
      std::cerr << "  t=" << ev.time << " " << event_kind_name(ev.kind)
                << " photon=" << ev.photon << " chip=" << ev.chip << " " << ev.detail << "\n";
    }
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
