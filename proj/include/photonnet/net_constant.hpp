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

#include "photonnet/events.hpp"
#include "photonnet/lattice.hpp"
#include "photonnet/module.hpp"
#include "photonnet/sim_result.hpp"

namespace photonnet {

/// Five-time-step parallel preparation: sites colored step(i,j) =
/// ((i + 2j) mod 5) + 1, which places same-step centers at L1 distance >= 3
/// so their measurement supports never overlap.
struct StepSchedule {
  LatticeSpec spec;
  std::vector<int> step_of_site;       // site index -> step, 1-based
  std::array<int, 5> modules_per_step{};

  int step_count() const {
    int n = 0;
    for (int c = 0; c < 5; c++)
      if (modules_per_step[c] > 0) n++;
    return n;
  }

  /// Brute-force conflict check: within a step, the supports (site plus
  /// lattice neighbors) of all scheduled generators must be pairwise disjoint.
  bool conflict_free() const {
    for (int s = 1; s <= 5; s++) {
      std::set<int> support;
      for (int idx = 0; idx < spec.sites(); idx++) {
        if (step_of_site[idx] != s) continue;
        std::vector<int> own{idx};
        for (Site nb : spec.neighbors(spec.site(idx))) own.push_back(spec.index(nb));
        for (int q : own)
          if (!support.insert(q).second) return false;
      }
    }
    return true;
  }
};

inline StepSchedule constant_schedule(const LatticeSpec& spec) {
  spec.validate();
  if (spec.kind != LatticeKind::Square)
    throw std::invalid_argument("the constant-time scheme schedules square lattices");
  StepSchedule sched;
  sched.spec = spec;
  sched.step_of_site.resize(spec.sites());
  for (int idx = 0; idx < spec.sites(); idx++) {
    Site s = spec.site(idx);
    int step = ((s.i + 2 * s.j) % 5) + 1;
    sched.step_of_site[idx] = step;
    sched.modules_per_step[step - 1]++;
  }
  return sched;
}

struct ConstantRunConfig {
  LatticeSpec spec{1, 1, LatticeKind::Square};
  int64_t dtp_ticks = 1;
  int64_t slowdown = 1;
  uint64_t seed = 0;
  bool keep_trace = true;
};

/// Executes the schedule on the stabilizer engine: every step measures its
/// sites' cluster generators via full module cycles on fresh modules, and the
/// result is verified against the square-lattice target. Simulated wall time
/// is 5 * (5 delta_t + delta_t') regardless of lattice size.
inline SimResult run_constant(const ConstantRunConfig& cfg) {
  cfg.spec.validate();
  if (cfg.slowdown < 1) throw std::invalid_argument("slowdown multiplier must be >= 1");
  StepSchedule sched = constant_schedule(cfg.spec);

  const int n_sites = cfg.spec.sites();
  const size_t n_qubits = static_cast<size_t>(2 * n_sites);  // photons + one fresh atom each
  const int64_t step_span = (5 + cfg.dtp_ticks) * cfg.slowdown;

  StabilizerTableau engine(n_qubits);
  PauliFrame frame(n_qubits);
  Rng rng(cfg.seed);

  SimResult res;
  res.network = "constant";
  res.seed = cfg.seed;

  for (int idx = 0; idx < n_sites; idx++) {
    engine.h(static_cast<size_t>(idx));  // sources emit |+>
    res.trace.push_back({0, EventKind::Emit, idx, -1, ""});
  }
  res.photons_emitted = n_sites;

  std::vector<ParityOutcome> cycles;
  int64_t measurement_id = 0;
  for (int step = 1; step <= 5; step++) {
    int64_t t0 = static_cast<int64_t>(step - 1) * step_span;
    for (int idx = 0; idx < n_sites; idx++) {
      if (sched.step_of_site[idx] != step) continue;
      Site s = cfg.spec.site(idx);

      std::vector<size_t> photons;
      std::vector<PhotonRole> roles;
      auto add = [&](Site c, PhotonRole r) {
        if (cfg.spec.contains(c)) {
          photons.push_back(static_cast<size_t>(cfg.spec.index(c)));
          roles.push_back(r);
        }
      };
      add({s.i + 1, s.j}, PhotonRole::Right);
      add({s.i, s.j - 1}, PhotonRole::Top);
      add(s, PhotonRole::Center);
      add({s.i, s.j + 1}, PhotonRole::Bottom);
      add({s.i - 1, s.j}, PhotonRole::Left);

      ModuleState module(static_cast<size_t>(n_sites + idx));
      res.trace.push_back({t0, EventKind::AtomInit, -1, idx, ""});
      ParityOutcome out = module_cycle(engine, module, photons, roles, frame, rng,
                                       t0, cfg.dtp_ticks * cfg.slowdown, measurement_id,
                                       cfg.slowdown);
      for (const auto& p : out.passes) {
        res.trace.push_back({p.tick, EventKind::CavityIn, static_cast<int64_t>(p.photon),
                             idx, std::string(1, role_char(p.role))});
        res.trace.push_back({p.tick + 1, EventKind::CavityOut, static_cast<int64_t>(p.photon),
                             idx, ""});
      }
      res.trace.push_back({out.readout_tick, EventKind::AtomReadout, -1, idx,
                           out.outcome > 0 ? "+1" : "-1"});
      if (out.recovery_pushed) {
        res.trace.push_back({out.readout_tick, EventKind::FrameUpdate,
                             static_cast<int64_t>(frame.log().back().qubit), idx,
                             std::string(1, pauli_char(frame.log().back().recovery))});
        res.frame_updates++;
      }
      res.atom_window_histogram[ModuleState::atom_window(out)]++;
      cycles.push_back(std::move(out));
      measurement_id++;
      res.module_cycles++;
    }
  }

  res.total_ticks = 5 * step_span;
  res.photons_exited = n_sites;  // all photons are available after the last step

  std::vector<size_t> qubit_of_site(static_cast<size_t>(n_sites));
  for (int idx = 0; idx < n_sites; idx++) qubit_of_site[idx] = static_cast<size_t>(idx);
  ClusterTarget target = cluster_stabilizers(cfg.spec, qubit_of_site, n_qubits);
  VerificationReport rep = verify_output(engine, frame, target);
  res.verification.verdict = rep.verdict == Verdict::Pass ? "pass" : "fail";
  res.verification.generators_checked = rep.generators_checked;
  res.verification.sign_fixes = rep.sign_fixes.size();
  for (Site st : rep.mismatched_generators)
    res.verification.mismatched.push_back(site_str(st));

  res.throughput.columns_completed = cfg.spec.width;
  res.throughput.warmup_cycles = 0;
  res.check_consistency();
  std::stable_sort(res.trace.begin(), res.trace.end());
  if (!cfg.keep_trace) res.trace.clear();
  return res;
}

}  // namespace photonnet
