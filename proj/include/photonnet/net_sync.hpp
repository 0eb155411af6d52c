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
#include "photonnet/routing.hpp"
#include "photonnet/sim_result.hpp"

namespace photonnet {

struct SyncRunConfig {
  int rows = 5;
  int columns = 10;
  int64_t dtp_ticks = 1;
  int64_t slowdown = 1;
  uint64_t seed = 0;
  ConsumeMode consume = ConsumeMode::X;
  bool keep_trace = true;
};

/// Synchronous buffered network: one chip per cluster row, operated on the
/// six-setting cycle of the switching table. Chip j's input lines are
/// a = row j-1, b = row j, c = row j+1, d = the feedback loop.
///
/// Within one cycle the chip measures one cluster-state generator; the catch order
/// forced by the table is T (line a), L (line b, the photon's first pass),
/// C and R (line d: the middle-row photon's second and third passes), then
/// B (line c). Chips run phase-staggered bottom-up: chip j measures the
/// center (j, c) during cycle c + (rows-1-j), which makes a column complete
/// every cycle after a warm-up of rows-1 cycles.
///
/// Cold start: the switching table forces each row's first photon through a
/// priming b-pass one cycle before that chip's first valid window. For the
/// bottom chip that priming pass precedes the measurement clock; it appears
/// in the trace at negative ticks and is flagged "preroll".
class SyncNetwork {
 public:
  explicit SyncNetwork(const SyncRunConfig& cfg) : cfg_(cfg) {
    if (cfg.rows < 1) throw std::invalid_argument("rows must be >= 1");
    if (cfg.columns < 5) throw std::invalid_argument("the synchronous run needs >= 5 columns");
    if (cfg.dtp_ticks < 0) throw std::invalid_argument("delta_t' ticks must be >= 0");
    if (cfg.slowdown < 1) throw std::invalid_argument("slowdown multiplier must be >= 1");
  }

  NetworkOutput run() {
    const int rows = cfg_.rows, cols = cfg_.columns;
    const int64_t T = (5 + cfg_.dtp_ticks) * cfg_.slowdown;
    const size_t n_photons = static_cast<size_t>(rows) * cols;
    const size_t n_qubits = n_photons + static_cast<size_t>(rows);

    StabilizerTableau engine(n_qubits);
    PauliFrame frame(n_qubits);
    Rng rng(cfg_.seed);

    NetworkOutput out;
    SimResult& res = out.result;
    res.network = "sync";
    res.seed = cfg_.seed;
    res.config_echo = {{"rows", std::to_string(rows)},
                       {"columns", std::to_string(cols)},
                       {"dtp_ticks", std::to_string(cfg_.dtp_ticks)},
                       {"slowdown", std::to_string(cfg_.slowdown)},
                       {"consume", consume_name(cfg_.consume)}};
    out.photons.resize(n_photons);

    std::vector<ModuleState> modules;
    modules.reserve(rows);
    for (int j = 0; j < rows; j++) modules.emplace_back(n_photons + static_cast<size_t>(j));

    auto phi = [&](int j) { return rows - 1 - j; };
    auto photon_id = [&](int r, int c) { return static_cast<size_t>(r) * cols + c; };
    auto photon_ok = [&](int r, int c) { return r >= 0 && r < rows && c >= 0 && c < cols; };

    // Catch layout of chip j's window with center column c:
    // step -> (photon row, photon col, role).
    struct Slot { int dr, dc; PhotonRole role; };
    static constexpr Slot kSlots[5] = {
        {-1, 0, PhotonRole::Top},     // step 1, line a
        {0, +1, PhotonRole::Left},    // step 2, line b
        {0, 0, PhotonRole::Center},   // step 3, line d
        {0, -1, PhotonRole::Right},   // step 4, line d
        {+1, 0, PhotonRole::Bottom},  // step 5, line c
    };

    std::set<size_t> consumed;
    std::vector<int64_t> column_completion(static_cast<size_t>(cols), INT64_MIN);
    struct Pending { int chip; Site center; bool active; };
    std::vector<Pending> prev_cycle;  // windows awaiting readout at the cycle boundary
    int64_t measurement_id = 0;

    const int64_t cycle_min = -1;
    const int64_t cycle_max = cols + rows - 1;

    for (int64_t n = cycle_min; n <= cycle_max + 1; n++) {
      int64_t tick0 = n * T;

      // Readouts of the previous cycle's windows land exactly on this boundary.
      for (const auto& w : prev_cycle) {
        ModuleState& module = modules[static_cast<size_t>(w.chip)];
        if (!w.active) continue;
        ParityOutcome po = module.readout(engine, frame, rng, tick0, measurement_id++);
        res.trace.push_back({tick0, EventKind::AtomReadout, -1, w.chip,
                             po.outcome > 0 ? "+1" : "-1"});
        if (po.recovery_pushed) {
          res.trace.push_back({tick0, EventKind::FrameUpdate,
                               static_cast<int64_t>(frame.log().back().qubit), w.chip,
                               std::string(1, pauli_char(frame.log().back().recovery))});
          res.frame_updates++;
        }
        res.atom_window_histogram[ModuleState::atom_window(po)]++;
        res.module_cycles++;
        WindowRecord rec;
        rec.chip = w.chip;
        rec.center = w.center;
        rec.active = true;
        rec.init_tick = po.init_tick;
        rec.readout_tick = po.readout_tick;
        rec.outcome = po.outcome;
        rec.op = po.op;
        out.windows.push_back(std::move(rec));
        auto& done = column_completion[static_cast<size_t>(w.center.i)];
        done = std::max(done, tick0);
      }
      prev_cycle.clear();

      // Photons whose last catch was in cycle n-1 leave the network now.
      for (int r = 0; r < rows; r++)
        for (int c = 0; c < cols; c++) {
          if (c + 1 + phi(r) + 1 != n) continue;
          size_t q = photon_id(r, c);
          out.photons[q].exit_tick = tick0;
          res.photons_exited++;
          if (cfg_.consume != ConsumeMode::None) {
            std::vector<size_t> neighbors;
            LatticeSpec lat{cols, rows, LatticeKind::Square};
            for (Site nb : lat.neighbors({c, r})) {
              size_t nq = photon_id(nb.j, nb.i);
              if (!consumed.count(nq)) neighbors.push_back(nq);
            }
            DetectBasis basis = cfg_.consume == ConsumeMode::X ? DetectBasis::X : DetectBasis::Z;
            DetectResult d = detect(engine, frame, q, basis, neighbors, rng, measurement_id++);
            consumed.insert(q);
            res.photons_consumed++;
            res.trace.push_back({tick0, EventKind::Detect, static_cast<int64_t>(q), -1,
                                 std::to_string(d.bit)});
          }
        }

      if (n > cycle_max) break;  // final boundary handled; no further cycle

      // Emissions feeding this cycle.
      for (int r = 0; r < rows; r++) {
        int c = static_cast<int>(n) - (rows - 2 - r);
        if (!photon_ok(r, c)) continue;
        size_t q = photon_id(r, c);
        engine.h(q);  // sources emit |+>
        out.photons[q].emit_tick = tick0;
        res.photons_emitted++;
        res.trace.push_back({tick0, EventKind::Emit, static_cast<int64_t>(q), -1,
                             n < 0 ? "preroll" : ""});
      }

      // Atom initialization for this cycle's valid windows.
      std::vector<Pending> current;
      for (int j = 0; j < rows; j++) {
        int c = static_cast<int>(n - phi(j));
        bool any_catch = false;
        for (const auto& s : kSlots)
          if (photon_ok(j + s.dr, c + s.dc)) { any_catch = true; break; }
        if (!any_catch) continue;
        bool active = (c >= 0 && c < cols);
        if (active) {
          modules[static_cast<size_t>(j)].begin_cycle(engine, rng, tick0);
          res.trace.push_back({tick0, EventKind::AtomInit, -1, j, ""});
        }
        current.push_back({j, Site{c, j}, active});
      }

      // The five delta_t switch settings; chips step in row order per tick.
      for (int step = 1; step <= 5; step++) {
        int64_t t = tick0 + static_cast<int64_t>(step - 1) * cfg_.slowdown;
        for (const auto& w : current) {
          const Slot& s = kSlots[step - 1];
          int pr = w.center.j + s.dr, pc = w.center.i + s.dc;
          if (!photon_ok(pr, pc)) continue;
          size_t q = photon_id(pr, pc);
          res.trace.push_back({t, EventKind::CavityIn, static_cast<int64_t>(q), w.chip,
                               w.active ? std::string(1, role_char(s.role)) : "-"});
          if (w.active) {
            modules[static_cast<size_t>(w.chip)].pass(engine, q, s.role, t);
            out.photons[q].roles.push_back(role_char(s.role));
          }
          res.trace.push_back({t + cfg_.slowdown, EventKind::CavityOut,
                               static_cast<int64_t>(q), w.chip, ""});
        }
      }
      prev_cycle = std::move(current);
    }

    res.total_ticks = (cycle_max + 1) * T;
    res.photons_in_flight = res.photons_emitted - res.photons_exited;

    // Per-(photon, chip) transit delays, cycle-granular: one cycle on lines a
    // and c, three cycles on line b (Fig. 5's buffer design values).
    for (int r = 0; r < rows; r++)
      for (int c = 0; c < cols; c++) {
        if (r + 1 < rows) res.latency_histogram[T]++;  // line-a pass at chip r+1
        res.latency_histogram[3 * T]++;                // line-b passes at chip r
        if (r >= 1) res.latency_histogram[T]++;        // line-c pass at chip r-1
      }

    // Role coverage: every photon sees the boundary-reduced role set.
    for (int r = 0; r < rows; r++)
      for (int c = 0; c < cols; c++) {
        std::string want = "C";
        if (r + 1 < rows) want += 'T';
        if (r >= 1) want += 'B';
        if (c >= 1) want += 'L';
        if (c + 1 < cols) want += 'R';
        std::string got = out.photons[photon_id(r, c)].roles;
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got) res.role_coverage_ok = false;
      }

    // Throughput: a column is prepared when its last stabilizer is read out.
    res.throughput.columns_completed = cols;
    res.throughput.warmup_cycles = column_completion[0] / T - 1;
    res.throughput.steady_rate_uniform = true;
    for (int c = 1; c < cols; c++) {
      int64_t gap = column_completion[static_cast<size_t>(c)] -
                    column_completion[static_cast<size_t>(c - 1)];
      if (res.throughput.steady_ticks_per_column == 0)
        res.throughput.steady_ticks_per_column = gap;
      else if (gap != res.throughput.steady_ticks_per_column)
        res.throughput.steady_rate_uniform = false;
    }

    // End-of-run verification against the square-lattice target.
    if (cfg_.consume == ConsumeMode::None) {
      LatticeSpec lat{cols, rows, LatticeKind::Square};
      std::vector<size_t> qmap(n_photons);
      for (int idx = 0; idx < lat.sites(); idx++) {
        Site s = lat.site(idx);
        qmap[static_cast<size_t>(idx)] = photon_id(s.j, s.i);
      }
      out.target = cluster_stabilizers(lat, qmap, n_qubits);
      VerificationReport rep = verify_output(engine, frame, out.target, consumed);
      res.verification.verdict = rep.verdict == Verdict::Pass ? "pass" : "fail";
      res.verification.generators_checked = rep.generators_checked;
      res.verification.sign_fixes = rep.sign_fixes.size();
      for (Site st : rep.mismatched_generators)
        res.verification.mismatched.push_back(site_str(st));
    } else {
      res.verification.verdict = "skipped (consumed)";
    }

    res.check_consistency();
    std::stable_sort(res.trace.begin(), res.trace.end());
    if (!cfg_.keep_trace) res.trace.clear();
    out.engine = std::move(engine);
    out.frame = std::move(frame);
    return out;
  }

 private:
  SyncRunConfig cfg_;
};

inline NetworkOutput run_sync(const SyncRunConfig& cfg) { return SyncNetwork(cfg).run(); }

}  // namespace photonnet
