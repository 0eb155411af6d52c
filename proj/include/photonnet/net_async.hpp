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

// ---- Single-chip switching (Fig. 8 semantics) ------------------------------------

struct ChipInputs {
  std::optional<size_t> top;
  std::optional<size_t> middle;
  std::optional<size_t> bottom;
};

struct ChipRouting {
  std::optional<size_t> to_cavity;
  PhotonRole role = PhotonRole::Center;  // valid when to_cavity is set
  bool hadamard_wrap = false;
  std::vector<size_t> bypassed;
};

/// Routes the photons present at one chip under one switch setting. Legal
/// occupancies are a single middon photon at the middle input or photons at
/// the top and/or bottom inputs; the staggered sources never produce both at
/// once. Cavity-bound settings take exactly the input their role names and
/// bypass the rest.
inline ChipRouting chip_switch(AsyncSetting setting, const ChipInputs& in) {
  int present = (in.top ? 1 : 0) + (in.middle ? 1 : 0) + (in.bottom ? 1 : 0);
  if (present == 3) throw std::invalid_argument("three simultaneous chip inputs");
  if (in.middle && (in.top || in.bottom))
    throw std::invalid_argument("ambiguous chip occupancy: middle with top/bottom");

  ChipRouting out;
  auto bypass_all = [&]() {
    if (in.top) out.bypassed.push_back(*in.top);
    if (in.middle) out.bypassed.push_back(*in.middle);
    if (in.bottom) out.bypassed.push_back(*in.bottom);
  };
  if (!cavity_bound(setting)) {
    bypass_all();
    return out;
  }

  PhotonRole role = setting_role(setting);
  std::optional<size_t> selected;
  switch (role) {
    case PhotonRole::Top: selected = in.top; break;
    case PhotonRole::Bottom: selected = in.bottom; break;
    default: selected = in.middle; break;  // Right, Center, Left take the middle input
  }
  if (in.top && selected != in.top) out.bypassed.push_back(*in.top);
  if (in.middle && selected != in.middle) out.bypassed.push_back(*in.middle);
  if (in.bottom && selected != in.bottom) out.bypassed.push_back(*in.bottom);
  out.to_cavity = selected;
  out.role = role;
  out.hadamard_wrap = selected && basis_rotation(role);
  return out;
}

// ---- Network run ------------------------------------------------------------------

struct AsyncRunConfig {
  int rows = 5;
  int64_t duration = 40;   // emission horizon in (unscaled) delta_t ticks
  int64_t slowdown = 1;
  uint64_t seed = 0;
  ConsumeMode consume = ConsumeMode::X;
  bool keep_trace = true;
  RoutingTable table = RoutingTable::standard();
};

/// The asynchronous five-column network. Chips are centered on every row
/// (plus one edge chip above and below the lattice) in each of the five
/// network columns; A and B chips alternate down the rows, phase-offset so
/// one kind interacts while the other is read out. Photons are never delayed
/// outside cavities: a photon emitted at e is caught by exactly one chip per
/// column at ticks e, e+1, ..., e+4 and exits after exactly 5 delta_t.
///
/// Null catches - windows whose center photon was never emitted (edge chips,
/// stream start-up and drain) - still delay the photon for delta_t but apply
/// no gate: the switch runs from the table, the atom is simply never
/// initialized for a window whose center does not exist.
class AsyncNetwork {
 public:
  explicit AsyncNetwork(const AsyncRunConfig& cfg) : cfg_(cfg) {
    if (cfg.rows < 2) throw std::invalid_argument("the rhombus lattice needs >= 2 rows");
    if (cfg.duration < 20) throw std::invalid_argument("duration must be >= 20 delta_t");
    if (cfg.slowdown < 1) throw std::invalid_argument("slowdown multiplier must be >= 1");
    cfg_.table.validate();
  }

  NetworkOutput run() {
    const int rows = cfg_.rows;
    const int cols = static_cast<int>(cfg_.duration / 2);
    const int64_t m = cfg_.slowdown;
    const size_t n_photons = static_cast<size_t>(rows) * cols;
    const size_t n_qubits = n_photons + 5 * static_cast<size_t>(rows);

    NetworkOutput out;
    SimResult& res = out.result;
    res.network = "async";
    res.seed = cfg_.seed;
    res.config_echo = {{"rows", std::to_string(rows)},
                       {"duration", std::to_string(cfg_.duration)},
                       {"columns", std::to_string(cols)},
                       {"slowdown", std::to_string(m)},
                       {"consume", consume_name(cfg_.consume)}};
    out.photons.resize(n_photons);

    auto photon_id = [&](int r, int c) { return static_cast<size_t>(r) * cols + c; };
    // Adjacent rows are staggered by delta_t: odd rows emit on even ticks,
    // even rows one tick later. This fixes the rhombus handedness (the first
    // row pair bonds across the diagonal).
    auto emit_tick = [&](int r, int c) {
      return (2 * static_cast<int64_t>(c) + ((r + 1) % 2)) * m;
    };
    auto chip_id = [&](int k, int j) {
      return static_cast<int64_t>(k - 1) * (rows + 2) + (j + 1);
    };
    auto chip_kind = [&](int k, int j) { return ((j + k) % 2 == 0) ? ChipKind::A : ChipKind::B; };

    // ---- Pass 1: route every photon through the switched network. ----
    struct Catch {
      size_t photon;
      int col;          // network column 1..5
      int chip_row;     // -1..rows
      PhotonRole role;  // from the setting letter
      int64_t tick;
      int64_t step;     // 1-based table step
    };
    std::vector<Catch> catches;
    std::map<std::pair<int64_t, int64_t>, size_t> cavity_busy;  // (chip, tick) -> photon

    for (int r = 0; r < rows; r++) {
      for (int c = 0; c < cols; c++) {
        size_t q = photon_id(r, c);
        int64_t t = emit_tick(r, c);
        out.photons[q].emit_tick = t;
        int col = 1;
        while (col <= 5) {
          int64_t step = t / m + 1;
          std::vector<std::pair<int, PhotonRole>> candidates;  // (chip_row, role)
          AsyncSetting mid = cfg_.table.setting(col, chip_kind(col, r), step);
          if (mid == AsyncSetting::Right || mid == AsyncSetting::Center ||
              mid == AsyncSetting::Left)
            candidates.emplace_back(r, setting_role(mid));
          if (r + 1 <= rows &&
              cfg_.table.setting(col, chip_kind(col, r + 1), step) == AsyncSetting::Top)
            candidates.emplace_back(r + 1, PhotonRole::Top);
          if (r - 1 >= -1 &&
              cfg_.table.setting(col, chip_kind(col, r - 1), step) == AsyncSetting::Bottom)
            candidates.emplace_back(r - 1, PhotonRole::Bottom);

          if (candidates.size() > 1)
            throw SimAbort("routing collision: several switches demand photon " +
                               std::to_string(q) + " at tick " + std::to_string(t),
                           res.trace);
          if (candidates.empty()) {
            col++;  // bypass, no delay
            continue;
          }
          auto [j, role] = candidates[0];
          auto key = std::make_pair(chip_id(col, j), t);
          auto [it, fresh] = cavity_busy.emplace(key, q);
          if (!fresh)
            throw SimAbort("cavity double occupancy at chip " + std::to_string(key.first) +
                               " tick " + std::to_string(t),
                           res.trace);
          catches.push_back({q, col, j, role, t, step});
          t += m;
          col++;
        }
        out.photons[q].exit_tick = t;
      }
    }

    // ---- Group catches into chip windows; a window is active iff it has a center. ----
    struct Window {
      int col = 0;
      int chip_row = 0;
      int64_t start_step = 0;  // 1-based absolute step of the 5-step window
      std::vector<size_t> catch_idx;
      bool active = false;
      size_t center_photon = 0;
      Site center;
    };
    std::map<std::pair<int64_t, int64_t>, Window> windows;  // (chip, window start step)
    for (size_t ci = 0; ci < catches.size(); ci++) {
      const Catch& cat = catches[ci];
      ChipKind kind = chip_kind(cat.col, cat.chip_row);
      int64_t run_start = window_phase(cat.col, kind);  // 1..10 within the period
      int64_t pos = ((cat.step - run_start) % 10 + 10) % 10;
      if (pos > 4)
        throw SimAbort("catch outside its chip's 5-step window", res.trace);
      int64_t w_start = cat.step - pos;
      auto key = std::make_pair(chip_id(cat.col, cat.chip_row), w_start);
      Window& w = windows[key];
      w.col = cat.col;
      w.chip_row = cat.chip_row;
      w.start_step = w_start;
      w.catch_idx.push_back(ci);
      if (cat.role == PhotonRole::Center) {
        w.active = true;
        w.center_photon = cat.photon;
        w.center = Site{static_cast<int>(cat.photon % cols),
                        static_cast<int>(cat.photon / cols)};
      }
    }

    // ---- Pass 2: execute the plan chronologically on the engine. ----
    StabilizerTableau engine(n_qubits);
    PauliFrame frame(n_qubits);
    Rng rng(cfg_.seed);
    std::vector<ModuleState> modules;
    for (size_t i = 0; i < 5 * static_cast<size_t>(rows); i++)
      modules.emplace_back(n_photons + i);
    auto module_of = [&](int k, int j) -> ModuleState& {
      if (j < 0 || j >= rows) throw std::logic_error("edge chips carry no atom");
      return modules[static_cast<size_t>(k - 1) * rows + j];
    };

    struct Op {
      int64_t tick;
      EventKind kind;
      int64_t chip;
      int64_t photon;
      const Window* window;
      const Catch* cat;
      bool operator<(const Op& o) const {
        if (tick != o.tick) return tick < o.tick;
        if (kind != o.kind) return kind < o.kind;
        if (chip != o.chip) return chip < o.chip;
        return photon < o.photon;
      }
    };
    std::vector<Op> ops;
    for (int r = 0; r < rows; r++)
      for (int c = 0; c < cols; c++)
        ops.push_back({emit_tick(r, c), EventKind::Emit,
                       -1, static_cast<int64_t>(photon_id(r, c)), nullptr, nullptr});
    for (const auto& [key, w] : windows) {
      if (!w.active) continue;
      ops.push_back({(w.start_step - 1) * m, EventKind::AtomInit, key.first, -1, &w, nullptr});
      ops.push_back({(w.start_step - 1 + 10) * m, EventKind::AtomReadout, key.first, -1, &w,
                     nullptr});
    }
    for (const auto& [key, w] : windows)
      for (size_t ci : w.catch_idx)
        ops.push_back({catches[ci].tick, EventKind::CavityIn, key.first,
                       static_cast<int64_t>(catches[ci].photon), &w, &catches[ci]});
    if (cfg_.consume != ConsumeMode::None) {
      for (int r = 0; r < rows; r++)
        for (int c = 0; c < cols; c++)
          ops.push_back({out.photons[photon_id(r, c)].exit_tick, EventKind::Detect, -1,
                         static_cast<int64_t>(photon_id(r, c)), nullptr, nullptr});
    }
    std::sort(ops.begin(), ops.end());

    LatticeSpec lat{cols, rows, LatticeKind::Rhombus};
    std::set<size_t> consumed;
    int64_t measurement_id = 0;
    for (const Op& op : ops) {
      switch (op.kind) {
        case EventKind::Emit: {
          engine.h(static_cast<size_t>(op.photon));
          res.photons_emitted++;
          res.trace.push_back({op.tick, EventKind::Emit, op.photon, -1, ""});
          break;
        }
        case EventKind::AtomInit: {
          module_of(op.window->col, op.window->chip_row).begin_cycle(engine, rng, op.tick);
          res.trace.push_back({op.tick, EventKind::AtomInit, -1, op.chip, ""});
          break;
        }
        case EventKind::CavityIn: {
          res.trace.push_back({op.tick, EventKind::ArriveAtChip, op.photon, op.chip, ""});
          res.trace.push_back({op.tick, EventKind::CavityIn, op.photon, op.chip,
                               op.window->active ? std::string(1, role_char(op.cat->role))
                                                 : "-"});
          if (op.window->active) {
            module_of(op.window->col, op.window->chip_row)
                .pass(engine, static_cast<size_t>(op.photon), op.cat->role, op.tick);
            out.photons[static_cast<size_t>(op.photon)].roles.push_back(
                role_char(op.cat->role));
          }
          res.trace.push_back({op.tick + m, EventKind::CavityOut, op.photon, op.chip, ""});
          break;
        }
        case EventKind::AtomReadout: {
          ParityOutcome po = module_of(op.window->col, op.window->chip_row)
                                 .readout(engine, frame, rng, op.tick, measurement_id++);
          res.trace.push_back({op.tick, EventKind::AtomReadout, -1, op.chip,
                               po.outcome > 0 ? "+1" : "-1"});
          if (po.recovery_pushed) {
            res.trace.push_back({op.tick, EventKind::FrameUpdate,
                                 static_cast<int64_t>(frame.log().back().qubit), op.chip,
                                 std::string(1, pauli_char(frame.log().back().recovery))});
            res.frame_updates++;
          }
          res.atom_window_histogram[ModuleState::atom_window(po)]++;
          res.module_cycles++;
          WindowRecord rec;
          rec.chip = op.chip;
          rec.center = op.window->center;
          rec.active = true;
          rec.init_tick = po.init_tick;
          rec.readout_tick = po.readout_tick;
          rec.outcome = po.outcome;
          rec.op = po.op;
          out.windows.push_back(std::move(rec));
          break;
        }
        case EventKind::Detect: {
          size_t q = static_cast<size_t>(op.photon);
          Site s{static_cast<int>(q % cols), static_cast<int>(q / cols)};
          std::vector<size_t> neighbors;
          for (Site nb : lat.neighbors(s)) {
            size_t nq = photon_id(nb.j, nb.i);
            if (!consumed.count(nq)) neighbors.push_back(nq);
          }
          DetectBasis basis = cfg_.consume == ConsumeMode::X ? DetectBasis::X : DetectBasis::Z;
          DetectResult d = detect(engine, frame, q, basis, neighbors, rng, measurement_id++);
          consumed.insert(q);
          res.photons_consumed++;
          res.trace.push_back({op.tick, EventKind::Detect, op.photon, -1,
                               std::to_string(d.bit)});
          break;
        }
        default:
          break;
      }
    }

    res.photons_exited = res.photons_emitted;
    res.photons_in_flight = 0;

    // ---- Reports. ----
    int64_t last_tick = 0;
    for (const auto& p : out.photons) {
      res.latency_histogram[p.exit_tick - p.emit_tick]++;
      last_tick = std::max(last_tick, p.exit_tick);
    }
    for (const auto& w : out.windows) last_tick = std::max(last_tick, w.readout_tick);
    res.total_ticks = last_tick;

    for (int r = 0; r < rows; r++)
      for (int c = 0; c < cols; c++) {
        std::string want = "C";
        Site s{c, r};
        for (Site nb : lat.neighbors(s)) {
          if (nb.j == s.j) want += (s.i == nb.i + 1) ? 'L' : 'R';
          else want += (s.j == nb.j - 1) ? 'T' : 'B';
        }
        std::string got = out.photons[photon_id(r, c)].roles;
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got) res.role_coverage_ok = false;
      }

    // Throughput: a column is delivered when its last photon leaves the network.
    std::vector<int64_t> completion(static_cast<size_t>(cols), 0);
    for (int r = 0; r < rows; r++)
      for (int c = 0; c < cols; c++)
        completion[static_cast<size_t>(c)] =
            std::max(completion[static_cast<size_t>(c)],
                     out.photons[photon_id(r, c)].exit_tick);
    res.throughput.columns_completed = cols;
    res.throughput.warmup_cycles = completion[0] / (2 * m);
    res.throughput.steady_rate_uniform = true;
    for (int c = 1; c < cols; c++) {
      int64_t gap = completion[static_cast<size_t>(c)] - completion[static_cast<size_t>(c - 1)];
      if (res.throughput.steady_ticks_per_column == 0)
        res.throughput.steady_ticks_per_column = gap;
      else if (gap != res.throughput.steady_ticks_per_column)
        res.throughput.steady_rate_uniform = false;
    }

    if (cfg_.consume == ConsumeMode::None) {
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

  /// First step (1..10) of the chip type's contiguous cavity-bound run.
  int64_t window_phase(int col, ChipKind kind) const {
    for (int s = 1; s <= RoutingTable::kPeriod; s++) {
      int prev = s == 1 ? RoutingTable::kPeriod : s - 1;
      if (cavity_bound(cfg_.table.setting(col, kind, s)) &&
          !cavity_bound(cfg_.table.setting(col, kind, prev)))
        return s;
    }
    throw std::logic_error("routing table row has no cavity-bound run");
  }

 private:
  AsyncRunConfig cfg_;
};

inline NetworkOutput run_async(const AsyncRunConfig& cfg) { return AsyncNetwork(cfg).run(); }

}  // namespace photonnet
