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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "photonnet/budget.hpp"
#include "photonnet/events.hpp"
#include "photonnet/lattice.hpp"

namespace photonnet {

/// Raised when the routing machinery detects an impossible configuration
/// (switch collisions, double-occupied cavities). Carries the event trace
/// collected up to the abort.
struct SimAbort : std::runtime_error {
  SimAbort(const std::string& what, std::vector<SimEvent> trace_so_far)
      : std::runtime_error(what), trace(std::move(trace_so_far)) {}
  std::vector<SimEvent> trace;
};

enum class ConsumeMode : uint8_t { X, Z, None };

inline const char* consume_name(ConsumeMode m) {
  switch (m) {
    case ConsumeMode::X: return "x";
    case ConsumeMode::Z: return "z";
    case ConsumeMode::None: return "none";
  }
  return "?";
}

struct ThroughputReport {
  int64_t columns_completed = 0;
  int64_t warmup_cycles = 0;          // cycles before the first column completes
  int64_t steady_ticks_per_column = 0;  // 0 when fewer than two completions
  bool steady_rate_uniform = false;   // completion spacing constant in steady state
};

struct VerificationSummary {
  std::string verdict = "skipped";  // "pass" | "fail" | "skipped (consumed)"
  size_t generators_checked = 0;
  size_t sign_fixes = 0;
  std::vector<std::string> mismatched;  // site strings, empty on pass
  bool passed() const { return verdict == "pass"; }
  bool failed() const { return verdict == "fail"; }
};

/// End-of-run verification plus throughput report. The latency histogram is
/// per-photon in-network time for the asynchronous network and per-(photon,
/// chip) transit for the buffered synchronous network, matching the figures
/// each network is specified against.
struct SimResult {
  std::string network;
  uint64_t seed = 0;
  std::map<std::string, std::string> config_echo;

  VerificationSummary verification;
  ThroughputReport throughput;
  std::map<int64_t, int64_t> latency_histogram;      // ticks -> count
  std::map<int64_t, int64_t> atom_window_histogram;  // ticks -> count
  BudgetReport budget;

  int64_t total_ticks = 0;
  int64_t photons_emitted = 0;
  int64_t photons_exited = 0;
  int64_t photons_consumed = 0;
  int64_t photons_in_flight = 0;
  int64_t module_cycles = 0;
  int64_t frame_updates = 0;
  bool role_coverage_ok = true;

  std::vector<SimEvent> trace;

  int64_t event_count() const { return static_cast<int64_t>(trace.size()); }

  /// Cheap self-consistency: nothing is lost, photons are either out or in flight.
  void check_consistency() const {
    if (photons_exited + photons_in_flight != photons_emitted)
      throw std::logic_error("photon bookkeeping is inconsistent");
    if (photons_consumed > photons_exited)
      throw std::logic_error("consumed more photons than exited");
  }
};

/// Per-window record kept for diagnostics and the regression tests.
struct WindowRecord {
  int64_t chip = 0;
  Site center;            // lattice site whose generator this window measured
  bool active = false;    // false for null windows (no valid center)
  int64_t init_tick = 0;
  int64_t readout_tick = 0;
  int outcome = +1;
  PauliString op;         // measured photon operator (+1 signed)
};

struct PhotonRecord {
  int64_t emit_tick = 0;
  int64_t exit_tick = 0;
  std::string roles;      // role letters in catch order, active windows only
};

struct NetworkOutput {
  SimResult result;
  std::vector<WindowRecord> windows;
  std::vector<PhotonRecord> photons;
  /// Final engine state, frame, and the verification target (populated for
  /// consume = none runs), so callers can re-verify or replay.
  StabilizerTableau engine;
  PauliFrame frame;
  ClusterTarget target;
};

}  // namespace photonnet
