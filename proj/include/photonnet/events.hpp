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

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "photonnet/pauli_frame.hpp"
#include "photonnet/tableau.hpp"

namespace photonnet {

/// Event kinds in their tie-break order: at equal times, events that finish
/// something (cavity exits, readouts, detections) are processed before events
/// that start something. In particular a Detect at t wins over an Emit at t.
enum class EventKind : uint8_t {
  CavityOut,
  AtomReadout,
  FrameUpdate,
  Detect,
  Emit,
  ArriveAtChip,
  AtomInit,
  CavityIn,
};

inline const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::CavityOut: return "CavityOut";
    case EventKind::AtomReadout: return "AtomReadout";
    case EventKind::FrameUpdate: return "FrameUpdate";
    case EventKind::Detect: return "Detect";
    case EventKind::Emit: return "Emit";
    case EventKind::ArriveAtChip: return "ArriveAtChip";
    case EventKind::AtomInit: return "AtomInit";
    case EventKind::CavityIn: return "CavityIn";
  }
  return "?";
}

/// Timestamped network event. Times are integer delta_t ticks; delta_t' is a
/// configured integer tick count, so schedules carry no float drift.
struct SimEvent {
  int64_t time = 0;
  EventKind kind = EventKind::Emit;
  int64_t photon = -1;  // payload ids; -1 when not applicable
  int64_t chip = -1;
  std::string detail;

  /// Processing order: nondecreasing time, ties by (kind, photon, chip, detail).
  bool operator<(const SimEvent& o) const {
    if (time != o.time) return time < o.time;
    if (kind != o.kind) return kind < o.kind;
    if (photon != o.photon) return photon < o.photon;
    if (chip != o.chip) return chip < o.chip;
    return detail < o.detail;
  }
};

/// Deterministic event queue: advance() pops the batch of all events sharing
/// the next timestamp, already in tie-break order.
class EventQueue {
 public:
  void push(SimEvent e) { events_.push_back(std::move(e)); sorted_ = false; }

  bool empty() {
    ensure_sorted();
    return cursor_ >= events_.size();
  }

  std::vector<SimEvent> advance() {
    ensure_sorted();
    std::vector<SimEvent> batch;
    if (cursor_ >= events_.size()) return batch;
    int64_t t = events_[cursor_].time;
    while (cursor_ < events_.size() && events_[cursor_].time == t)
      batch.push_back(events_[cursor_++]);
    return batch;
  }

  const std::vector<SimEvent>& all() {
    ensure_sorted();
    return events_;
  }

 private:
  void ensure_sorted() {
    if (!sorted_) {
      std::stable_sort(events_.begin() + static_cast<long>(cursor_), events_.end());
      sorted_ = true;
    }
  }

  std::vector<SimEvent> events_;
  size_t cursor_ = 0;
  bool sorted_ = false;
};

// ---- Photon sources -----------------------------------------------------------

/// Emission pattern of the staggered sources: one photon per row every
/// `interval` ticks, adjacent rows offset by `stagger`, everything scaled by
/// the rate-slowdown multiplier.
struct SourceConfig {
  int64_t interval_ticks = 2;
  int64_t stagger_ticks = 1;
  int64_t slowdown = 1;

  void validate() const {
    if (interval_ticks < 2) throw std::invalid_argument("source interval must be >= 2 ticks");
    if (stagger_ticks < 0) throw std::invalid_argument("stagger must be nonnegative");
    if (slowdown < 1) throw std::invalid_argument("slowdown multiplier must be >= 1");
  }
};

/// Emit events for `rows` sources over [0, duration) ticks, slowdown applied.
inline std::vector<SimEvent> emit_schedule(const SourceConfig& src, int rows,
                                           int64_t duration_ticks) {
  src.validate();
  if (rows < 1) throw std::invalid_argument("need at least one row");
  std::vector<SimEvent> out;
  for (int r = 0; r < rows; r++) {
    int64_t offset = (r % 2) * src.stagger_ticks * src.slowdown;
    for (int64_t t = offset; t < duration_ticks; t += src.interval_ticks * src.slowdown)
      out.push_back({t, EventKind::Emit, r, -1, ""});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Detection ------------------------------------------------------------------

enum class DetectBasis : uint8_t { Z, X };

struct DetectResult {
  int bit = 0;       // 0 for +1 outcome, 1 for -1, after frame absorption
  int raw_outcome = +1;
};

/// Polarizing-beam-splitter detection of an exited photon. The pending frame
/// letter at the photon is absorbed into the classical result rather than
/// applied as a gate. A -1 frame-corrected outcome pushes the measurement
/// by-product onto the remaining neighbors' frame: Z-basis detection sends Z
/// to every remaining lattice neighbor; X-basis detection sends X to the
/// unique remaining neighbor of a chain-end photon (a Pauli by-product exists
/// only in that case).
inline DetectResult detect(StabilizerTableau& engine, PauliFrame& frame,
                           size_t photon, DetectBasis basis,
                           const std::vector<size_t>& remaining_neighbors,
                           Rng& rng, int64_t measurement_id, bool photon_exited = true) {
  if (!photon_exited)
    throw std::invalid_argument("detecting an in-flight photon");
  PauliString p = PauliString::single(engine.num_qubits(), photon,
                                      basis == DetectBasis::Z ? Pauli::Z : Pauli::X);
  int raw = engine.measure_pauli_product(p, rng).outcome;
  int corrected = frame.flips_sign_of(p) ? -raw : raw;
  if (corrected < 0) {
    if (basis == DetectBasis::Z) {
      for (size_t nb : remaining_neighbors)
        frame.push(measurement_id, corrected, nb, Pauli::Z);
    } else if (remaining_neighbors.size() == 1) {
      frame.push(measurement_id, corrected, remaining_neighbors[0], Pauli::X);
    }
  }
  return {corrected < 0 ? 1 : 0, raw};
}

}  // namespace photonnet
