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

#include <cmath>
#include <numbers>
#include <optional>

#include "photonnet/pauli.hpp"
#include "photonnet/pauli_frame.hpp"
#include "photonnet/tableau.hpp"

namespace photonnet {

// ---- Interaction parameters --------------------------------------------------

/// Time for one non-destructive atom-photon interaction: pi * |Delta| / g^2.
inline double interaction_time(double g, double delta) {
  if (g <= 0) throw std::invalid_argument("coupling g must be positive");
  if (delta == 0) throw std::invalid_argument("detuning must be nonzero");
  return std::numbers::pi * std::abs(delta) / (g * g);
}

struct InteractionParams {
  double g = 1.0;              // atom-cavity coupling (angular frequency units)
  double delta = 1.0;          // detuning, same units
  double delta_t_s = 1.0;      // one unit interaction interval, seconds
  double delta_t_prime_s = 0;  // atomic readout interval, seconds

  double beta() const {
    if (g <= 0) throw std::invalid_argument("coupling g must be positive");
    if (delta == 0) throw std::invalid_argument("detuning must be nonzero");
    return -(g * g) / delta;  // off-resonance light shift
  }
  double t_int() const { return interaction_time(g, delta); }

  void validate() const {
    (void)beta();
    if (delta_t_s <= 0) throw std::invalid_argument("delta_t must be positive");
    if (delta_t_prime_s < 0) throw std::invalid_argument("delta_t' must be nonnegative");
  }
};

// ---- Photon roles --------------------------------------------------------------

/// Position of a photon inside one measured stabilizer. Neighbor roles pass
/// through the Hadamard waveplate pair (contributing Z to the measured
/// operator); the center passes bare (contributing X).
enum class PhotonRole : uint8_t { Center, Top, Bottom, Left, Right };

inline bool basis_rotation(PhotonRole r) { return r != PhotonRole::Center; }

inline Pauli role_letter(PhotonRole r) {
  return r == PhotonRole::Center ? Pauli::X : Pauli::Z;
}

inline char role_char(PhotonRole r) {
  switch (r) {
    case PhotonRole::Center: return 'C';
    case PhotonRole::Top: return 'T';
    case PhotonRole::Bottom: return 'B';
    case PhotonRole::Left: return 'L';
    case PhotonRole::Right: return 'R';
  }
  return '?';
}

// ---- Module device model --------------------------------------------------------

struct PassRecord {
  size_t photon = 0;
  PhotonRole role = PhotonRole::Center;
  int64_t tick = 0;
};

struct ParityOutcome {
  PauliString op;       // the photon operator that was measured (+1 signed)
  int outcome = +1;     // atom readout result
  bool recovery_pushed = false;
  int64_t init_tick = 0;
  int64_t readout_tick = 0;
  std::vector<PassRecord> passes;
};

/// One photonic module: atom lifecycle, per-photon interactions, readout.
///
/// The realized protocol is the one the module action fixes once the gate M
/// and the waveplate convention (center bare, neighbors wrapped) are pinned:
/// the atom starts in a Z eigenstate, accumulates one M interaction per
/// photon, and is read out in the Z basis. The readout bit is then exactly
/// the +/-1 outcome of projecting the photon train onto the role-derived
/// operator (X at the center, Z at neighbors). A -1 outcome defers a Z
/// recovery on the center photon (earliest photon for center-free products)
/// to the PauliFrame rather than applying a physical gate.
class ModuleState {
 public:
  enum class Phase : uint8_t { Idle, Initialized, Interacting, ReadingOut };

  ModuleState() = default;
  explicit ModuleState(size_t atom_qubit) : atom_(atom_qubit) {}

  size_t atom_qubit() const { return atom_; }
  Phase phase() const { return phase_; }
  const std::vector<PassRecord>& passes() const { return passes_; }

  void begin_cycle(StabilizerTableau& engine, Rng& rng, int64_t tick) {
    if (phase_ != Phase::Idle)
      throw std::logic_error("module atom is double-booked");
    engine.reset_to_zero(atom_, rng);
    phase_ = Phase::Initialized;
    init_tick_ = tick;
    passes_.clear();
  }

  void pass(StabilizerTableau& engine, size_t photon, PhotonRole role, int64_t tick) {
    if (phase_ != Phase::Initialized && phase_ != Phase::Interacting)
      throw std::logic_error("module pass outside an initialized cycle");
    if (passes_.size() >= 5)
      throw std::logic_error("module cycle exceeds five photons");
    if (basis_rotation(role)) {
      engine.h(photon);
      engine.m_gate(photon, atom_);
      engine.h(photon);
    } else {
      engine.m_gate(photon, atom_);
    }
    passes_.push_back({photon, role, tick});
    phase_ = Phase::Interacting;
  }

  /// Atom readout closing the cycle; pushes the frame recovery on -1.
  ParityOutcome readout(StabilizerTableau& engine, PauliFrame& frame, Rng& rng,
                        int64_t tick, int64_t measurement_id) {
    if (phase_ != Phase::Interacting && phase_ != Phase::Initialized)
      throw std::logic_error("module readout without an initialized cycle");
    phase_ = Phase::ReadingOut;

    ParityOutcome result;
    result.op = PauliString(engine.num_qubits());
    for (const auto& p : passes_) result.op.set_letter(p.photon, role_letter(p.role));
    result.init_tick = init_tick_;
    result.readout_tick = tick;
    result.passes = passes_;

    int outcome = engine.measure_z(atom_, rng).outcome;
    result.outcome = outcome;

    if (outcome < 0 && !passes_.empty()) {
      auto [q, letter] = recovery_for(result.op, passes_);
      frame.push(measurement_id, outcome, q, letter);
      result.recovery_pushed = true;
    }

    phase_ = Phase::Idle;
    return result;
  }

  /// Count of delta_t ticks between initialization and readout; only valid
  /// for a completed cycle.
  static int64_t atom_window(const ParityOutcome& cycle) {
    if (cycle.readout_tick < cycle.init_tick)
      throw std::invalid_argument("incomplete module cycle");
    return cycle.readout_tick - cycle.init_tick;
  }

  /// Recovery convention: Z on the center photon when a center exists (it
  /// commutes with every other lattice generator), otherwise Z on the
  /// earliest-indexed photon of the product; X when the letter there is Z.
  static std::pair<size_t, Pauli> recovery_for(const PauliString& op,
                                               const std::vector<PassRecord>& passes) {
    std::optional<size_t> q;
    for (const auto& p : passes)
      if (p.role == PhotonRole::Center && (!q || p.photon < *q)) q = p.photon;
    if (!q)
      for (const auto& p : passes)
        if (!q || p.photon < *q) q = p.photon;
    Pauli letter = (op.letter(*q) == Pauli::Z) ? Pauli::X : Pauli::Z;
    return {*q, letter};
  }

 private:
  size_t atom_ = 0;
  Phase phase_ = Phase::Idle;
  int64_t init_tick_ = 0;
  std::vector<PassRecord> passes_;
};

/// Full module cycle as one call: init, ordered photon passes, readout.
/// Equivalent (bit-for-bit on the same seed) to measure_pauli_product of the
/// role-derived operator followed by the frame recovery. Callers own the
/// photon lifecycle: a photon that a detector already consumed must not be
/// sent through the module again (the network run loops order detection
/// strictly after a photon's final pass).
inline ParityOutcome module_cycle(StabilizerTableau& engine, ModuleState& module,
                                  const std::vector<size_t>& photon_ids,
                                  const std::vector<PhotonRole>& roles,
                                  PauliFrame& frame, Rng& rng,
                                  int64_t start_tick = 0, int64_t dtp_ticks = 0,
                                  int64_t measurement_id = 0, int64_t tick_stride = 1) {
  if (photon_ids.empty() || photon_ids.size() > 5)
    throw std::invalid_argument("module cycle takes between one and five photons");
  if (photon_ids.size() != roles.size())
    throw std::invalid_argument("roles must align with photons");
  for (size_t i = 0; i < photon_ids.size(); i++)
    for (size_t j = i + 1; j < photon_ids.size(); j++)
      if (photon_ids[i] == photon_ids[j])
        throw std::invalid_argument("a photon cannot pass the module twice in one cycle");
  module.begin_cycle(engine, rng, start_tick);
  for (size_t i = 0; i < photon_ids.size(); i++)
    module.pass(engine, photon_ids[i], roles[i],
                start_tick + static_cast<int64_t>(i) * tick_stride);
  int64_t readout_tick =
      start_tick + static_cast<int64_t>(photon_ids.size()) * tick_stride + dtp_ticks;
  return module.readout(engine, frame, rng, readout_tick, measurement_id);
}

}  // namespace photonnet
