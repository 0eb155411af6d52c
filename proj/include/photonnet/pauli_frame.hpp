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

#include "photonnet/pauli.hpp"
#include "photonnet/tableau.hpp"

namespace photonnet {

/// Classical record of deferred Pauli recovery operators, one letter per live
/// qubit. Measurement results are stored here instead of applying physical
/// gates; composition is per-letter XOR (self-inverse up to global sign,
/// which is unobservable for a frame).
class PauliFrame {
 public:
  struct LogEntry {
    int64_t measurement_id = 0;
    int outcome = +1;
    size_t qubit = 0;
    Pauli recovery = Pauli::I;
  };

  PauliFrame() = default;
  explicit PauliFrame(size_t n) : op_(n) {}

  size_t num_qubits() const { return op_.n; }
  const PauliString& as_pauli() const { return op_; }
  const std::vector<LogEntry>& log() const { return log_; }

  Pauli letter(size_t q) const { return op_.letter(q); }

  bool is_identity() const { return op_.is_identity(); }

  /// Composes `recovery` at `qubit` into the frame and logs the event.
  void push(int64_t measurement_id, int outcome, size_t qubit, Pauli recovery) {
    if (qubit >= op_.n) throw std::out_of_range("frame qubit out of range");
    op_.set_x(qubit, op_.get_x(qubit) ^ (recovery == Pauli::X || recovery == Pauli::Y));
    op_.set_z(qubit, op_.get_z(qubit) ^ (recovery == Pauli::Z || recovery == Pauli::Y));
    log_.push_back({measurement_id, outcome, qubit, recovery});
  }

  /// Whether the pending frame operator anticommutes with P, i.e. whether a
  /// measurement of P on the intended state has its sign flipped relative to
  /// measuring the actual state.
  bool flips_sign_of(const PauliString& p) const { return !op_.commutes(p); }

  /// Applies the frame physically to the tableau and clears it. Verifying
  /// afterwards with the (now empty) frame must give the same verdict as
  /// virtual-frame verification.
  void apply_physically(StabilizerTableau& tab) {
    for (size_t q = 0; q < op_.n; q++) tab.apply_pauli(q, op_.letter(q));
    clear();
  }

  void clear() {
    op_ = PauliString(op_.n);
    log_.clear();
  }

 private:
  PauliString op_;
  std::vector<LogEntry> log_;
};

}  // namespace photonnet
