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

#include <string>

#include "photonnet/statevector.hpp"
#include "photonnet/tableau.hpp"

namespace photonnet::testing {

/// Random nonidentity +1-signed Pauli product on n qubits.
inline PauliString random_pauli(size_t n, Rng& rng) {
  PauliString p(n);
  while (p.weight() == 0) {
    for (size_t q = 0; q < n; q++) {
      switch (rng.below(4)) {
        case 1: p.set_letter(q, Pauli::X); break;
        case 2: p.set_letter(q, Pauli::Y); break;
        case 3: p.set_letter(q, Pauli::Z); break;
        default: p.set_letter(q, Pauli::I); break;
      }
    }
  }
  return p;
}

/// Tableau and brute-force state vector evolving in lockstep. Every
/// measurement must agree on the deterministic-vs-random classification, and
/// the vector is collapsed to the tableau's outcome so the two stay equal.
struct CoSim {
  StabilizerTableau tab;
  StateVector psi;
  Rng rng;  // outcome randomness (gate choice uses a separate stream)
  bool verify_each_measurement = true;

  CoSim(size_t n, uint64_t seed) : tab(n), psi(n), rng(seed) {}

  size_t n() const { return tab.num_qubits(); }

  void h(size_t q) { tab.h(q); psi.h(q); }
  void x(size_t q) { tab.x(q); psi.x(q); }
  void z(size_t q) { tab.z(q); psi.z(q); }
  void s(size_t q) { tab.s(q); psi.s(q); }
  void cnot(size_t c, size_t t) { tab.cnot(c, t); psi.cnot(c, t); }
  void m_gate(size_t p, size_t a) { tab.m_gate(p, a); psi.m_gate(p, a); }

  /// Measures P on both sides; returns the shared outcome. Gtest-friendly:
  /// throws on any disagreement, including a post-measurement group mismatch.
  int measure(const PauliString& p) {
    MeasureResult mr = tab.measure_pauli_product(p, rng);
    PauliMeasurement om = measure_pauli(psi, p);
    bool oracle_deterministic =
        om.p_plus < kOracleTolerance || om.p_minus < kOracleTolerance;
    if (oracle_deterministic != mr.deterministic)
      throw std::logic_error("tableau and oracle disagree on determinism of " + p.str());
    if (mr.deterministic) {
      double prob = mr.outcome > 0 ? om.p_plus : om.p_minus;
      if (prob < 0.5)
        throw std::logic_error("tableau's deterministic outcome has zero oracle probability");
    }
    psi = (mr.outcome > 0) ? om.post_plus : om.post_minus;
    if (verify_each_measurement && !consistent())
      throw std::logic_error("post-measurement stabilizer group mismatch for " + p.str());
    return mr.outcome;
  }

  bool consistent() const { return oracle_compare(tab, psi); }

  /// One random step: a gate or a random-product measurement.
  void random_step(Rng& circuit_rng) {
    size_t q = circuit_rng.below(n());
    switch (circuit_rng.below(7)) {
      case 0: h(q); break;
      case 1: x(q); break;
      case 2: z(q); break;
      case 3: s(q); break;
      case 4: {
        if (n() < 2) { h(q); break; }
        size_t t = circuit_rng.below(n() - 1);
        if (t >= q) t++;
        cnot(q, t);
        break;
      }
      case 5: {
        if (n() < 2) { h(q); break; }
        size_t t = circuit_rng.below(n() - 1);
        if (t >= q) t++;
        m_gate(q, t);
        break;
      }
      default:
        measure(random_pauli(n(), circuit_rng));
        break;
    }
  }
};

}  // namespace photonnet::testing
