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
#include <complex>

#include "photonnet/pauli.hpp"
#include "photonnet/rng.hpp"
#include "photonnet/tableau.hpp"

namespace photonnet {

/// Hard cap for the brute-force oracle: 2^12 amplitudes keeps every oracle
/// test sub-second while covering all 5-photon + 1-atom module cycles.
inline constexpr size_t kOracleLimit = 12;

inline constexpr double kOracleTolerance = 1e-9;

/// Dense 2^n-amplitude simulator used as an independent oracle for the
/// stabilizer engine. Deliberately shares no math with the tableau: gates are
/// amplitude updates and Pauli products act letter-by-letter on basis states.
class StateVector {
 public:
  explicit StateVector(size_t n) : n_(n), amps_(size_t{1} << n) {
    if (n > kOracleLimit) throw std::invalid_argument("oracle limit exceeded");
    amps_[0] = 1.0;
  }

  size_t num_qubits() const { return n_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  void set_amplitudes(std::vector<std::complex<double>> a) {
    if (a.size() != amps_.size()) throw std::invalid_argument("dimension mismatch");
    amps_ = std::move(a);
  }

  double norm2() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

  // ---- Gates ----------------------------------------------------------------

  void h(size_t q) {
    const double r = 1.0 / std::sqrt(2.0);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
      if (i & bit) continue;
      auto a0 = amps_[i], a1 = amps_[i | bit];
      amps_[i] = r * (a0 + a1);
      amps_[i | bit] = r * (a0 - a1);
    }
  }

  void x(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++)
      if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
  }

  void z(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++)
      if (i & bit) amps_[i] = -amps_[i];
  }

  void s(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++)
      if (i & bit) amps_[i] *= std::complex<double>(0, 1);
  }

  void cnot(size_t c, size_t t) {
    size_t cb = size_t{1} << c, tb = size_t{1} << t;
    for (size_t i = 0; i < amps_.size(); i++)
      if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
  }

  /// Module gate applied as its literal 4x4 matrix,
  /// M = |+><+| (x) I + |-><-| (x) X = (1/2) [[1,1,1,-1],[1,1,-1,1],[1,-1,1,1],[-1,1,1,1]]
  /// in the |photon, atom> basis. Kept as an explicit matrix so the oracle
  /// does not inherit the tableau's gate decomposition.
  void m_gate(size_t photon, size_t atom) {
    static const double m[4][4] = {
        {0.5, 0.5, 0.5, -0.5},
        {0.5, 0.5, -0.5, 0.5},
        {0.5, -0.5, 0.5, 0.5},
        {-0.5, 0.5, 0.5, 0.5},
    };
    size_t pb = size_t{1} << photon, ab = size_t{1} << atom;
    for (size_t i = 0; i < amps_.size(); i++) {
      if ((i & pb) || (i & ab)) continue;
      size_t idx[4] = {i, i | ab, i | pb, i | pb | ab};  // |pa> = |00>,|01>,|10>,|11>
      std::complex<double> in[4], out[4];
      for (int k = 0; k < 4; k++) in[k] = amps_[idx[k]];
      for (int r = 0; r < 4; r++) {
        out[r] = 0;
        for (int c = 0; c < 4; c++) out[r] += m[r][c] * in[c];
      }
      for (int k = 0; k < 4; k++) amps_[idx[k]] = out[k];
    }
  }

  /// |phi> -> P|phi> applied letter-by-letter on basis states.
  void apply_pauli(const PauliString& p) {
    if (p.n != n_) throw std::invalid_argument("operator size mismatch");
    std::vector<std::complex<double>> out(amps_.size());
    size_t flip = 0;
    for (size_t q = 0; q < n_; q++)
      if (p.get_x(q)) flip |= size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
      std::complex<double> a = amps_[i];
      if (p.neg) a = -a;
      for (size_t q = 0; q < n_; q++) {
        bool one = (i >> q) & 1;
        switch (p.letter(q)) {
          case Pauli::I: case Pauli::X: break;
          case Pauli::Z:
            if (one) a = -a;
            break;
          case Pauli::Y:
            // Y|0> = i|1>, Y|1> = -i|0>
            a *= one ? std::complex<double>(0, -1) : std::complex<double>(0, 1);
            break;
        }
      }
      out[i ^ flip] = a;
    }
    amps_ = std::move(out);
  }

  // ---- Measurement -----------------------------------------------------------

  double expectation(const PauliString& p) const {
    StateVector tmp = *this;
    tmp.apply_pauli(p);
    std::complex<double> e = 0;
    for (size_t i = 0; i < amps_.size(); i++) e += std::conj(amps_[i]) * tmp.amps_[i];
    return e.real();
  }

  /// Samples an outcome with rng and collapses; outcome bias follows the
  /// projector probabilities.
  int measure_pauli_collapse(const PauliString& p, Rng& rng);

  /// Forces a specific outcome (co-simulation); throws if its probability
  /// is numerically zero.
  void collapse_to(const PauliString& p, int outcome);

  void normalize() {
    double n2 = norm2();
    if (n2 < 1e-300) return;
    double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amps_) a *= inv;
  }

 private:
  size_t n_ = 0;
  std::vector<std::complex<double>> amps_;
};

struct PauliMeasurement {
  double p_plus = 0;
  double p_minus = 0;
  StateVector post_plus;
  StateVector post_minus;
};

/// Projects onto both eigenspaces of P via (I +/- P)/2 and returns the
/// branch probabilities with the normalized post-states.
inline PauliMeasurement measure_pauli(const StateVector& psi, const PauliString& p) {
  StateVector pv = psi;
  pv.apply_pauli(p);
  size_t dim = psi.amplitudes().size();
  PauliMeasurement out{0, 0, StateVector(psi.num_qubits()), StateVector(psi.num_qubits())};
  std::vector<std::complex<double>> plus(dim), minus(dim);
  for (size_t i = 0; i < dim; i++) {
    plus[i] = 0.5 * (psi.amplitudes()[i] + pv.amplitudes()[i]);
    minus[i] = 0.5 * (psi.amplitudes()[i] - pv.amplitudes()[i]);
  }
  out.post_plus.set_amplitudes(std::move(plus));
  out.post_minus.set_amplitudes(std::move(minus));
  out.p_plus = out.post_plus.norm2();
  out.p_minus = out.post_minus.norm2();
  out.post_plus.normalize();
  out.post_minus.normalize();
  return out;
}

inline int StateVector::measure_pauli_collapse(const PauliString& p, Rng& rng) {
  auto m = measure_pauli(*this, p);
  int outcome;
  if (m.p_minus < kOracleTolerance) outcome = +1;
  else if (m.p_plus < kOracleTolerance) outcome = -1;
  else outcome = rng.coin();
  *this = (outcome > 0) ? m.post_plus : m.post_minus;
  return outcome;
}

inline void StateVector::collapse_to(const PauliString& p, int outcome) {
  auto m = measure_pauli(*this, p);
  double prob = outcome > 0 ? m.p_plus : m.p_minus;
  if (prob < kOracleTolerance)
    throw std::logic_error("forced outcome has zero probability");
  *this = (outcome > 0) ? m.post_plus : m.post_minus;
}

/// True iff every stabilizer row of the tableau fixes the state:
/// <psi| g |psi> = sign(g) within 1e-9.
inline bool oracle_compare(const StabilizerTableau& tab, const StateVector& psi) {
  if (tab.num_qubits() != psi.num_qubits())
    throw std::invalid_argument("qubit count mismatch");
  for (const auto& g : tab.stabilizers()) {
    PauliString unsigned_g = g;
    unsigned_g.neg = false;
    double want = g.neg ? -1.0 : 1.0;
    if (std::abs(psi.expectation(unsigned_g) - want) > kOracleTolerance) return false;
  }
  return true;
}

}  // namespace photonnet
