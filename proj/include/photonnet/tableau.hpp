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
#include <optional>
#include <utility>

#include "photonnet/pauli.hpp"
#include "photonnet/rng.hpp"

namespace photonnet {

struct MeasureResult {
  int outcome = +1;          // +1 or -1
  bool deterministic = false;
};

/// Stabilizer/destabilizer tableau over n qubits, initialized to |0...0>.
/// Row i of the destabilizer anticommutes with stabilizer row i and commutes
/// with every other row; the 2n rows are independent over GF(2).
class StabilizerTableau {
 public:
  StabilizerTableau() = default;

  explicit StabilizerTableau(size_t n) : n_(n) {
    destab_.reserve(n);
    stab_.reserve(n);
    for (size_t q = 0; q < n; q++) {
      destab_.push_back(PauliString::single(n, q, Pauli::X));
      stab_.push_back(PauliString::single(n, q, Pauli::Z));
    }
  }

  size_t num_qubits() const { return n_; }
  const std::vector<PauliString>& stabilizers() const { return stab_; }
  const std::vector<PauliString>& destabilizers() const { return destab_; }

  // ---- Clifford gates -----------------------------------------------------

  void h(size_t q) {
    check_target(q);
    for (auto* rows : {&destab_, &stab_})
      for (auto& r : *rows) {
        bool xb = r.get_x(q), zb = r.get_z(q);
        r.neg ^= xb && zb;
        r.set_x(q, zb);
        r.set_z(q, xb);
      }
    debug_check();
  }

  void x(size_t q) {
    check_target(q);
    for (auto* rows : {&destab_, &stab_})
      for (auto& r : *rows) r.neg ^= r.get_z(q);
    debug_check();
  }

  void z(size_t q) {
    check_target(q);
    for (auto* rows : {&destab_, &stab_})
      for (auto& r : *rows) r.neg ^= r.get_x(q);
    debug_check();
  }

  void y(size_t q) {
    check_target(q);
    for (auto* rows : {&destab_, &stab_})
      for (auto& r : *rows) r.neg ^= r.get_x(q) ^ r.get_z(q);
    debug_check();
  }

  void s(size_t q) {
    check_target(q);
    for (auto* rows : {&destab_, &stab_})
      for (auto& r : *rows) {
        bool xb = r.get_x(q), zb = r.get_z(q);
        r.neg ^= xb && zb;
        r.set_z(q, zb ^ xb);
      }
    debug_check();
  }

  void cnot(size_t c, size_t t) {
    check_target(c);
    check_target(t);
    if (c == t) throw std::invalid_argument("duplicate targets on two-qubit gate");
    for (auto* rows : {&destab_, &stab_})
      for (auto& r : *rows) {
        bool xc = r.get_x(c), zc = r.get_z(c);
        bool xt = r.get_x(t), zt = r.get_z(t);
        r.neg ^= xc && zt && (xt == zc);
        r.set_x(t, xt ^ xc);
        r.set_z(c, zc ^ zt);
      }
    debug_check();
  }

  /// The photonic-module gate M between a photon and the atomic qubit,
  /// M = |+><+| (x) I + |-><-| (x) X. Conjugation map on generators:
  ///   Xp -> Xp,  Zp -> Zp Xa,  Xa -> Xa,  Za -> Xp Za.
  /// Realized as H(p) CNOT(p,a) H(p), which reproduces that map exactly
  /// (including the sign flips on rows carrying Y).
  void m_gate(size_t photon, size_t atom) {
    check_target(photon);
    check_target(atom);
    if (photon == atom) throw std::invalid_argument("duplicate targets on two-qubit gate");
    h(photon);
    cnot(photon, atom);
    h(photon);
  }

  void apply_pauli(size_t q, Pauli p) {
    switch (p) {
      case Pauli::I: break;
      case Pauli::X: x(q); break;
      case Pauli::Y: y(q); break;
      case Pauli::Z: z(q); break;
    }
  }

  // ---- Measurement --------------------------------------------------------

  /// Projective measurement of a +1-signed Pauli product. If +/-P is already
  /// in the stabilizer group the outcome is deterministic and the state is
  /// unchanged; otherwise the outcome is a fair coin from rng and the state
  /// is updated to stabilize outcome*P. Signed products are rejected: signs
  /// live exclusively in the PauliFrame.
  MeasureResult measure_pauli_product(const PauliString& p, Rng& rng) {
    if (p.n != n_) throw std::invalid_argument("operator size mismatch");
    if (p.weight() == 0) throw std::invalid_argument("zero-weight Pauli product");
    if (p.neg) throw std::invalid_argument("signed products are handled by the caller via the frame");

    std::optional<size_t> pivot;
    for (size_t i = 0; i < n_; i++) {
      if (!stab_[i].commutes(p)) { pivot = i; break; }
    }

    if (pivot) {
      // Random branch: fold the pivot row into every other anticommuting row,
      // then replace the pivot with outcome*P. The pivot's own destabilizer
      // partner is skipped (it gets overwritten below).
      size_t pv = *pivot;
      for (size_t i = 0; i < n_; i++) {
        if (i == pv) continue;
        if (!stab_[i].commutes(p)) stab_[i].mul(stab_[pv]);
        if (!destab_[i].commutes(p)) destab_[i].mul(stab_[pv]);
      }
      destab_[pv] = stab_[pv];
      int outcome = rng.coin();
      stab_[pv] = p;
      stab_[pv].neg = (outcome < 0);
      after_measurement_check();
      return {outcome, false};
    }

    // Deterministic branch: P = product of stabilizer rows selected by the
    // destabilizers that anticommute with P; the accumulated sign is the outcome.
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++)
      if (!destab_[i].commutes(p)) acc.mul(stab_[i]);
    if (!acc.same_support(p))
      throw std::logic_error("tableau inconsistency: operator not reachable");
    after_measurement_check();
    return {acc.neg ? -1 : +1, true};
  }

  MeasureResult measure_z(size_t q, Rng& rng) {
    return measure_pauli_product(PauliString::single(n_, q, Pauli::Z), rng);
  }

  MeasureResult measure_x(size_t q, Rng& rng) {
    return measure_pauli_product(PauliString::single(n_, q, Pauli::X), rng);
  }

  /// Deterministic reset to |0> (measure Z, flip on -1). Draws no randomness
  /// when the qubit is already in a Z eigenstate.
  void reset_to_zero(size_t q, Rng& rng) {
    if (measure_z(q, rng).outcome < 0) x(q);
  }

  // ---- Diagnostics ---------------------------------------------------------

  /// Validates commutation structure and full 2n rank; throws on violation.
  void check_invariants() const {
    for (size_t i = 0; i < n_; i++) {
      for (size_t j = 0; j < n_; j++) {
        if (!stab_[i].commutes(stab_[j]))
          throw std::logic_error("stabilizer rows must commute");
        bool anti = !destab_[i].commutes(stab_[j]);
        if (anti != (i == j))
          throw std::logic_error("destabilizer pairing broken");
      }
    }
    std::vector<PauliString> all;
    all.reserve(2 * n_);
    for (const auto& r : destab_) all.push_back(r);
    for (const auto& r : stab_) all.push_back(r);
    if (sym_rank(all) != 2 * n_)
      throw std::logic_error("tableau rows are dependent over GF(2)");
  }

  /// Row-reduced stabilizer generators in a canonical order, signs included.
  /// Two tableaux describe the same state iff these lists are equal.
  std::vector<std::string> canonical_stabilizers() const {
    std::vector<PauliString> rows = stab_;
    canonicalize(rows);
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.str());
    return out;
  }

  /// GF(2) rank of the symplectic parts; phases are ignored, so the input
  /// rows need not commute.
  static size_t sym_rank(std::vector<PauliString> rows) {
    if (rows.empty()) return 0;
    size_t n = rows[0].n;
    size_t head = 0;
    auto run = [&](bool x_first) {
      for (size_t q = 0; q < n && head < rows.size(); q++) {
        auto bit = [&](const PauliString& r) { return x_first ? r.get_x(q) : r.get_z(q); };
        size_t piv = head;
        while (piv < rows.size() && !bit(rows[piv])) piv++;
        if (piv == rows.size()) continue;
        std::swap(rows[head], rows[piv]);
        for (size_t i = 0; i < rows.size(); i++)
          if (i != head && bit(rows[i])) {
            for (size_t w = 0; w < rows[i].x.size(); w++) {
              rows[i].x[w] ^= rows[head].x[w];
              rows[i].z[w] ^= rows[head].z[w];
            }
          }
        head++;
      }
    };
    run(true);
    run(false);
    return head;
  }

  /// In-place sign-tracked Gaussian elimination; requires mutually commuting
  /// rows (real phases throughout). X pivots first, then Z, lowest qubit first.
  static void canonicalize(std::vector<PauliString>& rows) {
    if (rows.empty()) return;
    size_t n = rows[0].n;
    size_t head = 0;
    auto run = [&](bool x_phase) {
      for (size_t q = 0; q < n && head < rows.size(); q++) {
        auto is_pivot = [&](const PauliString& r) {
          return x_phase ? r.get_x(q) : (!r.get_x(q) && r.get_z(q));
        };
        size_t piv = head;
        while (piv < rows.size() && !is_pivot(rows[piv])) piv++;
        if (piv == rows.size()) continue;
        std::swap(rows[head], rows[piv]);
        for (size_t i = 0; i < rows.size(); i++)
          if (i != head && (x_phase ? rows[i].get_x(q) : rows[i].get_z(q)))
            rows[i].mul(rows[head]);
        head++;
      }
    };
    run(true);
    run(false);
  }

 private:
  void check_target(size_t q) const {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
  }

  // Debug builds re-validate the tableau after every gate and measurement
  // (capped so large network runs stay tractable).
  void debug_check() const {
#ifndef NDEBUG
    if (n_ <= 16) check_invariants();
#endif
  }

  void after_measurement_check() const {
#ifndef NDEBUG
    if (n_ <= 48) check_invariants();
#endif
  }

  size_t n_ = 0;
  std::vector<PauliString> destab_;
  std::vector<PauliString> stab_;
};

// ---- Stabilizer group comparison -------------------------------------------

enum class GroupRelation { Equal, EqualUpToSigns, Different };

struct GroupComparison {
  GroupRelation relation = GroupRelation::Different;
  /// Indices into the second generator set that need a -1 sign flip.
  std::vector<size_t> sign_flips;
};

namespace detail {

inline void validate_generator_set(const std::vector<PauliString>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator set");
  for (size_t i = 0; i < gens.size(); i++)
    for (size_t j = i + 1; j < gens.size(); j++)
      if (!gens[i].commutes(gens[j]))
        throw std::invalid_argument("generator set is not commuting");
  if (StabilizerTableau::sym_rank(gens) != gens.size())
    throw std::invalid_argument("generator set is dependent");
}

/// i-exponent (signed count) of the per-qubit letter products in a*b.
inline int phase_g_sum(const PauliString& a, const PauliString& b) {
  int64_t cnt = 0;
  for (size_t i = 0; i < a.x.size(); i++) {
    uint64_t x1 = a.x[i], z1 = a.z[i], x2 = b.x[i], z2 = b.z[i];
    uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    uint64_t minus = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
    cnt += std::popcount(plus);
    cnt -= std::popcount(minus);
  }
  return static_cast<int>(((cnt % 4) + 4) % 4);
}

/// Reduced basis of a commuting generator set plus membership solving.
struct GroupSolver {
  std::vector<PauliString> basis;                // row-reduced, sign-tracked
  std::vector<std::pair<bool, size_t>> pivots;   // (is_x_pivot, qubit), by basis row

  explicit GroupSolver(std::vector<PauliString> gens) : basis(std::move(gens)) {
    size_t n = basis[0].n;
    size_t head = 0;
    auto run = [&](bool x_phase) {
      for (size_t q = 0; q < n && head < basis.size(); q++) {
        auto is_pivot = [&](const PauliString& r) {
          return x_phase ? r.get_x(q) : (!r.get_x(q) && r.get_z(q));
        };
        size_t piv = head;
        while (piv < basis.size() && !is_pivot(basis[piv])) piv++;
        if (piv == basis.size()) continue;
        std::swap(basis[head], basis[piv]);
        for (size_t i = 0; i < basis.size(); i++)
          if (i != head && (x_phase ? basis[i].get_x(q) : basis[i].get_z(q)))
            basis[i].mul(basis[head]);
        pivots.emplace_back(x_phase, q);
        head++;
      }
    };
    run(true);
    run(false);
  }

  /// If target's symplectic part lies in the group, returns the sign of the
  /// matching group element (false=+, true=-); nullopt otherwise. Tolerates
  /// targets that anticommute with individual basis rows.
  std::optional<bool> solve(const PauliString& target) const {
    PauliString v = target;
    v.neg = false;
    int iexp = 0;
    for (size_t i = 0; i < pivots.size(); i++) {
      auto [is_x, q] = pivots[i];
      bool hit = is_x ? v.get_x(q) : v.get_z(q);
      if (!hit) continue;
      iexp = (iexp + phase_g_sum(v, basis[i]) + (basis[i].neg ? 2 : 0)) % 4;
      for (size_t w = 0; w < v.x.size(); w++) {
        v.x[w] ^= basis[i].x[w];
        v.z[w] ^= basis[i].z[w];
      }
    }
    if (!v.is_identity()) return std::nullopt;
    if (iexp % 2 != 0) return std::nullopt;  // imaginary: not a +/- group element
    return iexp == 2;
  }
};

}  // namespace detail

/// Decides whether two independent commuting generator sets span the same
/// group, reporting which generators of `b` would need a -1 flip.
inline GroupComparison stabilizer_group_equal(const std::vector<PauliString>& a,
                                              const std::vector<PauliString>& b) {
  detail::validate_generator_set(a);
  detail::validate_generator_set(b);
  GroupComparison out;
  if (a.size() != b.size() || a[0].n != b[0].n) return out;

  detail::GroupSolver solver(a);
  std::vector<size_t> flips;
  for (size_t j = 0; j < b.size(); j++) {
    auto sign = solver.solve(b[j]);
    if (!sign) return out;  // Different
    if (*sign != b[j].neg) flips.push_back(j);
  }
  out.relation = flips.empty() ? GroupRelation::Equal : GroupRelation::EqualUpToSigns;
  out.sign_flips = std::move(flips);
  return out;
}

}  // namespace photonnet
