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
#include <map>
#include <set>
#include <string>

#include "photonnet/pauli.hpp"
#include "photonnet/pauli_frame.hpp"
#include "photonnet/tableau.hpp"

namespace photonnet {

enum class LatticeKind : uint8_t { Square, Rhombus };

/// A lattice site at column i, row j.
struct Site {
  int i = 0;
  int j = 0;
  auto operator<=>(const Site&) const = default;
};

inline std::string site_str(Site s) {
  return "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

/// Square lattices carry the usual 4-neighborhood. Rhombus is the
/// asynchronous network's output topology: each row is a chain and the bond
/// below (i, j) lands at column i + ((j+1) mod 2) of row j+1, so in physical
/// coordinates (sites at x = 2i + (j+1) mod 2) every inter-row bond runs
/// along a diagonal. The template is not assumed: it was extracted from the
/// gate log of an asynchronous run and frozen here; a regression test
/// re-derives it from the routing table on every run of the suite.
struct LatticeSpec {
  int width = 1;   // columns
  int height = 1;  // rows
  LatticeKind kind = LatticeKind::Square;

  void validate() const {
    if (width < 1 || height < 1)
      throw std::invalid_argument("lattice must be at least 1x1");
  }

  int sites() const { return width * height; }
  bool contains(Site s) const {
    return s.i >= 0 && s.i < width && s.j >= 0 && s.j < height;
  }
  int index(Site s) const { return s.j * width + s.i; }
  Site site(int idx) const { return {idx % width, idx / width}; }

  /// In-bounds lattice neighbors of s, in a fixed (left, right, up, down) order.
  std::vector<Site> neighbors(Site s) const {
    std::vector<Site> out;
    auto add = [&](Site c) { if (contains(c)) out.push_back(c); };
    add({s.i - 1, s.j});
    add({s.i + 1, s.j});
    if (kind == LatticeKind::Square) {
      add({s.i, s.j - 1});
      add({s.i, s.j + 1});
    } else {
      if (s.j > 0) add({s.i - (s.j % 2), s.j - 1});
      add({s.i + ((s.j + 1) % 2), s.j + 1});
    }
    return out;
  }

  /// Undirected edge list, each pair ordered and the list sorted.
  std::vector<std::pair<Site, Site>> edges() const {
    std::set<std::pair<Site, Site>> acc;
    for (int idx = 0; idx < sites(); idx++) {
      Site s = site(idx);
      for (Site nb : neighbors(s))
        acc.insert(std::minmax(s, nb));
    }
    return {acc.begin(), acc.end()};
  }
};

// ---- Target stabilizer groups --------------------------------------------------

/// One generator per site: X there, Z on each lattice neighbor; boundary
/// sites simply omit the factors of missing neighbors.
struct ClusterTarget {
  LatticeSpec spec;
  std::vector<size_t> qubit_of_site;    // site index -> qubit id
  size_t total_qubits = 0;              // width of the generator strings
  std::vector<PauliString> generators;  // one per site, +1 signed

  const PauliString& generator_at(Site s) const {
    return generators[spec.index(s)];
  }
};

/// Builds the target group. By default sites map to qubits 0..N-1; networks
/// remap via `qubit_of_site` and `total_qubits` to embed the generators in a
/// larger register (extra qubits carry identity).
inline ClusterTarget cluster_stabilizers(const LatticeSpec& spec,
                                         std::vector<size_t> qubit_of_site = {},
                                         size_t total_qubits = 0) {
  spec.validate();
  ClusterTarget t;
  t.spec = spec;
  size_t n_sites = static_cast<size_t>(spec.sites());
  if (qubit_of_site.empty()) {
    qubit_of_site.resize(n_sites);
    for (size_t k = 0; k < n_sites; k++) qubit_of_site[k] = k;
  }
  if (qubit_of_site.size() != n_sites)
    throw std::invalid_argument("qubit map must cover every site");
  if (total_qubits == 0)
    total_qubits = 1 + *std::max_element(qubit_of_site.begin(), qubit_of_site.end());
  t.qubit_of_site = qubit_of_site;
  t.total_qubits = total_qubits;

  for (int idx = 0; idx < spec.sites(); idx++) {
    Site s = spec.site(idx);
    PauliString g(total_qubits);
    g.set_letter(qubit_of_site[idx], Pauli::X);
    for (Site nb : spec.neighbors(s))
      g.set_letter(qubit_of_site[spec.index(nb)], Pauli::Z);
    t.generators.push_back(std::move(g));
  }
  return t;
}

// ---- Output verification ---------------------------------------------------------

enum class Verdict : uint8_t { Pass, Fail };

struct VerificationReport {
  Verdict verdict = Verdict::Fail;
  /// Target sites whose generator holds with a -1 sign absorbed by the frame.
  std::vector<Site> sign_fixes;
  /// Target sites whose generator is absent from the measured group, or whose
  /// sign disagrees with the frame record.
  std::vector<Site> mismatched_generators;
  size_t generators_checked = 0;
};

/// Checks that the tableau stabilizes the target cluster up to the tracked
/// Pauli frame: every target generator must be present in the measured
/// stabilizer group with its sign flipped exactly when the frame operator
/// anticommutes with it. Photons already consumed by a detector cannot be
/// verified and targeting one is an error.
inline VerificationReport verify_output(const StabilizerTableau& tableau,
                                        const PauliFrame& frame,
                                        const ClusterTarget& target,
                                        const std::set<size_t>& consumed = {}) {
  if (target.total_qubits != tableau.num_qubits())
    throw std::invalid_argument("target register does not match tableau");
  for (size_t q : target.qubit_of_site)
    if (consumed.count(q))
      throw std::invalid_argument("target references a consumed qubit");

  VerificationReport report;
  detail::GroupSolver solver(tableau.stabilizers());
  for (int idx = 0; idx < target.spec.sites(); idx++) {
    const PauliString& g = target.generators[idx];
    report.generators_checked++;
    auto found_sign = solver.solve(g);
    if (!found_sign) {
      report.mismatched_generators.push_back(target.spec.site(idx));
      continue;
    }
    bool frame_flip = frame.flips_sign_of(g);
    if (*found_sign != frame_flip) {
      report.mismatched_generators.push_back(target.spec.site(idx));
    } else if (frame_flip) {
      report.sign_fixes.push_back(target.spec.site(idx));
    }
  }
  report.verdict = report.mismatched_generators.empty() ? Verdict::Pass : Verdict::Fail;
  return report;
}

/// Adjacency inferred from completed parity measurements: every measured
/// generator contributes edges from its X-carrying center to each Z partner.
/// This is the gate-log route used to derive the rhombus template.
inline std::vector<std::pair<size_t, size_t>> edges_from_measured_ops(
    const std::vector<PauliString>& measured_ops) {
  std::set<std::pair<size_t, size_t>> acc;
  for (const auto& op : measured_ops) {
    std::vector<size_t> centers, partners;
    for (size_t q = 0; q < op.n; q++) {
      if (op.letter(q) == Pauli::X) centers.push_back(q);
      else if (op.letter(q) == Pauli::Z) partners.push_back(q);
    }
    if (centers.size() != 1) continue;  // not a single-center parity operator
    for (size_t p : partners)
      acc.insert(std::minmax(centers[0], p));
  }
  return {acc.begin(), acc.end()};
}

}  // namespace photonnet
