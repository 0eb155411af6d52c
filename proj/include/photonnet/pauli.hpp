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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace photonnet {

enum class Pauli : uint8_t { I, X, Y, Z };

inline char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

/// An n-qubit Pauli operator in binary-symplectic form with a real sign.
/// Qubit q carries I/X/Z/Y according to (x_bit, z_bit) = (0,0)/(1,0)/(0,1)/(1,1).
/// Imaginary global phases never arise for the operators used here; any product
/// that would produce one throws instead of silently normalizing.
class PauliString {
 public:
  size_t n = 0;
  std::vector<uint64_t> x;  // X components, bit per qubit
  std::vector<uint64_t> z;  // Z components
  bool neg = false;         // sign: false -> +1, true -> -1

  PauliString() = default;

  explicit PauliString(size_t num_qubits)
      : n(num_qubits), x(words(num_qubits), 0), z(words(num_qubits), 0) {}

  static size_t words(size_t n) { return (n + 63) / 64; }

  /// Parse "+XZI", "-YY", "XX" (no prefix means +).
  static PauliString from_string(const std::string& s) {
    size_t off = 0;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
      negative = (s[0] == '-');
      off = 1;
    }
    PauliString p(s.size() - off);
    p.neg = negative;
    for (size_t q = 0; q + off < s.size(); q++) {
      switch (s[q + off]) {
        case 'I': case 'i': break;
        case 'X': case 'x': p.set_x(q, true); break;
        case 'Z': case 'z': p.set_z(q, true); break;
        case 'Y': case 'y': p.set_x(q, true); p.set_z(q, true); break;
        default:
          throw std::invalid_argument("invalid Pauli letter in \"" + s + "\"");
      }
    }
    return p;
  }

  static PauliString single(size_t n, size_t qubit, Pauli letter, bool negative = false) {
    PauliString p(n);
    p.set_letter(qubit, letter);
    p.neg = negative;
    return p;
  }

  bool get_x(size_t q) const { return (x[q >> 6] >> (q & 63)) & 1u; }
  bool get_z(size_t q) const { return (z[q >> 6] >> (q & 63)) & 1u; }

  void set_x(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) x[q >> 6] |= m; else x[q >> 6] &= ~m;
  }
  void set_z(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    if (v) z[q >> 6] |= m; else z[q >> 6] &= ~m;
  }

  Pauli letter(size_t q) const {
    bool xb = get_x(q), zb = get_z(q);
    if (xb && zb) return Pauli::Y;
    if (xb) return Pauli::X;
    if (zb) return Pauli::Z;
    return Pauli::I;
  }

  void set_letter(size_t q, Pauli p) {
    set_x(q, p == Pauli::X || p == Pauli::Y);
    set_z(q, p == Pauli::Z || p == Pauli::Y);
  }

  size_t weight() const {
    size_t w = 0;
    for (size_t i = 0; i < x.size(); i++) w += std::popcount(x[i] | z[i]);
    return w;
  }

  bool is_identity() const {
    for (size_t i = 0; i < x.size(); i++)
      if (x[i] | z[i]) return false;
    return true;
  }

  bool same_support(const PauliString& o) const {
    return x == o.x && z == o.z;
  }

  /// Symplectic inner product over GF(2): 0 iff the operators commute.
  bool commutes(const PauliString& o) const {
    if (o.n != n) throw std::invalid_argument("qubit count mismatch");
    uint64_t acc = 0;
    for (size_t i = 0; i < x.size(); i++)
      acc ^= (x[i] & o.z[i]) ^ (z[i] & o.x[i]);
    return std::popcount(acc) % 2 == 0;
  }

  /// In-place product this <- this * o, tracking the phase exactly.
  /// Throws if the product carries an imaginary phase (the two anticommute).
  void mul(const PauliString& o) {
    if (o.n != n) throw std::invalid_argument("qubit count mismatch");
    // Per-qubit i-exponent of letter1*letter2, accumulated word-parallel.
    // +1 cases: XY, YZ, ZX; -1 cases: XZ, YX, ZY.
    int64_t cnt = 0;
    for (size_t i = 0; i < x.size(); i++) {
      uint64_t x1 = x[i], z1 = z[i], x2 = o.x[i], z2 = o.z[i];
      uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
      uint64_t minus = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
      cnt += std::popcount(plus);
      cnt -= std::popcount(minus);
      x[i] = x1 ^ x2;
      z[i] = z1 ^ z2;
    }
    int phase = static_cast<int>(((cnt % 4) + 4) % 4);
    if (neg) phase = (phase + 2) % 4;
    if (o.neg) phase = (phase + 2) % 4;
    if (phase == 1 || phase == 3)
      throw std::logic_error("Pauli product has imaginary phase");
    neg = (phase == 2);
  }

  bool operator==(const PauliString& o) const {
    return n == o.n && neg == o.neg && x == o.x && z == o.z;
  }

  std::string str() const {
    std::string s;
    s.reserve(n + 1);
    s.push_back(neg ? '-' : '+');
    for (size_t q = 0; q < n; q++) s.push_back(pauli_char(letter(q)));
    return s;
  }
};

}  // namespace photonnet
