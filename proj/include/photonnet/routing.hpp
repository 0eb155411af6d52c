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

#include <array>
#include <optional>
#include <sstream>
#include <string>

#include "photonnet/module.hpp"

namespace photonnet {

// ---- Synchronous chip switching (six settings per cycle) ------------------------

enum class SyncLine : uint8_t { A, B, C, D, None };

inline char sync_line_char(SyncLine l) {
  switch (l) {
    case SyncLine::A: return 'a';
    case SyncLine::B: return 'b';
    case SyncLine::C: return 'c';
    case SyncLine::D: return 'd';
    case SyncLine::None: return '-';
  }
  return '?';
}

/// One row of the synchronous switching table: which line feeds the cavity,
/// which line the previous occupant leaves on, and how long the setting holds.
struct SyncSwitchRow {
  SyncLine input = SyncLine::None;   // line -> cav
  SyncLine output = SyncLine::None;  // cav -> line
  bool holds_dtp = false;            // held for delta_t' instead of delta_t
};

/// The six-setting synchronous cycle, top to bottom. Settings 1-5 hold for
/// delta_t; setting 6 holds for delta_t' while the atomic qubit is measured,
/// after which the pattern repeats.
inline SyncSwitchRow sync_switch_schedule(int step) {
  switch (((step - 1) % 6 + 6) % 6 + 1) {
    case 1: return {SyncLine::A, SyncLine::None, false};
    case 2: return {SyncLine::B, SyncLine::A, false};
    case 3: return {SyncLine::D, SyncLine::D, false};
    case 4: return {SyncLine::D, SyncLine::D, false};
    case 5: return {SyncLine::C, SyncLine::B, false};
    default: return {SyncLine::None, SyncLine::C, true};
  }
}

// ---- Asynchronous routing (ten chip types, period 10 delta_t) --------------------

/// Switch setting of one asynchronous chip at one step. Cavity-bound letters
/// name the photon's position in the measured stabilizer; '=' and '-' route
/// everything to the bypass lines. The center setting is the only one without
/// the Hadamard waveplate pair.
enum class AsyncSetting : char {
  Right = 'R',
  Top = 'T',
  Center = 'C',
  Bottom = 'B',
  Left = 'L',
  Hold = '=',
  Idle = '-',
};

inline bool cavity_bound(AsyncSetting s) {
  return s != AsyncSetting::Hold && s != AsyncSetting::Idle;
}

inline PhotonRole setting_role(AsyncSetting s) {
  switch (s) {
    case AsyncSetting::Right: return PhotonRole::Right;
    case AsyncSetting::Top: return PhotonRole::Top;
    case AsyncSetting::Center: return PhotonRole::Center;
    case AsyncSetting::Bottom: return PhotonRole::Bottom;
    case AsyncSetting::Left: return PhotonRole::Left;
    default: throw std::invalid_argument("setting is not cavity-bound");
  }
}

enum class ChipKind : uint8_t { A, B };

/// The ten-row, ten-step switching table of the asynchronous network.
/// Row order is A1, B1, A2, B2, ..., A5, B5; steps are separated by delta_t
/// and the whole table repeats after 10 delta_t. Within each column the A and
/// B chips alternate so one can be read out while the other interacts.
class RoutingTable {
 public:
  static constexpr int kColumns = 5;
  static constexpr int kPeriod = 10;

  std::array<std::array<AsyncSetting, kPeriod>, 2 * kColumns> rows{};

  static RoutingTable standard() {
    static const char* kTable[10] = {
        "R T C B L = - = - =",  // A1
        "= - = - = R T C B L",  // B1
        "= - R T C B L = - =",  // A2
        "B L = - = - = R T C",  // B2
        "- = - = R T C B L =",  // A3
        "T C B L = - = - = R",  // B3
        "L = - = - = R T C B",  // A4
        "= R T C B L = - = -",  // B4
        "C B L = - = - = R T",  // A5
        "= - = R T C B L = -",  // B5
    };
    std::ostringstream all;
    for (const char* line : kTable) all << line << "\n";
    return parse(all.str());
  }

  /// Parses 10 rows x 10 whitespace-separated single-character settings in
  /// row order A1 B1 A2 B2 ... A5 B5, then validates the table invariants.
  static RoutingTable parse(const std::string& text) {
    RoutingTable t;
    std::istringstream in(text);
    for (int r = 0; r < 2 * kColumns; r++) {
      for (int s = 0; s < kPeriod; s++) {
        std::string tok;
        if (!(in >> tok) || tok.size() != 1)
          throw std::invalid_argument("routing table needs 10x10 single-character settings");
        switch (tok[0]) {
          case 'R': case 'T': case 'C': case 'B': case 'L': case '=': case '-':
            t.rows[r][s] = static_cast<AsyncSetting>(tok[0]);
            break;
          default:
            throw std::invalid_argument(std::string("invalid routing setting '") + tok + "'");
        }
      }
    }
    std::string extra;
    if (in >> extra)
      throw std::invalid_argument("routing table has trailing tokens");
    t.validate();
    return t;
  }

  /// Each chip row must use each of {R,T,C,B,L} exactly once per period, and
  /// the A and B chips of a column must never be cavity-bound simultaneously.
  void validate() const {
    for (int r = 0; r < 2 * kColumns; r++) {
      int counts[5] = {0, 0, 0, 0, 0};
      for (auto s : rows[r]) {
        switch (s) {
          case AsyncSetting::Right: counts[0]++; break;
          case AsyncSetting::Top: counts[1]++; break;
          case AsyncSetting::Center: counts[2]++; break;
          case AsyncSetting::Bottom: counts[3]++; break;
          case AsyncSetting::Left: counts[4]++; break;
          default: break;
        }
      }
      for (int c = 0; c < 5; c++)
        if (counts[c] != 1)
          throw std::invalid_argument("each chip row must take every role exactly once per period");
      int run_starts = 0;
      for (int s = 0; s < kPeriod; s++) {
        int prev = (s + kPeriod - 1) % kPeriod;
        if (cavity_bound(rows[r][s]) && !cavity_bound(rows[r][prev])) run_starts++;
      }
      if (run_starts != 1)
        throw std::invalid_argument(
            "cavity-bound settings must form one contiguous 5-step window per period");
    }
    for (int col = 1; col <= kColumns; col++)
      for (int step = 1; step <= kPeriod; step++)
        if (cavity_bound(setting(col, ChipKind::A, step)) &&
            cavity_bound(setting(col, ChipKind::B, step)))
          throw std::invalid_argument("A and B chips of a column are cavity-bound together");
  }

  /// Setting of the (column, kind) chip type at a 1-based step (any step >= 1;
  /// the table repeats every 10).
  AsyncSetting setting(int column, ChipKind kind, int64_t step) const {
    if (column < 1 || column > kColumns) throw std::out_of_range("column must be 1..5");
    if (step < 1) throw std::out_of_range("steps are 1-based");
    int row = 2 * (column - 1) + (kind == ChipKind::B ? 1 : 0);
    return rows[row][(step - 1) % kPeriod];
  }
};

/// Chip-type setting at a step. With the standard table,
/// column k equals column 1 shifted by 2(k-1) steps.
inline AsyncSetting async_setting(const RoutingTable& table, int column, ChipKind kind,
                                  int64_t step) {
  return table.setting(column, kind, step);
}

}  // namespace photonnet
