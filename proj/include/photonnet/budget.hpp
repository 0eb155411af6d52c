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
#include <stdexcept>
#include <string>

namespace photonnet {

/// Candidate atom-cavity systems with their expected cavity interaction times.
enum class CavitySystem : uint8_t { Cs, Rb, NV };

inline int64_t delta_t_ns(CavitySystem s) {
  switch (s) {
    case CavitySystem::Cs: return 300;
    case CavitySystem::Rb: return 30;
    case CavitySystem::NV: return 1;
  }
  throw std::invalid_argument("unknown cavity system");
}

inline const char* system_name(CavitySystem s) {
  switch (s) {
    case CavitySystem::Cs: return "Cs";
    case CavitySystem::Rb: return "Rb";
    case CavitySystem::NV: return "NV";
  }
  return "?";
}

/// Inputs of the feedforward budget check: the system's cavity interaction
/// time and the detector + feedforward chain latency.
struct TimingBudget {
  std::string system_label = "Cs";
  int64_t cavity_interaction_ns = 300;
  int64_t feedforward_ns = 150;

  static TimingBudget for_system(CavitySystem s, int64_t feedforward = 150) {
    return {system_name(s), delta_t_ns(s), feedforward};
  }
};

struct BudgetReport {
  std::string system;
  int64_t delta_t_ns = 0;
  int64_t slowdown = 1;
  int64_t interval_ns = 0;       // per-photon measurement interval
  int64_t feedforward_ns = 0;
  bool ok = false;
  int64_t min_slowdown = 1;      // smallest multiplier that makes it fit
};

/// Per-detector budget arithmetic for continuous consumption: photons on one
/// row arrive every 2*delta_t (times the slowdown), and the detection plus
/// feedforward chain must fit inside that interval. A feedforward latency of
/// zero always fits.
inline BudgetReport check_budget(const TimingBudget& budget, int64_t slowdown = 1) {
  if (slowdown < 1) throw std::invalid_argument("slowdown multiplier must be >= 1");
  if (budget.cavity_interaction_ns < 1)
    throw std::invalid_argument("delta_t must be at least 1 ns");
  if (budget.feedforward_ns < 0)
    throw std::invalid_argument("feedforward latency must be nonnegative");
  BudgetReport r;
  r.system = budget.system_label;
  r.delta_t_ns = budget.cavity_interaction_ns;
  r.slowdown = slowdown;
  r.feedforward_ns = budget.feedforward_ns;
  r.interval_ns = 2 * r.delta_t_ns * slowdown;
  r.ok = r.feedforward_ns <= r.interval_ns;
  int64_t base = 2 * r.delta_t_ns;
  r.min_slowdown = r.feedforward_ns <= base ? 1 : (r.feedforward_ns + base - 1) / base;
  return r;
}

inline BudgetReport check_budget(CavitySystem system, int64_t feedforward_ns,
                                 int64_t slowdown = 1) {
  return check_budget(TimingBudget::for_system(system, feedforward_ns), slowdown);
}

}  // namespace photonnet
