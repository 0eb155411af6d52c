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
#include <random>

namespace photonnet {

/// Seedable PRNG owned by one simulation run. Every random outcome is
/// reproducible from (seed, event order). The distributions are hand-rolled
/// because std::uniform_int_distribution is not bit-identical across
/// standard library implementations; mt19937_64 itself is.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : gen_(seed) {}

  uint64_t u64() { return gen_(); }

  /// Fair coin: +1 or -1.
  int coin() { return (gen_() & 1u) ? -1 : +1; }

  bool boolean() { return (gen_() & 1u) != 0; }

  /// Uniform integer in [0, bound) via rejection sampling.
  uint64_t below(uint64_t bound) {
    if (bound == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do { v = gen_(); } while (v >= limit);
    return v % bound;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace photonnet
