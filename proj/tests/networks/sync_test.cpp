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

#include "photonnet/net_sync.hpp"

#include <gtest/gtest.h>

using namespace photonnet;

namespace {

SyncRunConfig base(int rows, int columns, uint64_t seed) {
  SyncRunConfig cfg;
  cfg.rows = rows;
  cfg.columns = columns;
  cfg.seed = seed;
  cfg.consume = ConsumeMode::None;
  return cfg;
}

}  // namespace

TEST(SyncNetwork, FiveByTenVerifiesAsSquareCluster) {
  NetworkOutput out = run_sync(base(5, 10, 1));
  EXPECT_EQ(out.result.verification.verdict, "pass");
  EXPECT_EQ(out.result.verification.generators_checked, 50u);
  EXPECT_EQ(out.result.photons_emitted, 50);
  EXPECT_TRUE(out.result.role_coverage_ok);
}

TEST(SyncNetwork, SingleRowMakesAChain) {
  NetworkOutput out = run_sync(base(1, 10, 4));
  EXPECT_EQ(out.result.verification.verdict, "pass");
  for (const auto& w : out.windows)
    EXPECT_LE(w.op.weight(), 3u);  // L C R only: boundary rule drops T and B
}

TEST(SyncNetwork, RateIsOneColumnPerCycle) {
  for (int rows : {1, 3, 5, 8}) {
    NetworkOutput out = run_sync(base(rows, 8, 2));
    EXPECT_EQ(out.result.throughput.steady_ticks_per_column, 5 + 1)
        << rows << " rows";  // 5dt + dt' with dtp_ticks = 1
    EXPECT_TRUE(out.result.throughput.steady_rate_uniform);
  }
}

TEST(SyncNetwork, WarmupIsRowsMinusOneCycles) {
  EXPECT_EQ(run_sync(base(5, 10, 0)).result.throughput.warmup_cycles, 4);
  EXPECT_EQ(run_sync(base(3, 8, 0)).result.throughput.warmup_cycles, 2);
}

// Per-photon chip transits take exactly the two design values:
// 5dt+dt' on lines a and c, 15dt+3dt' on line b.
TEST(SyncNetwork, TransitHistogramHasTwoSupportPoints) {
  NetworkOutput out = run_sync(base(5, 10, 7));
  const int64_t T = 6;
  ASSERT_EQ(out.result.latency_histogram.size(), 2u);
  EXPECT_EQ(out.result.latency_histogram.at(T), 2 * 4 * 10);  // a and c passes
  EXPECT_EQ(out.result.latency_histogram.at(3 * T), 50);      // every b pass
}

TEST(SyncNetwork, AtomWindowIsOneCycleExactly) {
  NetworkOutput out = run_sync(base(4, 7, 3));
  ASSERT_EQ(out.result.atom_window_histogram.size(), 1u);
  EXPECT_EQ(out.result.atom_window_histogram.begin()->first, 6);
  int64_t windows = out.result.atom_window_histogram.begin()->second;
  EXPECT_EQ(windows, 4 * 7);  // one active window per lattice site
}

TEST(SyncNetwork, EveryPhotonJoinsTheRightNumberOfMeasurements) {
  NetworkOutput out = run_sync(base(5, 10, 9));
  for (int r = 0; r < 5; r++)
    for (int c = 0; c < 10; c++) {
      const auto& roles = out.photons[static_cast<size_t>(r) * 10 + c].roles;
      size_t expect = 1;  // C
      if (r + 1 < 5) expect++;
      if (r >= 1) expect++;
      if (c >= 1) expect++;
      if (c + 1 < 10) expect++;
      EXPECT_EQ(roles.size(), expect) << "photon " << r << "," << c;
    }
}

// The feedback line d carries only the photons awaiting their second and
// third passes: never more than two at once.
TEST(SyncNetwork, FeedbackLineHoldsAtMostTwoPhotons) {
  NetworkOutput out = run_sync(base(4, 8, 6));
  const int64_t T = 6;
  std::map<int64_t, std::vector<std::pair<int64_t, int64_t>>> d_intervals;  // chip -> spans
  for (const auto& e : out.result.trace) {
    if (e.kind != EventKind::CavityIn) continue;
    int64_t step_offset = ((e.time % T) + T) % T;
    if (step_offset == 1 || step_offset == 2)  // steps 2 and 3 exit into line d
      d_intervals[e.chip].emplace_back(e.time + 1, e.time + 7);
  }
  for (const auto& [chip, spans] : d_intervals) {
    std::map<int64_t, int> delta;
    for (const auto& [from, to] : spans) {
      delta[from]++;
      delta[to]--;
    }
    int occupancy = 0;
    for (const auto& [tick, d] : delta) {
      occupancy += d;
      EXPECT_LE(occupancy, 2) << "chip " << chip << " tick " << tick;
    }
  }
}

TEST(SyncNetwork, CavityHoldsAtMostOnePhotonPerTick) {
  NetworkOutput out = run_sync(base(4, 8, 5));
  std::map<std::pair<int64_t, int64_t>, int> occupancy;  // (chip, tick)
  for (const auto& e : out.result.trace)
    if (e.kind == EventKind::CavityIn) {
      int count = ++occupancy[std::make_pair(e.chip, e.time)];
      EXPECT_EQ(count, 1);
    }
}

TEST(SyncNetwork, SeedsOnlyChangeTheFrame) {
  for (uint64_t seed = 0; seed < 20; seed++) {
    SyncRunConfig cfg = base(3, 6, seed);
    cfg.keep_trace = false;
    EXPECT_EQ(run_sync(cfg).result.verification.verdict, "pass") << "seed " << seed;
  }
}

TEST(SyncNetwork, PrerollIsConfinedToTheBottomRowFirstPhoton) {
  NetworkOutput out = run_sync(base(5, 10, 0));
  int preroll_emits = 0;
  for (const auto& e : out.result.trace) {
    if (e.time < 0) {
      EXPECT_TRUE(e.kind == EventKind::Emit || e.kind == EventKind::CavityIn ||
                  e.kind == EventKind::CavityOut);
      if (e.kind == EventKind::Emit) preroll_emits++;
    }
  }
  EXPECT_EQ(preroll_emits, 1);
}

TEST(SyncNetwork, ConsumedRunSkipsVerification) {
  SyncRunConfig cfg = base(3, 6, 1);
  cfg.consume = ConsumeMode::X;
  NetworkOutput out = run_sync(cfg);
  EXPECT_EQ(out.result.verification.verdict, "skipped (consumed)");
  EXPECT_EQ(out.result.photons_consumed, out.result.photons_exited);
  int detects = 0;
  for (const auto& e : out.result.trace)
    if (e.kind == EventKind::Detect) detects++;
  EXPECT_EQ(detects, 18);
}

TEST(SyncNetwork, PreconditionsAreEnforced) {
  EXPECT_THROW(run_sync(base(0, 10, 0)), std::invalid_argument);
  EXPECT_THROW(run_sync(base(5, 4, 0)), std::invalid_argument);
  SyncRunConfig bad = base(2, 6, 0);
  bad.slowdown = 0;
  EXPECT_THROW(run_sync(bad), std::invalid_argument);
}

TEST(SyncNetwork, SlowdownScalesTheCycle) {
  SyncRunConfig cfg = base(2, 6, 3);
  cfg.slowdown = 2;
  NetworkOutput out = run_sync(cfg);
  EXPECT_EQ(out.result.verification.verdict, "pass");
  EXPECT_EQ(out.result.throughput.steady_ticks_per_column, 12);
}

// Windows co-locate exactly one column's stabilizer support: the measured
// operator is the cluster generator of its center site.
TEST(SyncNetwork, MeasuredOperatorsAreTheTargetGenerators) {
  NetworkOutput out = run_sync(base(4, 6, 8));
  LatticeSpec lat{6, 4, LatticeKind::Square};
  ClusterTarget target = cluster_stabilizers(lat, [] {
    std::vector<size_t> map(24);
    for (int idx = 0; idx < 24; idx++) {
      int i = idx % 6, j = idx / 6;
      map[static_cast<size_t>(idx)] = static_cast<size_t>(j) * 6 + i;
    }
    return map;
  }(), 24 + 4);
  EXPECT_EQ(out.windows.size(), 24u);
  for (const auto& w : out.windows) {
    const PauliString& want = target.generator_at(w.center);
    EXPECT_TRUE(w.op.same_support(want)) << site_str(w.center);
  }
}
