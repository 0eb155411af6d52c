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

#include "photonnet/module.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "../support/cosim.hpp"

using namespace photonnet;
using photonnet::testing::CoSim;

TEST(InteractionTime, ClosedForm) {
  EXPECT_DOUBLE_EQ(interaction_time(1, 1), std::numbers::pi);
  EXPECT_DOUBLE_EQ(interaction_time(2, 4), std::numbers::pi);
  EXPECT_DOUBLE_EQ(interaction_time(1, -2), 2 * std::numbers::pi);
  EXPECT_THROW(interaction_time(0, 1), std::invalid_argument);
  EXPECT_THROW(interaction_time(1, 0), std::invalid_argument);
  EXPECT_THROW(interaction_time(-1, 1), std::invalid_argument);
}

TEST(InteractionParams, DerivedQuantities) {
  InteractionParams p{2.0, -8.0, 1e-9, 0};
  EXPECT_DOUBLE_EQ(p.beta(), 0.5);  // -g^2/Delta
  EXPECT_DOUBLE_EQ(p.t_int(), 2 * std::numbers::pi);
  p.validate();
  InteractionParams bad = p;
  bad.delta_t_s = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(PhotonRoles, OnlyCenterSkipsTheWaveplate) {
  EXPECT_FALSE(basis_rotation(PhotonRole::Center));
  for (PhotonRole r : {PhotonRole::Top, PhotonRole::Bottom, PhotonRole::Left, PhotonRole::Right})
    EXPECT_TRUE(basis_rotation(r));
  EXPECT_EQ(role_letter(PhotonRole::Center), Pauli::X);
  EXPECT_EQ(role_letter(PhotonRole::Top), Pauli::Z);
}

TEST(ModuleCycle, CenterPhotonInPlusIsDeterministic) {
  StabilizerTableau engine(2);  // photon 0, atom 1
  PauliFrame frame(2);
  Rng rng(3);
  engine.h(0);
  auto before = engine.canonical_stabilizers();
  ModuleState module(1);
  ParityOutcome out =
      module_cycle(engine, module, {0}, {PhotonRole::Center}, frame, rng);
  EXPECT_EQ(out.outcome, +1);
  EXPECT_FALSE(out.recovery_pushed);
  EXPECT_EQ(engine.canonical_stabilizers(), before);
  EXPECT_EQ(out.op.str(), "+XI");
}

// Three photons in |000> with roles Center/Top/Bottom measure X(x)Z(x)Z, which
// anticommutes with Z on the center photon: the outcome is random and the
// post-state is fixed by the 3-qubit state-vector oracle.
TEST(ModuleCycle, ThreePhotonParityMatchesOracle) {
  bool saw_plus = false, saw_minus = false;
  for (uint64_t seed = 0; seed < 20; seed++) {
    StabilizerTableau engine(4);  // photons 0..2, atom 3
    StateVector psi(3);
    PauliFrame frame(4);
    Rng rng(seed);
    ModuleState module(3);
    ParityOutcome out = module_cycle(
        engine, module, {0, 1, 2},
        {PhotonRole::Center, PhotonRole::Top, PhotonRole::Bottom}, frame, rng);
    EXPECT_EQ(out.op.str(), "+XZZI");
    PauliMeasurement om = measure_pauli(psi, PauliString::from_string("XZZ"));
    EXPECT_NEAR(om.p_plus, 0.5, kOracleTolerance);  // oracle says random
    psi = out.outcome > 0 ? om.post_plus : om.post_minus;
    // Compare the photon marginal: atom is disentangled after readout, so
    // check each photon-only stabilizer against the oracle state.
    detail::GroupSolver solver(engine.stabilizers());
    PauliString meas = PauliString::from_string("XZZ");
    PauliString embedded(4);
    for (size_t q = 0; q < 3; q++) embedded.set_letter(q, meas.letter(q));
    auto sign = solver.solve(embedded);
    ASSERT_TRUE(sign.has_value());
    EXPECT_EQ(*sign, out.outcome < 0);
    EXPECT_EQ(out.recovery_pushed, out.outcome < 0);
    if (out.outcome < 0) EXPECT_EQ(frame.letter(0), Pauli::Z);  // Z on the center
    (out.outcome > 0 ? saw_plus : saw_minus) = true;
  }
  EXPECT_TRUE(saw_plus);
  EXPECT_TRUE(saw_minus);
}

// module_cycle must agree bit-for-bit with measure_pauli_product of the
// role-derived operator on the same seed, for random stabilizer inputs.
TEST(ModuleCycle, EquivalentToDirectProductMeasurement) {
  Rng circuit_rng(314);
  for (int trial = 0; trial < 100; trial++) {
    size_t photons = 1 + circuit_rng.below(4);
    size_t n = photons + 1;
    StabilizerTableau a(n);
    Rng state_rng(9000 + static_cast<uint64_t>(trial));
    for (int d = 0; d < 12; d++) {
      size_t q = circuit_rng.below(photons);
      switch (circuit_rng.below(4)) {
        case 0: a.h(q); break;
        case 1: a.s(q); break;
        case 2: if (photons > 1) a.cnot(q, (q + 1) % photons); break;
        default: {
          PauliString sub = photonnet::testing::random_pauli(photons, circuit_rng);
          PauliString p(n);
          for (size_t i = 0; i < photons; i++) p.set_letter(i, sub.letter(i));
          a.measure_pauli_product(p, state_rng);
          break;
        }
      }
    }
    StabilizerTableau b = a;  // the engine is a value

    std::vector<size_t> ids;
    std::vector<PhotonRole> roles;
    PauliString op(n);
    size_t center = circuit_rng.below(photons);
    for (size_t q = 0; q < photons; q++) {
      ids.push_back(q);
      PhotonRole role = q == center ? PhotonRole::Center
                                    : (q % 2 ? PhotonRole::Top : PhotonRole::Left);
      roles.push_back(role);
      op.set_letter(q, role_letter(role));
    }

    uint64_t seed = 4242 + static_cast<uint64_t>(trial);
    PauliFrame frame_a(n), frame_b(n);
    Rng rng_a(seed), rng_b(seed);
    ModuleState module(photons);
    ParityOutcome via_module =
        module_cycle(a, module, ids, roles, frame_a, rng_a, 0, 0, trial);

    int direct = b.measure_pauli_product(op, rng_b).outcome;
    if (direct < 0) {
      auto passes = via_module.passes;
      auto [q, letter] = ModuleState::recovery_for(op, passes);
      frame_b.push(trial, direct, q, letter);
    }

    ASSERT_EQ(via_module.outcome, direct) << "trial " << trial;
    // The module also resets and measures its atom; compare photon content by
    // checking group membership of the measured operator and frame equality.
    EXPECT_EQ(frame_a.as_pauli().str(), frame_b.as_pauli().str());
    detail::GroupSolver sa(a.stabilizers());
    detail::GroupSolver sb(b.stabilizers());
    PauliString signed_op = op;
    auto sign_a = sa.solve(signed_op);
    auto sign_b = sb.solve(signed_op);
    ASSERT_TRUE(sign_a.has_value());
    ASSERT_TRUE(sign_b.has_value());
    EXPECT_EQ(*sign_a, *sign_b);
  }
}

TEST(ModuleCycle, MeasuredLettersMatchRolesInLog) {
  Rng circuit_rng(99);
  for (int trial = 0; trial < 40; trial++) {
    size_t photons = 1 + circuit_rng.below(5);
    StabilizerTableau engine(photons + 1);
    PauliFrame frame(photons + 1);
    Rng rng(static_cast<uint64_t>(trial));
    std::vector<size_t> ids;
    std::vector<PhotonRole> roles;
    for (size_t q = 0; q < photons; q++) {
      ids.push_back(q);
      switch (circuit_rng.below(5)) {
        case 0: roles.push_back(PhotonRole::Center); break;
        case 1: roles.push_back(PhotonRole::Top); break;
        case 2: roles.push_back(PhotonRole::Bottom); break;
        case 3: roles.push_back(PhotonRole::Left); break;
        default: roles.push_back(PhotonRole::Right); break;
      }
    }
    ModuleState module(photons);
    ParityOutcome out = module_cycle(engine, module, ids, roles, frame, rng);
    ASSERT_EQ(out.passes.size(), photons);
    for (size_t i = 0; i < photons; i++) {
      EXPECT_EQ(out.passes[i].photon, ids[i]);
      EXPECT_EQ(out.passes[i].role, roles[i]);
      EXPECT_EQ(out.op.letter(ids[i]), role_letter(roles[i]));
    }
  }
}

TEST(ModuleCycle, AtomDisentangledAfterReadout) {
  for (uint64_t seed = 0; seed < 10; seed++) {
    StabilizerTableau engine(4);
    PauliFrame frame(4);
    Rng rng(seed);
    for (size_t q = 0; q < 3; q++) engine.h(q);
    ModuleState module(3);
    module_cycle(engine, module, {0, 1, 2},
                 {PhotonRole::Left, PhotonRole::Center, PhotonRole::Right}, frame, rng);
    // The atom's post-readout state is a +/-Z eigenstate: Z_atom is in the group.
    detail::GroupSolver solver(engine.stabilizers());
    EXPECT_TRUE(solver.solve(PauliString::single(4, 3, Pauli::Z)).has_value());
  }
}

// On |+>^N inputs with one center the operator anticommutes with each
// neighbor's X stabilizer: outcomes are random, and after the frame recovery
// the target generator always holds with +1.
TEST(ModuleCycle, PlusInputsGiveRandomOutcomeAndCleanRecovery) {
  int plus = 0;
  const int kTrials = 400;
  for (int t = 0; t < kTrials; t++) {
    StabilizerTableau engine(4);
    PauliFrame frame(4);
    Rng rng(static_cast<uint64_t>(t));
    for (size_t q = 0; q < 3; q++) engine.h(q);
    ModuleState module(3);
    ParityOutcome out = module_cycle(
        engine, module, {0, 1, 2},
        {PhotonRole::Top, PhotonRole::Center, PhotonRole::Bottom}, frame, rng);
    if (out.outcome > 0) plus++;
    detail::GroupSolver solver(engine.stabilizers());
    auto sign = solver.solve(out.op);
    ASSERT_TRUE(sign.has_value());
    EXPECT_EQ(*sign, frame.flips_sign_of(out.op));  // +1 once the frame is absorbed
  }
  EXPECT_GT(plus, kTrials / 2 - 60);
  EXPECT_LT(plus, kTrials / 2 + 60);
}

TEST(ModuleCycle, RejectsBadInputs) {
  StabilizerTableau engine(7);
  PauliFrame frame(7);
  Rng rng(0);
  ModuleState module(6);
  EXPECT_THROW(module_cycle(engine, module, {}, {}, frame, rng), std::invalid_argument);
  EXPECT_THROW(module_cycle(engine, module, {0, 1}, {PhotonRole::Center}, frame, rng),
               std::invalid_argument);
  EXPECT_THROW(module_cycle(engine, module, {0, 0},
                            {PhotonRole::Center, PhotonRole::Top}, frame, rng),
               std::invalid_argument);
  std::vector<size_t> six{0, 1, 2, 3, 4, 5};
  std::vector<PhotonRole> roles(6, PhotonRole::Top);
  EXPECT_THROW(module_cycle(engine, module, six, roles, frame, rng), std::invalid_argument);
}

TEST(ModuleState, DoubleBookingIsRejected) {
  StabilizerTableau engine(2);
  Rng rng(0);
  ModuleState module(1);
  module.begin_cycle(engine, rng, 0);
  EXPECT_THROW(module.begin_cycle(engine, rng, 1), std::logic_error);
}

TEST(ModuleState, AtomWindowArithmetic) {
  ParityOutcome cycle;
  cycle.init_tick = 4;
  cycle.readout_tick = 10;
  EXPECT_EQ(ModuleState::atom_window(cycle), 6);
  cycle.readout_tick = 2;
  EXPECT_THROW(ModuleState::atom_window(cycle), std::invalid_argument);
}

// A single-photon cycle keeps the atom alive for 1dt plus the readout interval.
TEST(ModuleState, SinglePhotonWindowIsOneTickPlusReadout) {
  StabilizerTableau engine(2);
  PauliFrame frame(2);
  Rng rng(1);
  engine.h(0);
  ModuleState module(1);
  ParityOutcome out =
      module_cycle(engine, module, {0}, {PhotonRole::Center}, frame, rng, 10, 3);
  EXPECT_EQ(ModuleState::atom_window(out), 1 + 3);
}

TEST(ModuleState, PassWithoutInitIsRejected) {
  StabilizerTableau engine(2);
  ModuleState module(1);
  EXPECT_THROW(module.pass(engine, 0, PhotonRole::Center, 0), std::logic_error);
}
