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

#include "photonnet/pauli.hpp"

#include <gtest/gtest.h>

using namespace photonnet;

TEST(PauliString, ParseAndPrintRoundTrip) {
  for (const char* s : {"+XZIY", "-YY", "+I", "+XXXXX", "-ZIZIZ"}) {
    PauliString p = PauliString::from_string(s);
    EXPECT_EQ(p.str(), s);
  }
  EXPECT_EQ(PauliString::from_string("XZ").str(), "+XZ");  // no prefix means +
  EXPECT_THROW(PauliString::from_string("XQ"), std::invalid_argument);
}

TEST(PauliString, LetterEncoding) {
  PauliString p = PauliString::from_string("IXZY");
  EXPECT_EQ(p.letter(0), Pauli::I);
  EXPECT_EQ(p.letter(1), Pauli::X);
  EXPECT_EQ(p.letter(2), Pauli::Z);
  EXPECT_EQ(p.letter(3), Pauli::Y);
  EXPECT_FALSE(p.get_x(0));
  EXPECT_FALSE(p.get_z(0));
  EXPECT_TRUE(p.get_x(1));
  EXPECT_FALSE(p.get_z(1));
  EXPECT_FALSE(p.get_x(2));
  EXPECT_TRUE(p.get_z(2));
  EXPECT_TRUE(p.get_x(3));
  EXPECT_TRUE(p.get_z(3));
}

TEST(PauliString, WeightCountsNonIdentity) {
  EXPECT_EQ(PauliString::from_string("IIII").weight(), 0u);
  EXPECT_EQ(PauliString::from_string("XIZY").weight(), 3u);
  PauliString wide(100);
  wide.set_letter(3, Pauli::X);
  wide.set_letter(99, Pauli::Y);
  EXPECT_EQ(wide.weight(), 2u);
}

TEST(PauliString, CommutationIsSymplecticProduct) {
  auto P = [](const char* s) { return PauliString::from_string(s); };
  EXPECT_TRUE(P("XX").commutes(P("ZZ")));
  EXPECT_FALSE(P("X").commutes(P("Z")));
  EXPECT_FALSE(P("X").commutes(P("Y")));
  EXPECT_TRUE(P("XZ").commutes(P("ZX")));
  EXPECT_TRUE(P("XIX").commutes(P("IZI")));
  EXPECT_FALSE(P("XZZ").commutes(P("ZII")));
}

TEST(PauliString, ProductTracksRealSigns) {
  auto P = [](const char* s) { return PauliString::from_string(s); };
  PauliString a = P("XX");
  a.mul(P("ZZ"));
  EXPECT_EQ(a.str(), "-YY");  // (XZ)(x)(XZ) = (-iY)(-iY)
  PauliString b = P("XX");
  b.mul(P("XX"));
  EXPECT_EQ(b.str(), "+II");
  PauliString c = P("-Z");
  c.mul(P("-Z"));
  EXPECT_EQ(c.str(), "+I");
  PauliString d = P("YY");
  d.mul(P("XX"));
  EXPECT_EQ(d.str(), "-ZZ");  // (YX)(x)(YX) = (-iZ)(-iZ)
}

TEST(PauliString, AnticommutingProductIsRejected) {
  PauliString a = PauliString::from_string("X");
  EXPECT_THROW(a.mul(PauliString::from_string("Z")), std::logic_error);
}

TEST(PauliString, WordBoundaryBitsSurviveProducts) {
  PauliString a(130), b(130);
  a.set_letter(63, Pauli::X);
  a.set_letter(64, Pauli::Z);
  b.set_letter(63, Pauli::X);
  b.set_letter(64, Pauli::Z);
  b.set_letter(129, Pauli::Y);
  a.mul(b);
  EXPECT_EQ(a.letter(63), Pauli::I);
  EXPECT_EQ(a.letter(64), Pauli::I);
  EXPECT_EQ(a.letter(129), Pauli::Y);
  EXPECT_FALSE(a.neg);
}
