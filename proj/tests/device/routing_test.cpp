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

#include "photonnet/routing.hpp"

#include <gtest/gtest.h>

using namespace photonnet;

TEST(SyncSchedule, TableRowsVerbatim) {
  auto row1 = sync_switch_schedule(1);
  EXPECT_EQ(row1.input, SyncLine::A);
  EXPECT_EQ(row1.output, SyncLine::None);
  EXPECT_FALSE(row1.holds_dtp);

  auto row5 = sync_switch_schedule(5);
  EXPECT_EQ(row5.input, SyncLine::C);
  EXPECT_EQ(row5.output, SyncLine::B);

  auto row6 = sync_switch_schedule(6);
  EXPECT_EQ(row6.input, SyncLine::None);
  EXPECT_EQ(row6.output, SyncLine::C);
  EXPECT_TRUE(row6.holds_dtp);

  EXPECT_EQ(sync_switch_schedule(3).input, SyncLine::D);
  EXPECT_EQ(sync_switch_schedule(3).output, SyncLine::D);
  EXPECT_EQ(sync_switch_schedule(4).input, SyncLine::D);
  EXPECT_EQ(sync_switch_schedule(2).output, SyncLine::A);
}

TEST(SyncSchedule, SixStepPeriod) {
  for (int s = 1; s <= 6; s++) {
    EXPECT_EQ(sync_switch_schedule(s).input, sync_switch_schedule(s + 6).input);
    EXPECT_EQ(sync_switch_schedule(s).output, sync_switch_schedule(s + 12).output);
  }
}

TEST(RoutingTable, StandardTableEntries) {
  RoutingTable t = RoutingTable::standard();
  EXPECT_EQ(async_setting(t, 1, ChipKind::A, 1), AsyncSetting::Right);
  EXPECT_EQ(async_setting(t, 1, ChipKind::A, 3), AsyncSetting::Center);
  EXPECT_EQ(async_setting(t, 3, ChipKind::B, 10), AsyncSetting::Right);
  EXPECT_EQ(async_setting(t, 2, ChipKind::B, 1), AsyncSetting::Bottom);
  EXPECT_EQ(async_setting(t, 5, ChipKind::A, 1), AsyncSetting::Center);
  EXPECT_EQ(async_setting(t, 4, ChipKind::B, 2), AsyncSetting::Right);
}

TEST(RoutingTable, PeriodIsTen) {
  RoutingTable t = RoutingTable::standard();
  for (int col = 1; col <= 5; col++)
    for (ChipKind kind : {ChipKind::A, ChipKind::B})
      for (int s = 1; s <= 30; s++)
        EXPECT_EQ(t.setting(col, kind, s), t.setting(col, kind, s + 10));
}

// Column k is column 1 shifted by 2(k-1) steps. The physical content is the
// cavity-bound letters: the idle filler alternates = and - differently at the
// period wrap, and both idle symbols bypass everything.
TEST(RoutingTable, ColumnOffsetIsTwoSteps) {
  RoutingTable t = RoutingTable::standard();
  for (int col = 2; col <= 5; col++)
    for (ChipKind kind : {ChipKind::A, ChipKind::B})
      for (int s = 1; s <= 10; s++) {
        AsyncSetting shifted = t.setting(col, kind, s + 2 * (col - 1));
        AsyncSetting original = t.setting(1, kind, s);
        if (cavity_bound(shifted) || cavity_bound(original))
          EXPECT_EQ(shifted, original) << "col " << col << " step " << s;
      }
}

TEST(RoutingTable, EveryRoleOncePerPeriodAndABExclusion) {
  EXPECT_NO_THROW(RoutingTable::standard().validate());
  for (int col = 1; col <= 5; col++)
    for (int s = 1; s <= 10; s++) {
      RoutingTable t = RoutingTable::standard();
      EXPECT_FALSE(cavity_bound(t.setting(col, ChipKind::A, s)) &&
                   cavity_bound(t.setting(col, ChipKind::B, s)));
    }
}

TEST(RoutingTable, ParserRejectsBadTables) {
  EXPECT_THROW(RoutingTable::parse("R T C B"), std::invalid_argument);
  std::string doubled =
      "R T C B L = - = - =\n= - = - = R T C B L\n= - R T C B L = - =\n"
      "B L = - = - = R T C\n- = - = R T C B L =\nT C B L = - = - = R\n"
      "L = - = - = R T C B\n= R T C B L = - = -\nC B L = - = - = R T\n"
      "= - = R T C B L = - extra";
  EXPECT_THROW(RoutingTable::parse(doubled), std::invalid_argument);
  // A row missing a role (two R's, no T) fails validation.
  std::string bad_roles =
      "R R C B L = - = - =\n= - = - = R T C B L\n= - R T C B L = - =\n"
      "B L = - = - = R T C\n- = - = R T C B L =\nT C B L = - = - = R\n"
      "L = - = - = R T C B\n= R T C B L = - = -\nC B L = - = - = R T\n"
      "= - = R T C B L = -";
  EXPECT_THROW(RoutingTable::parse(bad_roles), std::invalid_argument);
  // A/B of column 1 cavity-bound at the same step.
  std::string collide =
      "R T C B L = - = - =\nR T C B L = - = - =\n= - R T C B L = - =\n"
      "B L = - = - = R T C\n- = - = R T C B L =\nT C B L = - = - = R\n"
      "L = - = - = R T C B\n= R T C B L = - = -\nC B L = - = - = R T\n"
      "= - = R T C B L = -";
  EXPECT_THROW(RoutingTable::parse(collide), std::invalid_argument);
  // Non-contiguous cavity-bound run.
  std::string split_run =
      "R T C B = L - = - =\n= - = - = R T C B L\n= - R T C B L = - =\n"
      "B L = - = - = R T C\n- = - = R T C B L =\nT C B L = - = - = R\n"
      "L = - = - = R T C B\n= R T C B L = - = -\nC B L = - = - = R T\n"
      "= - = R T C B L = -";
  EXPECT_THROW(RoutingTable::parse(split_run), std::invalid_argument);
}

TEST(RoutingTable, RoundTripsThroughParse) {
  RoutingTable t = RoutingTable::standard();
  std::ostringstream text;
  for (int r = 0; r < 10; r++) {
    for (int s = 0; s < 10; s++)
      text << static_cast<char>(t.rows[r][s]) << (s == 9 ? '\n' : ' ');
  }
  RoutingTable back = RoutingTable::parse(text.str());
  for (int r = 0; r < 10; r++) EXPECT_EQ(back.rows[r], t.rows[r]);
}
