// Copyright 2026 The benchmit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>

#include "benchmit/angle.h"
#include "benchmit/pauli.h"
#include "benchmit/rng.h"

namespace benchmit {
namespace {

TEST(Angle, ReducesIntoFourPi) {
    EXPECT_NEAR(Angle::radians(-0.5).radians(), kFourPi - 0.5, 1e-15);
    EXPECT_NEAR(Angle::radians(kFourPi + 0.25).radians(), 0.25, 1e-14);
    EXPECT_EQ(Angle::radians(0.0).radians(), 0.0);
}

TEST(Angle, SnapsQuarterTurns) {
    Angle a = Angle::radians(kPi / 2 + 5e-13);
    ASSERT_TRUE(a.is_quarter_turn());
    EXPECT_EQ(*a.quarter_turns(), 1);
    EXPECT_EQ(a.radians(), kPi / 2);
    EXPECT_FALSE(Angle::radians(kPi / 2 + 1e-9).is_quarter_turn());
    EXPECT_EQ(*Angle::radians(-kPi / 2).quarter_turns(), 7);
    EXPECT_EQ(*Angle::radians(2 * kPi).quarter_turns(), 4);
}

TEST(Angle, NegationAndSum) {
    EXPECT_EQ(*(-Angle::quarter_turns(3)).quarter_turns(), 5);
    EXPECT_EQ(*(Angle::quarter_turns(6) + Angle::quarter_turns(3)).quarter_turns(), 1);
    Angle a = Angle::radians(0.3);
    EXPECT_NEAR((a + (-a)).radians(), 0.0, 1e-14);
    EXPECT_THROW(Angle::radians(std::nan("")), std::invalid_argument);
}

TEST(PauliString, ParseAndSupport) {
    PauliString p = PauliString::parse("IXIZY");
    EXPECT_EQ(p.size(), 5u);
    EXPECT_EQ(p.support(), (std::vector<std::size_t>{1, 3, 4}));
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.str(), "IXIZY");
    EXPECT_FALSE(p.is_diagonal());
    EXPECT_TRUE(PauliString::parse("ZIZ").is_diagonal());
    EXPECT_EQ(p.x_mask(), 0b10010u);
    EXPECT_EQ(p.z_mask(), 0b11000u);
    EXPECT_EQ(p.y_count(), 1u);
    EXPECT_THROW(PauliString::parse("XQ"), std::invalid_argument);
}

TEST(PauliString, ReportingSupportIsOneBased) {
    PauliSupport s = pauli_support(PauliString::parse("IIZIX"));
    EXPECT_EQ(s.qubits, (std::vector<std::size_t>{3, 5}));
    EXPECT_EQ(s.weight, 2u);
    EXPECT_EQ(pauli_support(PauliString::parse("III")).weight, 0u);
    EXPECT_THROW(pauli_support(PauliString()), std::invalid_argument);
}

TEST(PauliString, Commutation) {
    EXPECT_TRUE(PauliString::parse("XX").commutes_with(PauliString::parse("ZZ")));
    EXPECT_FALSE(PauliString::parse("XI").commutes_with(PauliString::parse("ZI")));
    EXPECT_TRUE(PauliString::parse("XYZ").commutes_with(PauliString::parse("XYZ")));
}

TEST(Rng, DeterministicAndBounded) {
    Rng a(42), b(42);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(a.next(), b.next());
    }
    Rng c(7);
    std::vector<int> hist(3, 0);
    for (int i = 0; i < 30000; i++) {
        hist[c.below(3)]++;
        const double u = c.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    for (int h : hist) {
        EXPECT_NEAR(h, 10000, 400);
    }
    EXPECT_NE(derive_seed(1, "a", {0}), derive_seed(1, "a", {1}));
    EXPECT_NE(derive_seed(1, "a", {0}), derive_seed(1, "b", {0}));
    EXPECT_EQ(derive_seed(1, "a", {2, 3}), derive_seed(1, "a", {2, 3}));
}

}  // namespace
}  // namespace benchmit
