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

#include <random>

#include "benchmit/linalg.h"
#include "benchmit/transpile.h"
#include "oracles/dense_oracle.h"
#include "test_util.h"

namespace benchmit {
namespace {

Circuit native_of(std::size_t n, const std::vector<Gate>& gates) {
    Circuit c(n, Level::Native);
    c.append_all(gates);
    return c;
}

Circuit logical_of(std::size_t n, const Gate& g) {
    Circuit c(n, Level::Logical);
    c.append(g);
    return c;
}

TEST(Euler, RandomUnitariesReproducedUpToPhase) {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> ang(-7, 7);
    for (int t = 0; t < 200; t++) {
        Mat2 u = Mat2::rz(ang(gen)) * Mat2::rotation(Pauli::Y, ang(gen)) * Mat2::rz(ang(gen));
        if (t % 3 == 0) {
            u = Mat2::rotation(Pauli::X, ang(gen)) * u;
        }
        std::vector<Gate> seq;
        append_euler(seq, 0, u);
        ASSERT_EQ(seq.size(), 5u);
        oracle::Mat expect(2, 2);
        expect << u(0, 0), u(0, 1), u(1, 0), u(1, 1);
        EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(native_of(1, seq)), expect), 1.0,
                    1e-12);
    }
    // Degenerate cases: diagonal and anti-diagonal inputs.
    for (const Mat2& u : {Mat2::identity(), Mat2::x(), Mat2::pauli(Pauli::Y), Mat2::rz(0.3)}) {
        std::vector<Gate> seq;
        append_euler(seq, 0, u);
        oracle::Mat expect(2, 2);
        expect << u(0, 0), u(0, 1), u(1, 0), u(1, 1);
        EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(native_of(1, seq)), expect), 1.0,
                    1e-12);
    }
}

TEST(RigidTemplate, WeightOneMatchesRotation) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        for (double theta : {0.01, -1.3, kPi / 2, 2 * kPi}) {
            Gate g = Gate::rot(1, p, Angle::radians(theta));
            auto seq = rigid_transpile(g, NativeTemplate::single_qubit());
            Circuit nat = native_of(2, seq);
            GateCensus cen = gate_census(nat);
            EXPECT_EQ(cen.x + cen.sx, 4u);
            EXPECT_EQ(cen.cz, 0u);
            EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(nat),
                                              oracle::unitary(logical_of(2, g))),
                        1.0, 1e-12);
        }
    }
}

TEST(RigidTemplate, WeightTwoMatchesRotationForAllPairs) {
    const Pauli letters[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (Pauli pa : letters) {
        for (Pauli pb : letters) {
            for (double theta : {0.01, 2.2, kPi, -kPi / 2}) {
                Gate g = Gate::rot2(2, pa, 0, pb, Angle::radians(theta));
                Circuit nat = native_of(3, rigid_transpile(g, NativeTemplate::two_qubit()));
                GateCensus cen = gate_census(nat);
                EXPECT_EQ(cen.x + cen.sx, 14u);
                EXPECT_EQ(cen.cz, 2u);
                EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(nat),
                                                  oracle::unitary(logical_of(3, g))),
                            1.0, 1e-12)
                    << pauli_char(pa) << pauli_char(pb) << " " << theta;
            }
        }
    }
}

TEST(RigidTemplate, SkeletonIndependentOfAngleAndLetters) {
    auto sk = [](const Gate& g) {
        const auto tmpl = g.is_two_qubit() ? NativeTemplate::two_qubit()
                                           : NativeTemplate::single_qubit();
        return structural_skeleton(native_of(2, rigid_transpile(g, tmpl)));
    };
    auto ref = sk(Gate::rot2(0, Pauli::Z, 1, Pauli::Z, Angle::radians(0.01)));
    EXPECT_EQ(sk(Gate::rot2(0, Pauli::X, 1, Pauli::Y, Angle::quarter_turns(2))), ref);
    EXPECT_EQ(sk(Gate::rot2(0, Pauli::Y, 1, Pauli::X, Angle::quarter_turns(4))), ref);
    auto ref1 = sk(Gate::rot(1, Pauli::X, Angle::radians(0.01)));
    EXPECT_EQ(sk(Gate::rot(1, Pauli::Z, Angle::quarter_turns(4))), ref1);
}

TEST(Transpile, RigidAndCompactPathsPreserveUnitary) {
    for (std::uint64_t seed = 0; seed < 10; seed++) {
        Circuit l = testing::random_logical(3, 8, seed);
        Circuit nat = transpile(l, TranspilePath::Rigid);
        EXPECT_EQ(nat.level(), Level::Native);
        EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(nat), oracle::unitary(l)), 1.0, 1e-11);
    }
    // Compact: odd-quarter-turn ZZ rotations compile to one CZ.
    Circuit l(3, Level::Logical);
    l.append(Gate::rot(0, Pauli::X, Angle::radians(-kPi / 8)));
    l.append(Gate::rot2(0, Pauli::Z, 1, Pauli::Z, Angle::radians(-kPi / 2)));
    l.append(Gate::rot2(1, Pauli::Z, 2, Pauli::Z, Angle::radians(kPi / 2)));
    l.append(Gate::rot(2, Pauli::Y, Angle::radians(0.7)));
    Circuit nat = transpile(l, TranspilePath::Compact);
    EXPECT_EQ(gate_census(nat).cz, 2u);
    EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(nat), oracle::unitary(l)), 1.0, 1e-12);
}

TEST(Transpile, CarriesLayerMarks) {
    Circuit l(2, Level::Logical);
    l.mark_layer();
    l.append(Gate::rot(0, Pauli::X, Angle::radians(0.1)));
    l.mark_layer();
    l.append(Gate::rot2(0, Pauli::Z, 1, Pauli::Z, Angle::radians(0.1)));
    Circuit nat = transpile(l);
    ASSERT_EQ(nat.layer_count(), 2u);
    EXPECT_EQ(nat.layer_starts()[1], rigid_transpile(l[0], NativeTemplate::single_qubit()).size());
}

TEST(StructuralMatch, DetectsMismatch) {
    Circuit a(2, Level::Native);
    a.append(Gate::sx(0));
    a.append(Gate::rz(0, Angle::radians(0.3)));
    a.append(Gate::cz(0, 1));
    Circuit b(2, Level::Native);
    b.append(Gate::x(0));
    b.append(Gate::cz(1, 0));
    EXPECT_TRUE(structural_match(a, b).ok);
    Circuit c(2, Level::Native);
    c.append(Gate::x(1));
    c.append(Gate::cz(1, 0));
    StructuralMatch m = structural_match(a, c);
    EXPECT_FALSE(m.ok);
    EXPECT_EQ(m.skeleton_index, 0u);
    EXPECT_THROW(structural_match(a, Circuit(2, Level::Logical)), std::invalid_argument);
}

TEST(NativeInverse, ComposesToIdentity) {
    for (std::uint64_t seed = 0; seed < 10; seed++) {
        Circuit c = testing::random_native(3, 4, 4, seed);
        Circuit both = c;
        both.append_all(native_inverse(c));
        oracle::Mat id = oracle::Mat::Identity(8, 8);
        EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(both), id), 1.0, 1e-12);
        EXPECT_EQ(gate_census(native_inverse(c)).cz, gate_census(c).cz);
    }
}

}  // namespace
}  // namespace benchmit
