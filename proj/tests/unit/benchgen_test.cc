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

#include <bit>

#include "benchmit/benchgen.h"
#include "benchmit/circuit_io.h"
#include "benchmit/models.h"
#include "benchmit/statevector.h"
#include "benchmit/transpile.h"
#include "oracles/dense_oracle.h"
#include "test_util.h"

namespace benchmit {
namespace {

// Probability that every qubit in support(o) reads its expected bit, and the flipped <O>.
void expect_certified(const BenchmarkBundle& b) {
    StateVector sv = simulate_statevector(b.benchmark);
    auto probs = sv.probabilities();
    const auto supp = b.observable.support();
    double hit = 0;
    for (std::size_t j = 0; j < probs.size(); j++) {
        bool ok = true;
        for (std::size_t q : supp) {
            ok = ok && ((j >> q & 1) == b.expected_bits[q]);
        }
        hit += ok ? probs[j] : 0;
    }
    EXPECT_NEAR(hit, 1.0, 1e-12);
    int flips = 0;
    for (std::size_t q : supp) {
        flips += b.flip_mask[q];
    }
    // Diagonal observables are read as parities; others directly.
    EXPECT_NEAR((flips % 2 ? -1 : 1) * sv.expectation(b.observable), 1.0, 1e-12);
}

TEST(Agnostic, SingleRotationExample) {
    Circuit app(1, Level::Logical);
    app.append(Gate::rot(0, Pauli::X, Angle::radians(0.01)));
    BenchmarkBundle b = gen_agnostic(app, PauliString::parse("Z"), 5);
    EXPECT_NEAR(exact_expectation(b.benchmark, b.observable), 1.0, 1e-12);
    for (const Gate& g : b.benchmark.gates()) {
        EXPECT_TRUE(g.angle.is_quarter_turn());
    }
}

TEST(Agnostic, ConditionsOnRandomCircuits) {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        Circuit app = testing::random_logical(4, 10, seed);
        PauliString o = PauliString::parse(seed % 2 ? "IXZI" : "ZIIY");
        BenchmarkBundle b = gen_agnostic(app, o, seed);
        EXPECT_TRUE(structural_match(transpile(b.padded_application), transpile(b.benchmark)).ok);
        EXPECT_NEAR(exact_expectation(b.benchmark, o), 1.0, 1e-12);
        // The trivial layer leaves the application unchanged.
        EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(b.padded_application),
                                          oracle::unitary(app)),
                    1.0, 1e-12);
        ProductState st = track_product_state(b.benchmark);
        for (std::size_t q : o.support()) {
            EXPECT_EQ(st[q], (PauliEigenstate{o[q], 1}));
        }
    }
}

TEST(Agnostic, Deterministic) {
    Circuit app = testing::random_logical(3, 8, 1);
    auto a = gen_agnostic(app, PauliString::parse("ZZI"), 77);
    auto b = gen_agnostic(app, PauliString::parse("ZZI"), 77);
    EXPECT_EQ(circuit_to_text(a.benchmark), circuit_to_text(b.benchmark));
    EXPECT_EQ(a.manifest().dump(), b.manifest().dump());
    auto c = gen_agnostic(app, PauliString::parse("ZZI"), 78);
    EXPECT_NE(circuit_to_text(a.benchmark), circuit_to_text(c.benchmark));
    EXPECT_THROW(gen_agnostic(app, PauliString::parse("III"), 1), std::invalid_argument);
}

TEST(Tailored, Examples) {
    Circuit a(1, Level::Native);
    a.append(Gate::sx(0));
    BenchmarkBundle b = gen_tailored(a, PauliString::parse("Z"));
    EXPECT_EQ(b.benchmark[0].kind, GateKind::X);
    EXPECT_EQ(b.expected_bits, (BitState{1}));
    EXPECT_EQ(b.flip_mask, (BitState{1}));
    expect_certified(b);

    Circuit d(2, Level::Native);
    d.append(Gate::rz(0, Angle::radians(0.3)));
    d.append(Gate::cz(0, 1));
    BenchmarkBundle e = gen_tailored(d, PauliString::parse("ZZ"));
    EXPECT_EQ(e.benchmark, d);
    EXPECT_EQ(e.expected_bits, (BitState{0, 0}));
    EXPECT_THROW(gen_tailored(d, PauliString::parse("XZ")), std::invalid_argument);
}

TEST(Tailored, ConditionsOnRandomCircuits) {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        Circuit app = testing::random_native(5, 6, 5, seed);
        BenchmarkBundle b = gen_tailored(app, PauliString::parse("IZZIZ"));
        EXPECT_TRUE(structural_match(app, b.benchmark).ok);
        GateCensus ca = gate_census(app);
        GateCensus cb = gate_census(b.benchmark);
        EXPECT_EQ(ca.cz, cb.cz);
        EXPECT_EQ(ca.x + ca.sx, cb.x);
        EXPECT_EQ(cb.sx, 0u);
        expect_certified(b);
    }
}

ModelParams chain_params(ModelKind kind, std::size_t n, std::size_t nt) {
    ModelParams p;
    p.model = kind;
    p.theta1 = p.theta3 = 0.3;
    p.theta2 = p.theta4 = -0.7;
    p.n_trotter = nt;
    p.topology = Topology::linear_chain(n);
    p.order = TrotterOrder::Symmetric;
    return p;
}

TEST(Entangling, BenchmarkIsIdentity) {
    for (ModelKind kind : {ModelKind::KickedIsing, ModelKind::Heisenberg}) {
        for (std::size_t nt : {2, 4}) {
            Circuit app = build_model(chain_params(kind, 4, nt));
            BenchmarkBundle b = gen_entangling(app, PauliString::parse("ZIZI"));
            oracle::Mat id = oracle::Mat::Identity(16, 16);
            EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(b.benchmark), id), 1.0, 1e-12);
            EXPECT_TRUE(structural_match(transpile(app), transpile(b.benchmark)).ok);
            EXPECT_EQ(gate_census(transpile(app)).cz, gate_census(transpile(b.benchmark)).cz);
            expect_certified(b);
        }
    }
}

TEST(Entangling, RejectsOddLayersAndNonDiagonal) {
    Circuit app = build_model(chain_params(ModelKind::KickedIsing, 3, 3));
    EXPECT_THROW(gen_entangling(app, PauliString::parse("ZII")), std::invalid_argument);
    Circuit even = build_model(chain_params(ModelKind::KickedIsing, 3, 2));
    EXPECT_THROW(gen_entangling(even, PauliString::parse("XII")), std::invalid_argument);
    // First-order steps have no layout-matched inverse.
    ModelParams p = chain_params(ModelKind::KickedIsing, 3, 2);
    p.order = TrotterOrder::First;
    EXPECT_THROW(gen_entangling(build_model(p), PauliString::parse("ZII")),
                 std::invalid_argument);
}

TEST(Entangling, SinglePairOption) {
    Circuit app = build_model(chain_params(ModelKind::KickedIsing, 3, 4));
    BenchmarkBundle b = gen_entangling(app, PauliString::parse("IZI"), {true});
    EXPECT_NEAR(oracle::phase_overlap(oracle::unitary(b.benchmark),
                                      oracle::Mat::Identity(8, 8)),
                1.0, 1e-12);
    EXPECT_TRUE(structural_match(transpile(app), transpile(b.benchmark)).ok);
}

}  // namespace
}  // namespace benchmit
