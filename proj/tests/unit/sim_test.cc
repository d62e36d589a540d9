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

#include "benchmit/density_matrix.h"
#include "benchmit/executor.h"
#include "benchmit/noisy_sim.h"
#include "benchmit/statevector.h"
#include "oracles/dense_oracle.h"
#include "test_util.h"

namespace benchmit {
namespace {

const char* kObservables[] = {"ZIII", "IZZI", "XIYZ", "YYII", "IIIX", "ZZZZ"};

TEST(StateVector, MatchesDenseOracle) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        Circuit c = testing::random_native(4, 5, 4, seed);
        oracle::Vec v = oracle::run(c);
        StateVector sv = simulate_statevector(c);
        for (std::size_t j = 0; j < 16; j++) {
            EXPECT_NEAR(std::abs(sv.amplitudes()[j] - v(j)), 0.0, 1e-12);
        }
        for (const char* o : kObservables) {
            PauliString p = PauliString::parse(o);
            EXPECT_NEAR(sv.expectation(p), oracle::expectation(v, p), 1e-12);
        }
    }
}

TEST(StateVector, LogicalRotationsMatchOracle) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        Circuit c = testing::random_logical(4, 10, seed);
        oracle::Vec v = oracle::run(c);
        for (const char* o : kObservables) {
            PauliString p = PauliString::parse(o);
            EXPECT_NEAR(exact_expectation(c, p), oracle::expectation(v, p), 1e-12);
        }
    }
}

TEST(StateVector, EnforcesQubitCap) {
    EXPECT_THROW(simulate_statevector(Circuit(kStatevectorQubitCap + 1, Level::Native)),
                 std::length_error);
    EXPECT_THROW(simulate_density(Circuit(kDensityQubitCap + 1, Level::Native), NoiseModel{}),
                 std::length_error);
}

TEST(DensityMatrix, NoisyEvolutionMatchesOracle) {
    for (std::uint64_t seed = 0; seed < 10; seed++) {
        Circuit c = testing::random_native(4, 4, 3, seed);
        for (double p : {0.0, 0.03, 0.2}) {
            DensityMatrix dm = simulate_density(c, NoiseModel::uniform(p));
            oracle::Mat rho = oracle::noisy_density(c, p);
            EXPECT_NEAR(dm.trace(), 1.0, 1e-12);
            for (std::size_t r = 0; r < 16; r++) {
                for (std::size_t col = 0; col < 16; col++) {
                    ASSERT_NEAR(std::abs(dm.at(r, col) - rho(r, col)), 0.0, 1e-12);
                }
            }
            for (const char* o : kObservables) {
                PauliString po = PauliString::parse(o);
                EXPECT_NEAR(dm.expectation(po), oracle::expectation(rho, po), 1e-12);
            }
        }
    }
}

TEST(DensityMatrix, PerEdgeRates) {
    Circuit c(3, Level::Native);
    c.append(Gate::x(0));
    c.append(Gate::x(2));
    c.append(Gate::cz(0, 1));
    c.append(Gate::cz(1, 2));
    NoiseModel nm;
    nm.per_edge[{0, 1}] = 0.1;
    nm.per_edge[{1, 2}] = 0.0;
    EXPECT_NEAR(noisy_expectation(c, PauliString::parse("ZII"), nm), -(1 - 0.1), 1e-12);
    EXPECT_NEAR(noisy_expectation(c, PauliString::parse("IIZ"), nm), -1.0, 1e-12);
    nm.per_edge[{1, 2}] = 0.2;
    EXPECT_NEAR(noisy_expectation(c, PauliString::parse("IIZ"), nm), -(1 - 0.2), 1e-12);
}

TEST(BranchOracle, AgreesWithChannel) {
    for (std::uint64_t seed = 0; seed < 8; seed++) {
        Circuit c = testing::random_native(3, 5, 3, seed);
        for (double p : {0.01, 0.05}) {
            for (int r : {1, 3}) {
                Circuit folded(3, Level::Native);
                for (const Gate& g : c.gates()) {
                    for (int k = 0; k < (g.kind == GateKind::CZ ? r : 1); k++) {
                        folded.append(g);
                    }
                }
                for (const char* o : {"ZII", "XZY", "IZZ"}) {
                    PauliString po = PauliString::parse(o);
                    EXPECT_NEAR(branch_oracle(c, po, p, r),
                                noisy_expectation(folded, po, NoiseModel::uniform(p)), 1e-12);
                }
            }
        }
    }
    EXPECT_THROW(branch_oracle(testing::random_native(3, 2, 1, 0), PauliString::parse("ZII"),
                               0.1, 2),
                 std::invalid_argument);
}

TEST(Trajectories, ConvergeToChannel) {
    Circuit c = testing::random_native(3, 4, 3, 5);
    PauliString o = testing::informative_observable(c);
    NoiseModel nm = NoiseModel::uniform(0.1);
    const double exact = noisy_expectation(c, o, nm);
    TrajectoryEstimate est = trajectory_expectation(c, o, nm, 20000, 9);
    EXPECT_GT(est.standard_error, 0.0);
    EXPECT_NEAR(est.mean, exact, 5 * est.standard_error + 1e-9);
    TrajectoryEstimate again = trajectory_expectation(c, o, nm, 20000, 9);
    EXPECT_EQ(est.mean, again.mean);
}

TEST(Readout, ConfusionAppliedPerQubit) {
    std::vector<double> probs = {1, 0, 0, 0};
    auto out = apply_readout(probs, {{0.1, 0.0}, {0.2, 0.0}});
    EXPECT_NEAR(out[0], 0.9 * 0.8, 1e-15);
    EXPECT_NEAR(out[1], 0.1 * 0.8, 1e-15);
    EXPECT_NEAR(out[2], 0.9 * 0.2, 1e-15);
    EXPECT_NEAR(out[3], 0.1 * 0.2, 1e-15);
}

TEST(Shots, SampleAndMarginals) {
    Circuit c(2, Level::Native);
    c.append(Gate::x(1));
    NoiseModel nm;
    nm.readout = {{0.0, 0.0}, {0.0, 0.25}};
    ShotRecord sr = sample_shots(c, nm, 20000, 4);
    EXPECT_EQ(sr.n_shots, 20000u);
    OutcomeProbability q0 = outcome_prob(sr, 0);
    OutcomeProbability q1 = outcome_prob(sr, 1);
    EXPECT_EQ(q0.p0, 1.0);
    EXPECT_NEAR(q1.p1, 0.75, 0.02);
    EXPECT_EQ(ShotRecord::from_json(sr.to_json()).counts, sr.counts);
    EXPECT_THROW(outcome_prob(sr, 2), std::out_of_range);
    EXPECT_THROW(outcome_prob(ShotRecord{}, 0), std::invalid_argument);
}

TEST(Executor, ExactAndShotAgree) {
    Circuit c = testing::random_native(3, 3, 3, 2);
    NoiseModel nm = NoiseModel::uniform(0.05);
    nm.readout.assign(3, {0.02, 0.03});
    ExactExecutor exact(nm);
    ShotExecutor traj(nm, 20000, ShotMode::Trajectories);
    ShotExecutor dens(nm, 20000, ShotMode::DensitySampling);
    Distribution e = exact.run(c, 1);
    Distribution t = traj.run(c, 1);
    Distribution d = dens.run(c, 1);
    EXPECT_EQ(exact.runs(), 1u);
    for (std::size_t j = 0; j < e.probs.size(); j++) {
        EXPECT_NEAR(t.probs[j], e.probs[j], 0.015);
        EXPECT_NEAR(d.probs[j], e.probs[j], 0.015);
    }
    EXPECT_EQ(t.shots, 20000u);
}

TEST(Executor, MeasurementBasisChange) {
    Circuit c(2, Level::Native);
    c.append(Gate::sx(0));
    PauliString o = PauliString::parse("YI");
    const double want = exact_expectation(c, o);
    ExactExecutor ex(NoiseModel::uniform(0.0));
    Distribution d = ex.run(with_measurement_basis(c, o), 0);
    EXPECT_NEAR(parity_expectation(d, o), want, 1e-12);
    PauliString ox = PauliString::parse("XZ");
    EXPECT_NEAR(parity_expectation(ex.run(with_measurement_basis(c, ox), 0), ox),
                exact_expectation(c, ox), 1e-12);
}

}  // namespace
}  // namespace benchmit
