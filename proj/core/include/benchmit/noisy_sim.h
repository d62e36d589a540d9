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


#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "benchmit/circuit.h"
#include "benchmit/density_matrix.h"
#include "benchmit/noise.h"
#include "benchmit/pauli.h"
#include "benchmit/rng.h"
#include "benchmit/statevector.h"

namespace benchmit {

enum class NoisyMode : std::uint8_t { ChannelExact, Trajectories };

struct NoisyOptions {
    NoisyMode mode = NoisyMode::ChannelExact;
    std::size_t trajectories = 1000;
    std::uint64_t seed = 0;
};

/// Evolves |0...0><0...0| through a native circuit, depolarizing after every CZ.
/// Capped at kDensityQubitCap qubits.
DensityMatrix simulate_density(const Circuit& native, const NoiseModel& nm);

/// <O> under the depolarizing model (readout error is not applied to expectations).
double noisy_expectation(const Circuit& native, const PauliString& o, const NoiseModel& nm,
                         const NoisyOptions& opts = {});

/// Trajectory estimate together with its standard error over trajectories.
struct TrajectoryEstimate {
    double mean = 0;
    double standard_error = 0;
};

TrajectoryEstimate trajectory_expectation(const Circuit& native, const PauliString& o,
                                          const NoiseModel& nm, std::size_t n_trajectories,
                                          std::uint64_t seed);

/// Sum over every subset S of the N CZ gates replaced by the fully depolarizing map rho -> I/4,
/// weighted (1-p)^{(N-|S|) r} (1 - (1-p)^r)^{|S|}. Uses its own dense-matrix evolution,
/// independent of DensityMatrix. Requires N <= 12 and odd r.
double branch_oracle(const Circuit& native, const PauliString& o, double p, int r);

struct ShotRecord {
    std::map<std::string, std::size_t> counts;
    std::size_t n_shots = 0;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
    static ShotRecord from_json(const nlohmann::json& j);
};

/// Per-shot trajectory, Z-basis measurement, then readout confusion. Deterministic per seed.
ShotRecord sample_shots(const Circuit& native, const NoiseModel& nm, std::size_t n_shots,
                        std::uint64_t seed);

struct OutcomeProbability {
    double p0 = 0;
    double p1 = 0;
};

/// Marginal relative frequencies of qubit q (qubit 0 is the leftmost character).
OutcomeProbability outcome_prob(const ShotRecord& sr, std::size_t q);

/// Pushes a distribution over bitstrings (index bit q = qubit q) through readout confusion.
std::vector<double> apply_readout(std::vector<double> probs,
                                  const std::vector<ReadoutError>& readout);

/// Multinomial draw of n_shots outcomes from probs; returns counts per outcome index.
std::vector<std::size_t> sample_counts(const std::vector<double>& probs, std::size_t n_shots,
                                       Rng& rng);

/// Bitstring of an outcome index, qubit 0 leftmost.
std::string index_to_bits(std::size_t index, std::size_t n_qubits);

}  // namespace benchmit
