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

#include "benchmit/circuit.h"
#include "benchmit/executor.h"
#include "benchmit/pauli.h"

namespace benchmit {

inline constexpr double kTrexGuard = 0.05;

/// Random X layer drawn from {I,X}^n for readout twirling.
std::uint64_t trex_mask(std::size_t n_qubits, std::uint64_t seed);

/// Runs c with X on every qubit of mask before measurement and un-flips the outcomes.
Distribution run_with_readout_mask(Executor& ex, const Circuit& c, std::uint64_t mask,
                                   std::uint64_t seed);

/// Averaged un-flipped outcome distribution of the empty circuit under random masks.
struct TrexCalibration {
    Distribution average;
    std::size_t total_shots = 0;

    /// Readout attenuation of the Z-parity over the qubits in mask.
    double attenuation(std::uint64_t mask) const;
};

TrexCalibration trex_calibrate(Executor& ex, std::size_t n_qubits, std::size_t n_random,
                               std::uint64_t seed);

struct TrexResult {
    double value = 0;
    double sigma = 0;
    /// Twirled expectation before division.
    double raw = 0;
    double attenuation = 1;
};

/// Readout-twirled expectation of a diagonal observable divided by the calibrated
/// attenuation. Throws std::runtime_error when |attenuation| < guard.
TrexResult trex(Executor& ex, const Circuit& c, const PauliString& o, std::size_t n_random,
                std::uint64_t seed, double guard = kTrexGuard);

/// Binomial standard error of a +/-1 average over `shots` samples; 0 for exact data.
double parity_standard_error(double mean, std::size_t shots);

}  // namespace benchmit
