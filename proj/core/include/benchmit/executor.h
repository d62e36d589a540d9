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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "benchmit/circuit.h"
#include "benchmit/noise.h"
#include "benchmit/noisy_sim.h"
#include "benchmit/pauli.h"
#include "benchmit/tracker.h"

namespace benchmit {

/// Outcome distribution over computational-basis bitstrings (index bit q = qubit q).
/// shots == 0 marks exact probabilities; otherwise probs are relative frequencies.
struct Distribution {
    std::vector<double> probs;
    std::size_t shots = 0;
};

/// Runs native circuits and returns measured outcome distributions. Implementations must be
/// safe to call concurrently; results depend only on (circuit, seed).
class Executor {
   public:
    virtual ~Executor() = default;
    Distribution run(const Circuit& native, std::uint64_t seed);
    /// Number of circuits executed so far.
    std::size_t runs() const { return runs_.load(); }
    virtual std::size_t shots() const = 0;

   protected:
    virtual Distribution execute(const Circuit& native, std::uint64_t seed) = 0;

   private:
    std::atomic<std::size_t> runs_{0};
};

/// Density-matrix evolution followed by analytic readout confusion. No sampling noise.
class ExactExecutor : public Executor {
   public:
    explicit ExactExecutor(NoiseModel nm) : nm_(std::move(nm)) {}
    std::size_t shots() const override { return 0; }

   protected:
    Distribution execute(const Circuit& native, std::uint64_t seed) override;

   private:
    NoiseModel nm_;
};

enum class ShotMode : std::uint8_t {
    /// One Pauli trajectory per shot (statevector, up to kStatevectorQubitCap qubits).
    Trajectories,
    /// Multinomial draws from the exact noisy distribution; same law as Trajectories.
    DensitySampling,
};

class ShotExecutor : public Executor {
   public:
    ShotExecutor(NoiseModel nm, std::size_t shots, ShotMode mode = ShotMode::Trajectories)
        : nm_(std::move(nm)), shots_(shots), mode_(mode) {}
    std::size_t shots() const override { return shots_; }

   protected:
    Distribution execute(const Circuit& native, std::uint64_t seed) override;

   private:
    NoiseModel nm_;
    std::size_t shots_;
    ShotMode mode_;
};

/// Appends ideal single-qubit rotations so that measuring Z afterwards measures each
/// non-identity letter of `basis` (X or Y) on its qubit.
Circuit with_measurement_basis(const Circuit& native, const PauliString& basis);

/// Diagonal view of an observable: the Z-parity over support(o).
double parity_expectation(const Distribution& d, const PauliString& o);
double parity_expectation(const Distribution& d, std::uint64_t support_mask);

/// Distribution with every outcome XOR-ed by mask.
Distribution flip_distribution(const Distribution& d, std::uint64_t mask);
std::uint64_t bits_mask(const BitState& bits);
std::uint64_t support_mask(const PauliString& o);

OutcomeProbability marginal(const Distribution& d, std::size_t q);

/// Converts counts over outcome indices into a Distribution.
Distribution distribution_from_counts(const std::vector<std::size_t>& counts, std::size_t shots);

}  // namespace benchmit
