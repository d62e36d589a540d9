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
#include <vector>

#include "benchmit/circuit.h"
#include "benchmit/linalg.h"
#include "benchmit/pauli.h"
#include "benchmit/program.h"

namespace benchmit {

inline constexpr std::size_t kStatevectorQubitCap = 14;

/// Dense pure state. Basis index bit q is qubit q.
class StateVector {
   public:
    explicit StateVector(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_; }
    const std::vector<cplx>& amplitudes() const { return amp_; }

    void apply(const ProgramOp& op);
    void run(const Program& prog);
    void apply_1q(std::uint32_t q, const Mat2& u);
    void apply_cz(std::uint32_t a, std::uint32_t b);
    /// Applies the Pauli operator with the given masks (no rotation).
    void apply_pauli(std::uint64_t x_mask, std::uint64_t z_mask, int y_count);
    void apply_rotation(std::uint64_t x_mask, std::uint64_t z_mask, int y_count, double theta);

    double expectation(const PauliString& p) const;
    std::vector<double> probabilities() const;

   private:
    std::size_t n_;
    std::vector<cplx> amp_;
};

/// <0|U^dag O U|0> for a circuit at either level. Throws above the statevector cap.
double exact_expectation(const Circuit& c, const PauliString& o);

/// Final pure state of a noiseless circuit.
StateVector simulate_statevector(const Circuit& c);

}  // namespace benchmit
