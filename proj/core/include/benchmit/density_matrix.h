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

#include "benchmit/linalg.h"
#include "benchmit/pauli.h"
#include "benchmit/program.h"

namespace benchmit {

inline constexpr std::size_t kDensityQubitCap = 10;

/// Mixed state stored as a vectorised 2n-qubit array: rho(r, c) lives at index r | (c << n).
/// A unitary U on qubit q then acts as U on bit q and conj(U) on bit q + n.
class DensityMatrix {
   public:
    explicit DensityMatrix(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_; }
    cplx at(std::size_t row, std::size_t col) const { return data_[row | (col << n_)]; }

    void apply(const ProgramOp& op);
    void apply_1q(std::uint32_t q, const Mat2& u);
    void apply_cz(std::uint32_t a, std::uint32_t b);
    /// rho -> (1 - p) rho + p Tr_ab(rho) (x) I/4.
    void depolarize(std::uint32_t a, std::uint32_t b, double p);
    /// CZ on (a, b) followed by depolarize(a, b, p), in one pass.
    void apply_noisy_cz(std::uint32_t a, std::uint32_t b, double p);

    double expectation(const PauliString& p) const;
    /// Diagonal in the computational basis.
    std::vector<double> probabilities() const;
    double trace() const;

   private:
    void two_qubit_pass(std::uint32_t a, std::uint32_t b, bool cz, double p);

    std::size_t n_;
    std::vector<cplx> data_;
};

}  // namespace benchmit
