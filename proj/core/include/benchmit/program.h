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

#include <cstdint>
#include <vector>

#include "benchmit/circuit.h"
#include "benchmit/linalg.h"

namespace benchmit {

/// Simulator-ready form of a circuit: runs of single-qubit gates are fused into one 2x2
/// matrix per qubit, flushed whenever a multi-qubit operation touches that qubit.
struct ProgramOp {
    enum class Kind : std::uint8_t { Unitary1, CZ, Rotation };
    Kind kind = Kind::Unitary1;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    Mat2 u;
    /// Rotation ops: exp(-i theta P / 2) with P given by masks (bit q = qubit q).
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    int y_count = 0;
    double theta = 0;
};

struct Program {
    std::size_t n_qubits = 0;
    std::vector<ProgramOp> ops;
    /// Number of CZ ops, i.e. noisy locations.
    std::size_t n_cz = 0;
};

Program compile_program(const Circuit& c);

/// 2x2 matrix of a single-qubit gate (native gate or weight-1 rotation).
Mat2 single_qubit_matrix(const Gate& g);

/// Phase i^{y_count} as (re, im) multiplier index: P|j> = i^{y} (-1)^{|j & z|} |j ^ x>.
inline cplx i_power(int k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

}  // namespace benchmit
