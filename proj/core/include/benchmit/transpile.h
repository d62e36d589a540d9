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
#include <optional>
#include <vector>

#include "benchmit/circuit.h"
#include "benchmit/linalg.h"

namespace benchmit {

/// Fixed slot layout for rigid transpilation. Every rotation of a given weight compiles to the
/// same sequence of RX-class (X or SX) and CZ gates; only RZ angles and X/SX choices vary.
struct NativeTemplate {
    int weight = 1;
    std::size_t n_rx = 4;
    std::size_t n_cz = 0;

    static NativeTemplate single_qubit() { return {1, 4, 0}; }
    static NativeTemplate two_qubit() { return {2, 14, 2}; }
};

/// Native sequence for a weight-1 or weight-2 Pauli rotation, equal to it up to global phase.
///
/// Weight 1: Euler frame RZ SX RZ SX RZ, then an (X, X) pad.
/// Weight 2 on (a, b): R_{PaPb}(t) = (Va^dag Vb^dag) (I H) CZ (I RX(t)) CZ (I H) (Va Vb) where
/// Va maps Pa to Z. Each of the three single-qubit stages is one Euler frame per qubit, and an
/// (X, X) pad on a closes the template.
std::vector<Gate> rigid_transpile(const Gate& rotation, const NativeTemplate& tmpl);

/// Single-qubit unitary as RZ SX RZ SX RZ (two RX-class gates), up to global phase.
void append_euler(std::vector<Gate>& out, std::uint32_t q, const Mat2& u);

enum class TranspilePath : std::uint8_t {
    /// Every rotation through its rigid template.
    Rigid,
    /// Weight-1 rotations as one Euler frame; R_ZZ(t) with t an odd multiple of pi/2 as
    /// CZ RZ(t) RZ(t). Other weight-2 rotations are rejected.
    Compact,
};

/// Transpiles a logical circuit gate by gate, carrying layer boundaries across.
Circuit transpile(const Circuit& logical, TranspilePath path = TranspilePath::Rigid);

enum class SkeletonClass : std::uint8_t { CZ, RX };

struct SkeletonEntry {
    SkeletonClass cls;
    std::uint32_t q0;
    std::uint32_t q1;

    bool operator==(const SkeletonEntry&) const = default;
};

/// Gate structure with RZ erased, X and SX merged, CZ pairs sorted.
std::vector<SkeletonEntry> structural_skeleton(const Circuit& native);

struct StructuralMatch {
    bool ok = true;
    /// Position in the skeleton of the first mismatch.
    std::size_t skeleton_index = 0;
    /// Gate indices of that position in each circuit, absent when the skeleton ran out.
    std::optional<std::size_t> gate_a;
    std::optional<std::size_t> gate_b;
};

StructuralMatch structural_match(const Circuit& a, const Circuit& b);

/// Gate-by-gate inverse of a native circuit with the same skeleton reversed:
/// SX^-1 is written RZ(pi) SX RZ(pi), RZ angles are negated, X and CZ are self-inverse.
Circuit native_inverse(const Circuit& c);

}  // namespace benchmit
