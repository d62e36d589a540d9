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
#include <string>

#include <nlohmann/json.hpp>

#include "benchmit/circuit.h"
#include "benchmit/pauli.h"
#include "benchmit/tracker.h"

namespace benchmit {

enum class GeneratorKind : std::uint8_t { Agnostic, Tailored, Entangling };

const char* generator_name(GeneratorKind k);
GeneratorKind generator_from_name(const std::string& name);

/// A benchmark circuit with its certified outcome and the application it mirrors.
///
/// expected_bits and flip_mask are full-length; entries outside support(O) are zero. Bits are
/// read after the measurement-basis change for O, so XOR-ing outcomes with flip_mask turns the
/// certified outcome into all zeros on support(O) and <O> into +1.
struct BenchmarkBundle {
    GeneratorKind kind = GeneratorKind::Agnostic;
    Circuit benchmark;
    Circuit padded_application;
    PauliString observable;
    BitState expected_bits;
    BitState flip_mask;
    std::uint64_t seed = 0;

    nlohmann::json manifest() const;
};

/// Hardware-agnostic Clifford benchmark of a logical Pauli-rotation circuit.
///
/// Random stream, in order: for each weight-1 rotation an angle index (pi/2, pi, 3pi/2) then an
/// axis index (X, Y, Z); for each weight-2 rotation an order bit (1 makes the second qubit the
/// anchor) then the free letter index (X, Y, Z); then one trivial-layer letter index
/// (I, X, Y, Z) per qubit of support(O) in ascending order. Identity correction or trivial
/// rotations are written as R_Z(0) and R_Z(2pi) so every qubit of support(O) keeps one
/// weight-1 rotation in both circuits.
BenchmarkBundle gen_agnostic(const Circuit& app, const PauliString& o, std::uint64_t seed);

/// Hardware-tailored benchmark of a native circuit: SX becomes X, outcome from bit tracking.
BenchmarkBundle gen_tailored(const Circuit& app, const PauliString& o);

struct EntanglingOptions {
    /// Treat the first and second halves of the layers as one layer each (L = 1).
    bool single_pair = false;
};

/// Entangling benchmark of a layered logical circuit U_{2L} ... U_1:
/// B = U_1^-1 ... U_L^-1 U_L ... U_1. The inverse of U_{L+1-j} is ordered, through commuting
/// rearrangements only, to share the gate layout of U_{L+j}; a layer without such an ordering
/// is rejected. O must be diagonal.
BenchmarkBundle gen_entangling(const Circuit& app, const PauliString& o,
                               const EntanglingOptions& opts = {});

/// Logical inverse of gates [begin, end) of c, negated angles in reverse order, then
/// rearranged by commutation to follow the layout (arity and qubits) of target[tbegin, tend).
/// Throws std::invalid_argument when no such rearrangement exists.
std::vector<Gate> layout_matched_inverse(const Circuit& c, std::size_t begin, std::size_t end,
                                         const Circuit& target, std::size_t tbegin,
                                         std::size_t tend);

/// Applies a bit-flip mask to an outcome index (bit q = qubit q).
std::size_t flip_outcome(std::size_t outcome, const BitState& mask);

}  // namespace benchmit
