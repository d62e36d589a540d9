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
#include <utility>
#include <vector>

#include "benchmit/angle.h"
#include "benchmit/circuit.h"
#include "benchmit/pauli.h"

namespace benchmit {

/// |axis^{sign}>: one of the six single-qubit Pauli eigenstates. axis is never I.
struct PauliEigenstate {
    Pauli axis = Pauli::Z;
    std::int8_t sign = +1;

    bool operator==(const PauliEigenstate&) const = default;
};

using ProductState = std::vector<PauliEigenstate>;
using BitState = std::vector<std::uint8_t>;

/// |0...0> as a product of |Z^{+1}> states.
ProductState zero_product_state(std::size_t n);

std::string eigenstate_name(const PauliEigenstate& s);

/// The eigenstate of R_axis(theta)|s>. axis = I is the identity. Throws unless theta is a
/// tagged multiple of pi/2.
PauliEigenstate apply_clifford_rotation(PauliEigenstate s, Pauli axis, Angle theta);

/// Action of R_{Pa Pb}(pi) on |sa>|sb> when Pa equals the axis of sa: qubit a is unchanged and
/// qubit b flips sign iff Pb differs from its axis. Throws if Pa != sa.axis.
std::pair<PauliEigenstate, PauliEigenstate> apply_pi_two_qubit(PauliEigenstate sa,
                                                               PauliEigenstate sb, Pauli pa,
                                                               Pauli pb);

struct CorrectionRotation {
    Pauli axis = Pauli::I;
    Angle angle;
};

/// A rotation R_C(phi) with R_C(phi)|s> = |target^{+1}>. Returns (I, 0) when no change is needed,
/// else the first valid pair with axes ordered X < Y < Z and angles 0 < pi/2 < pi < 3pi/2.
CorrectionRotation correction_rotation(PauliEigenstate s, Pauli target);

/// Tracks |0...0> through a logical circuit of Clifford Pauli rotations that keep the state a
/// product state: weight-1 rotations by multiples of pi/2 and weight-2 rotations by pi.
ProductState track_product_state(const Circuit& c);

/// Bits of a native circuit built from CZ, RZ and X acting on |0...0>. Throws on SX.
BitState track_bits(const Circuit& c);

/// 0/1 string, qubit 0 leftmost.
std::string bits_to_string(const BitState& b);
BitState bits_from_string(const std::string& s);

}  // namespace benchmit
