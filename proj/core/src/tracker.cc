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


#include "benchmit/tracker.h"

#include <array>
#include <cmath>
#include <stdexcept>

#include "benchmit/linalg.h"

namespace benchmit {

namespace {

int state_index(PauliEigenstate s) {
    return 2 * (static_cast<int>(s.axis) - 1) + (s.sign < 0 ? 1 : 0);
}

PauliEigenstate state_from_index(int i) {
    return {static_cast<Pauli>(i / 2 + 1), static_cast<std::int8_t>(i % 2 == 0 ? +1 : -1)};
}

std::array<cplx, 2> state_vector(PauliEigenstate s) {
    const double h = 1 / std::sqrt(2.0);
    double sg = s.sign;
    switch (s.axis) {
        case Pauli::X:
            return {cplx(h), cplx(sg * h)};
        case Pauli::Y:
            return {cplx(h), cplx(0, sg * h)};
        case Pauli::Z:
            return s.sign > 0 ? std::array<cplx, 2>{1, 0} : std::array<cplx, 2>{0, 1};
        case Pauli::I:
            break;
    }
    throw std::invalid_argument("eigenstate axis must be X, Y or Z");
}

// table[state][axis - 1][quarter turns mod 4], derived by applying the rotation matrix to each
// eigenvector and identifying the image by overlap.
using RotationTable = std::array<std::array<std::array<std::int8_t, 4>, 3>, 6>;

RotationTable build_rotation_table() {
    RotationTable table{};
    for (int s = 0; s < 6; s++) {
        auto v = state_vector(state_from_index(s));
        for (int a = 0; a < 3; a++) {
            for (int k = 0; k < 4; k++) {
                Mat2 u = Mat2::rotation(static_cast<Pauli>(a + 1), k * (kPi / 2));
                cplx w0 = u(0, 0) * v[0] + u(0, 1) * v[1];
                cplx w1 = u(1, 0) * v[0] + u(1, 1) * v[1];
                int found = -1;
                for (int t = 0; t < 6; t++) {
                    auto e = state_vector(state_from_index(t));
                    double overlap = std::abs(std::conj(e[0]) * w0 + std::conj(e[1]) * w1);
                    if (std::abs(overlap - 1) < 1e-9) {
                        found = t;
                    }
                }
                if (found < 0) {
                    throw std::logic_error("Clifford rotation left the eigenstate set");
                }
                table[s][a][k] = static_cast<std::int8_t>(found);
            }
        }
    }
    return table;
}

const RotationTable& rotation_table() {
    static const RotationTable table = build_rotation_table();
    return table;
}

void check_state(PauliEigenstate s) {
    if (s.axis == Pauli::I || (s.sign != 1 && s.sign != -1)) {
        throw std::invalid_argument("invalid Pauli eigenstate");
    }
}

}  // namespace

ProductState zero_product_state(std::size_t n) {
    return ProductState(n, PauliEigenstate{Pauli::Z, +1});
}

std::string eigenstate_name(const PauliEigenstate& s) {
    return std::string("|") + pauli_char(s.axis) + (s.sign > 0 ? "+" : "-") + ">";
}

PauliEigenstate apply_clifford_rotation(PauliEigenstate s, Pauli axis, Angle theta) {
    check_state(s);
    auto k = theta.quarter_turns();
    if (!k) {
        throw std::invalid_argument("Clifford tracking needs an angle that is a multiple of pi/2");
    }
    if (axis == Pauli::I) {
        return s;
    }
    int idx = rotation_table()[state_index(s)][static_cast<int>(axis) - 1][*k % 4];
    return state_from_index(idx);
}

std::pair<PauliEigenstate, PauliEigenstate> apply_pi_two_qubit(PauliEigenstate sa,
                                                               PauliEigenstate sb, Pauli pa,
                                                               Pauli pb) {
    check_state(sa);
    check_state(sb);
    if (pa != sa.axis) {
        throw std::invalid_argument("anchor letter must equal the anchor qubit's eigenstate axis");
    }
    if (pb == Pauli::I) {
        throw std::invalid_argument("second letter of a weight-2 rotation cannot be I");
    }
    if (pb != sb.axis) {
        sb.sign = static_cast<std::int8_t>(-sb.sign);
    }
    return {sa, sb};
}

CorrectionRotation correction_rotation(PauliEigenstate s, Pauli target) {
    check_state(s);
    if (target == Pauli::I) {
        throw std::invalid_argument("correction target must be X, Y or Z");
    }
    PauliEigenstate want{target, +1};
    if (s == want) {
        return {};
    }
    for (Pauli axis : {Pauli::X, Pauli::Y, Pauli::Z}) {
        for (int k = 0; k < 4; k++) {
            Angle a = Angle::quarter_turns(k);
            if (apply_clifford_rotation(s, axis, a) == want) {
                return {axis, a};
            }
        }
    }
    throw std::logic_error("no correction rotation found");
}

ProductState track_product_state(const Circuit& c) {
    if (c.level() != Level::Logical) {
        throw std::invalid_argument("product-state tracking expects a logical circuit");
    }
    ProductState state = zero_product_state(c.n_qubits());
    for (const Gate& g : c.gates()) {
        if (g.arity == 1) {
            state[g.qubits[0]] = apply_clifford_rotation(state[g.qubits[0]], g.paulis[0], g.angle);
            continue;
        }
        auto k = g.angle.quarter_turns();
        if (!k || *k % 4 != 2) {
            throw std::invalid_argument("weight-2 rotation must have angle pi to stay a product");
        }
        // R_{PaPb}(pi) is Pa (x) Pb up to phase: each qubit flips iff its letter anticommutes.
        for (int j = 0; j < 2; j++) {
            PauliEigenstate& s = state[g.qubits[j]];
            if (g.paulis[j] != s.axis) {
                s.sign = static_cast<std::int8_t>(-s.sign);
            }
        }
    }
    return state;
}

BitState track_bits(const Circuit& c) {
    if (c.level() != Level::Native) {
        throw std::invalid_argument("bit tracking expects a native circuit");
    }
    BitState bits(c.n_qubits(), 0);
    for (std::size_t i = 0; i < c.size(); i++) {
        const Gate& g = c[i];
        if (g.kind == GateKind::SX) {
            throw std::invalid_argument("bit tracking cannot pass SX (gate " + std::to_string(i) +
                                        "); substitute X first");
        }
        if (g.kind == GateKind::X) {
            bits[g.qubits[0]] ^= 1;
        }
    }
    return bits;
}

std::string bits_to_string(const BitState& b) {
    std::string s;
    for (auto v : b) {
        s.push_back(v ? '1' : '0');
    }
    return s;
}

BitState bits_from_string(const std::string& s) {
    BitState b;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain 0 and 1");
        }
        b.push_back(c == '1');
    }
    return b;
}

}  // namespace benchmit
