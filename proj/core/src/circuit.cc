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


#include "benchmit/circuit.h"

#include <algorithm>
#include <stdexcept>

namespace benchmit {

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::CZ:
            return "CZ";
        case GateKind::RZ:
            return "RZ";
        case GateKind::X:
            return "X";
        case GateKind::SX:
            return "SX";
        case GateKind::PauliRot:
            return "ROT";
    }
    return "?";
}

const char* level_name(Level l) {
    return l == Level::Logical ? "logical" : "native";
}

Gate Gate::cz(std::uint32_t a, std::uint32_t b) {
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct qubits");
    }
    Gate g;
    g.kind = GateKind::CZ;
    g.arity = 2;
    g.qubits = {a, b};
    return g;
}

Gate Gate::rz(std::uint32_t q, Angle theta) {
    Gate g;
    g.kind = GateKind::RZ;
    g.qubits = {q, 0};
    g.angle = theta;
    return g;
}

Gate Gate::x(std::uint32_t q) {
    Gate g;
    g.kind = GateKind::X;
    g.qubits = {q, 0};
    return g;
}

Gate Gate::sx(std::uint32_t q) {
    Gate g;
    g.kind = GateKind::SX;
    g.qubits = {q, 0};
    return g;
}

Gate Gate::rot(std::uint32_t q, Pauli p, Angle theta) {
    if (p == Pauli::I) {
        throw std::invalid_argument("rotation generator must be a non-identity Pauli");
    }
    Gate g;
    g.kind = GateKind::PauliRot;
    g.qubits = {q, 0};
    g.paulis = {p, Pauli::I};
    g.angle = theta;
    return g;
}

Gate Gate::rot2(std::uint32_t a, Pauli pa, std::uint32_t b, Pauli pb, Angle theta) {
    if (a == b) {
        throw std::invalid_argument("two-qubit rotation needs two distinct qubits");
    }
    if (pa == Pauli::I || pb == Pauli::I) {
        throw std::invalid_argument("two-qubit rotation generator must have weight 2");
    }
    Gate g;
    g.kind = GateKind::PauliRot;
    g.arity = 2;
    g.qubits = {a, b};
    g.paulis = {pa, pb};
    g.angle = theta;
    return g;
}

Gate Gate::pauli_rot(const PauliString& generator, Angle theta) {
    auto support = generator.support();
    if (support.size() == 1) {
        auto q = static_cast<std::uint32_t>(support[0]);
        return rot(q, generator[q], theta);
    }
    if (support.size() == 2) {
        auto a = static_cast<std::uint32_t>(support[0]);
        auto b = static_cast<std::uint32_t>(support[1]);
        return rot2(a, generator[a], b, generator[b], theta);
    }
    throw std::invalid_argument("Pauli rotation generator must have weight 1 or 2, got " +
                                std::to_string(support.size()));
}

PauliString Gate::generator(std::size_t n_qubits) const {
    if (kind != GateKind::PauliRot) {
        throw std::logic_error("generator() called on a native gate");
    }
    PauliString p(n_qubits);
    for (int k = 0; k < arity; k++) {
        p.set(qubits[k], paulis[k]);
    }
    return p;
}

bool Gate::operator==(const Gate& o) const {
    if (kind != o.kind || arity != o.arity || qubits[0] != o.qubits[0]) {
        return false;
    }
    if (arity == 2 && qubits[1] != o.qubits[1]) {
        return false;
    }
    if (kind == GateKind::PauliRot && (paulis != o.paulis)) {
        return false;
    }
    if ((kind == GateKind::PauliRot || kind == GateKind::RZ) && !(angle == o.angle)) {
        return false;
    }
    return true;
}

void Circuit::append(const Gate& g) {
    for (int k = 0; k < g.arity; k++) {
        if (g.qubits[k] >= n_qubits_) {
            throw std::out_of_range("gate qubit " + std::to_string(g.qubits[k]) +
                                    " out of range for " + std::to_string(n_qubits_) +
                                    "-qubit circuit");
        }
    }
    if (level_ == Level::Native && !g.is_native()) {
        throw std::invalid_argument("Pauli rotation appended to a native-level circuit");
    }
    if (level_ == Level::Logical && g.is_native()) {
        throw std::invalid_argument(std::string(gate_kind_name(g.kind)) +
                                    " appended to a logical-level circuit");
    }
    gates_.push_back(g);
}

void Circuit::append_all(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("cannot concatenate circuits on different registers");
    }
    for (const Gate& g : other.gates_) {
        append(g);
    }
}

void Circuit::append_all(const std::vector<Gate>& gates) {
    for (const Gate& g : gates) {
        append(g);
    }
}

void Circuit::mark_layer() {
    if (!layer_starts_.empty() && layer_starts_.back() == gates_.size()) {
        return;
    }
    layer_starts_.push_back(gates_.size());
}

std::pair<std::size_t, std::size_t> Circuit::layer_range(std::size_t i) const {
    if (i >= layer_starts_.size()) {
        throw std::out_of_range("layer index out of range");
    }
    std::size_t end = i + 1 < layer_starts_.size() ? layer_starts_[i + 1] : gates_.size();
    return {layer_starts_[i], end};
}

GateCensus gate_census(const Circuit& c) {
    GateCensus census;
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::CZ:
                census.cz++;
                break;
            case GateKind::RZ:
                census.rz++;
                break;
            case GateKind::X:
                census.x++;
                break;
            case GateKind::SX:
                census.sx++;
                break;
            case GateKind::PauliRot:
                (g.arity == 2 ? census.rot2 : census.rot1)++;
                break;
        }
    }
    census.two_qubit = census.cz + census.rot2;
    return census;
}

std::size_t circuit_depth(const Circuit& c) {
    std::vector<std::size_t> frontier(c.n_qubits(), 0);
    std::size_t depth = 0;
    for (const Gate& g : c.gates()) {
        if (g.kind == GateKind::RZ) {
            continue;
        }
        std::size_t t = frontier[g.qubits[0]];
        if (g.arity == 2) {
            t = std::max(t, frontier[g.qubits[1]]);
        }
        t++;
        for (int k = 0; k < g.arity; k++) {
            frontier[g.qubits[k]] = t;
        }
        depth = std::max(depth, t);
    }
    return depth;
}

}  // namespace benchmit
