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


#include "benchmit/program.h"

#include <optional>
#include <stdexcept>

namespace benchmit {

Mat2 single_qubit_matrix(const Gate& g) {
    switch (g.kind) {
        case GateKind::RZ:
            return Mat2::rz(g.angle.radians());
        case GateKind::X:
            return Mat2::x();
        case GateKind::SX:
            return Mat2::sx();
        case GateKind::PauliRot:
            if (g.arity == 1) {
                return Mat2::rotation(g.paulis[0], g.angle.radians());
            }
            break;
        case GateKind::CZ:
            break;
    }
    throw std::invalid_argument("not a single-qubit gate");
}

Program compile_program(const Circuit& c) {
    if (c.n_qubits() > 30) {
        throw std::length_error("circuit too large to simulate densely");
    }
    Program prog;
    prog.n_qubits = c.n_qubits();
    std::vector<std::optional<Mat2>> pending(c.n_qubits());
    auto flush = [&](std::uint32_t q) {
        if (pending[q]) {
            ProgramOp op;
            op.kind = ProgramOp::Kind::Unitary1;
            op.a = q;
            op.u = *pending[q];
            prog.ops.push_back(op);
            pending[q].reset();
        }
    };
    for (const Gate& g : c.gates()) {
        if (g.arity == 1) {
            Mat2 m = single_qubit_matrix(g);
            auto& slot = pending[g.qubits[0]];
            slot = slot ? m * *slot : m;
            continue;
        }
        flush(g.qubits[0]);
        flush(g.qubits[1]);
        ProgramOp op;
        op.a = g.qubits[0];
        op.b = g.qubits[1];
        if (g.kind == GateKind::CZ) {
            op.kind = ProgramOp::Kind::CZ;
            prog.n_cz++;
        } else {
            PauliString p = g.generator(c.n_qubits());
            op.kind = ProgramOp::Kind::Rotation;
            op.x_mask = p.x_mask();
            op.z_mask = p.z_mask();
            op.y_count = static_cast<int>(p.y_count());
            op.theta = g.angle.radians();
        }
        prog.ops.push_back(op);
    }
    for (std::uint32_t q = 0; q < c.n_qubits(); q++) {
        flush(q);
    }
    return prog;
}

}  // namespace benchmit
