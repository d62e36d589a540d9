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


#include "benchmit/transpile.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace benchmit {

namespace {

const Mat2& hadamard() {
    static const Mat2 h = [] {
        const double r = 1 / std::sqrt(2.0);
        return Mat2{{cplx(r), cplx(r), cplx(r), cplx(-r)}};
    }();
    return h;
}

// Single-qubit frame V with V P V^dag = Z.
Mat2 to_z_frame(Pauli p) {
    switch (p) {
        case Pauli::X:
            return hadamard();
        case Pauli::Y:
            return hadamard() * Mat2::rotation(Pauli::Z, -kPi / 2);
        case Pauli::Z:
            return Mat2::identity();
        case Pauli::I:
            break;
    }
    throw std::invalid_argument("frame change needs a non-identity letter");
}

void append_pad(std::vector<Gate>& out, std::uint32_t q) {
    out.push_back(Gate::x(q));
    out.push_back(Gate::x(q));
}

}  // namespace

void append_euler(std::vector<Gate>& out, std::uint32_t q, const Mat2& u) {
    // U ~ RZ(phi + pi) SX RZ(theta + pi) SX RZ(lambda) for U ~ RZ(phi) RY(theta) RZ(lambda).
    ZyzAngles z = zyz_decompose(u);
    out.push_back(Gate::rz(q, Angle::radians(z.lambda)));
    out.push_back(Gate::sx(q));
    out.push_back(Gate::rz(q, Angle::radians(z.theta + kPi)));
    out.push_back(Gate::sx(q));
    out.push_back(Gate::rz(q, Angle::radians(z.phi + kPi)));
}

std::vector<Gate> rigid_transpile(const Gate& rotation, const NativeTemplate& tmpl) {
    if (rotation.kind != GateKind::PauliRot) {
        throw std::invalid_argument("rigid_transpile expects a Pauli rotation");
    }
    if (rotation.arity != tmpl.weight) {
        throw std::invalid_argument("rotation of weight " + std::to_string(rotation.arity) +
                                    " does not fit a weight-" + std::to_string(tmpl.weight) +
                                    " template");
    }
    std::vector<Gate> out;
    double theta = rotation.angle.radians();
    if (rotation.arity == 1) {
        std::uint32_t q = rotation.qubits[0];
        append_euler(out, q, Mat2::rotation(rotation.paulis[0], theta));
        append_pad(out, q);
        return out;
    }
    std::uint32_t a = rotation.qubits[0];
    std::uint32_t b = rotation.qubits[1];
    Mat2 va = to_z_frame(rotation.paulis[0]);
    Mat2 vb = to_z_frame(rotation.paulis[1]);
    append_euler(out, a, va);
    append_euler(out, b, hadamard() * vb);
    out.push_back(Gate::cz(a, b));
    append_euler(out, a, Mat2::identity());
    append_euler(out, b, Mat2::rotation(Pauli::X, theta));
    out.push_back(Gate::cz(a, b));
    append_euler(out, a, va.adjoint());
    append_euler(out, b, vb.adjoint() * hadamard());
    append_pad(out, a);
    return out;
}

namespace {

void append_compact(Circuit& out, const Gate& g) {
    std::vector<Gate> seq;
    if (g.arity == 1) {
        append_euler(seq, g.qubits[0], Mat2::rotation(g.paulis[0], g.angle.radians()));
    } else {
        auto k = g.angle.quarter_turns();
        if (g.paulis[0] != Pauli::Z || g.paulis[1] != Pauli::Z || !k || *k % 2 != 1) {
            throw std::invalid_argument(
                "compact path only handles R_ZZ at odd multiples of pi/2");
        }
        // R_ZZ(t) ~ CZ RZ(t) RZ(t) when t = +-pi/2 (mod 2pi).
        seq.push_back(Gate::rz(g.qubits[0], g.angle));
        seq.push_back(Gate::rz(g.qubits[1], g.angle));
        seq.push_back(Gate::cz(g.qubits[0], g.qubits[1]));
    }
    for (const Gate& n : seq) {
        out.append(n);
    }
}

}  // namespace

Circuit transpile(const Circuit& logical, TranspilePath path) {
    if (logical.level() != Level::Logical) {
        throw std::invalid_argument("transpile expects a logical circuit");
    }
    Circuit out(logical.n_qubits(), Level::Native);
    const auto& layers = logical.layer_starts();
    std::size_t next_layer = 0;
    for (std::size_t i = 0; i < logical.size(); i++) {
        while (next_layer < layers.size() && layers[next_layer] == i) {
            out.mark_layer();
            next_layer++;
        }
        const Gate& g = logical[i];
        if (path == TranspilePath::Rigid) {
            auto tmpl = g.arity == 1 ? NativeTemplate::single_qubit() : NativeTemplate::two_qubit();
            for (const Gate& n : rigid_transpile(g, tmpl)) {
                out.append(n);
            }
        } else {
            append_compact(out, g);
        }
    }
    if (next_layer < layers.size()) {
        out.mark_layer();
    }
    return out;
}

std::vector<SkeletonEntry> structural_skeleton(const Circuit& native) {
    std::vector<SkeletonEntry> skel;
    for (const Gate& g : native.gates()) {
        switch (g.kind) {
            case GateKind::CZ:
                skel.push_back({SkeletonClass::CZ, std::min(g.qubits[0], g.qubits[1]),
                                std::max(g.qubits[0], g.qubits[1])});
                break;
            case GateKind::X:
            case GateKind::SX:
                skel.push_back({SkeletonClass::RX, g.qubits[0], g.qubits[0]});
                break;
            case GateKind::RZ:
                break;
            case GateKind::PauliRot:
                throw std::invalid_argument("structural skeleton needs a native circuit");
        }
    }
    return skel;
}

StructuralMatch structural_match(const Circuit& a, const Circuit& b) {
    if (a.level() != Level::Native || b.level() != Level::Native) {
        throw std::invalid_argument("structural_match expects native circuits");
    }
    StructuralMatch m;
    if (a.n_qubits() != b.n_qubits()) {
        m.ok = false;
        return m;
    }
    std::size_t ia = 0;
    std::size_t ib = 0;
    std::size_t k = 0;
    auto skip_rz = [](const Circuit& c, std::size_t& i) {
        while (i < c.size() && c[i].kind == GateKind::RZ) {
            i++;
        }
    };
    auto entry = [](const Gate& g) {
        if (g.kind == GateKind::CZ) {
            return SkeletonEntry{SkeletonClass::CZ, std::min(g.qubits[0], g.qubits[1]),
                                 std::max(g.qubits[0], g.qubits[1])};
        }
        return SkeletonEntry{SkeletonClass::RX, g.qubits[0], g.qubits[0]};
    };
    while (true) {
        skip_rz(a, ia);
        skip_rz(b, ib);
        bool end_a = ia == a.size();
        bool end_b = ib == b.size();
        if (end_a && end_b) {
            return m;
        }
        if (end_a || end_b || !(entry(a[ia]) == entry(b[ib]))) {
            m.ok = false;
            m.skeleton_index = k;
            if (!end_a) {
                m.gate_a = ia;
            }
            if (!end_b) {
                m.gate_b = ib;
            }
            return m;
        }
        ia++;
        ib++;
        k++;
    }
}

Circuit native_inverse(const Circuit& c) {
    if (c.level() != Level::Native) {
        throw std::invalid_argument("native_inverse expects a native circuit");
    }
    Circuit out(c.n_qubits(), Level::Native);
    for (std::size_t i = c.size(); i-- > 0;) {
        const Gate& g = c[i];
        switch (g.kind) {
            case GateKind::CZ:
            case GateKind::X:
                out.append(g);
                break;
            case GateKind::RZ:
                out.append(Gate::rz(g.qubits[0], -g.angle));
                break;
            case GateKind::SX:
                out.append(Gate::rz(g.qubits[0], Angle::quarter_turns(2)));
                out.append(g);
                out.append(Gate::rz(g.qubits[0], Angle::quarter_turns(2)));
                break;
            case GateKind::PauliRot:
                throw std::logic_error("unreachable");
        }
    }
    return out;
}

}  // namespace benchmit
