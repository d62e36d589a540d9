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


#include "benchmit/mitigation/transforms.h"

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>

#include "benchmit/linalg.h"
#include "benchmit/rng.h"

namespace benchmit {

namespace {

using Mat4 = std::array<cplx, 16>;

Mat4 kron(const Mat2& a, const Mat2& b) {
    // Basis index = bit0 (qubit a) + 2 * bit1 (qubit b).
    Mat4 out{};
    for (int ra = 0; ra < 2; ra++) {
        for (int rb = 0; rb < 2; rb++) {
            for (int ca = 0; ca < 2; ca++) {
                for (int cb = 0; cb < 2; cb++) {
                    out[(ra + 2 * rb) * 4 + (ca + 2 * cb)] = a(ra, ca) * b(rb, cb);
                }
            }
        }
    }
    return out;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int i = 0; i < 4; i++) {
        for (int k = 0; k < 4; k++) {
            for (int j = 0; j < 4; j++) {
                out[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
            }
        }
    }
    return out;
}

bool proportional(const Mat4& a, const Mat4& b) {
    cplx inner = 0;
    for (int i = 0; i < 16; i++) {
        inner += std::conj(a[i]) * b[i];
    }
    return std::abs(std::abs(inner) - 4.0) < 1e-9;
}

std::array<std::array<Pauli, 2>, 16> build_table() {
    Mat4 cz{};
    cz[0] = cz[5] = cz[10] = 1;
    cz[15] = -1;
    std::array<std::array<Pauli, 2>, 16> table{};
    for (int i = 0; i < 16; i++) {
        Mat4 pre = kron(Mat2::pauli(Pauli(i & 3)), Mat2::pauli(Pauli(i >> 2)));
        Mat4 lhs = mul(cz, pre);
        bool found = false;
        for (int j = 0; j < 16 && !found; j++) {
            Mat4 post = kron(Mat2::pauli(Pauli(j & 3)), Mat2::pauli(Pauli(j >> 2)));
            if (proportional(mul(post, lhs), cz)) {
                table[i] = {Pauli(j & 3), Pauli(j >> 2)};
                found = true;
            }
        }
        if (!found) {
            throw std::logic_error("CZ twirl table incomplete");
        }
    }
    return table;
}

}  // namespace

Circuit fold(const Circuit& native, int r) {
    if (r < 1 || r % 2 == 0) {
        throw std::invalid_argument("fold factor must be a positive odd integer");
    }
    if (native.level() != Level::Native) {
        throw std::invalid_argument("fold expects a native circuit");
    }
    Circuit out(native.n_qubits(), Level::Native);
    const auto& starts = native.layer_starts();
    std::size_t next_mark = 0;
    const auto& gates = native.gates();
    for (std::size_t i = 0; i <= gates.size(); i++) {
        while (next_mark < starts.size() && starts[next_mark] == i) {
            out.mark_layer();
            next_mark++;
        }
        if (i == gates.size()) {
            break;
        }
        const int copies = gates[i].kind == GateKind::CZ ? r : 1;
        for (int k = 0; k < copies; k++) {
            out.append(gates[i]);
        }
    }
    return out;
}

std::array<Pauli, 2> cz_twirl_partner(Pauli pa, Pauli pb) {
    static const auto table = build_table();
    return table[static_cast<int>(pa) + 4 * static_cast<int>(pb)];
}

std::vector<Gate> native_pauli(Pauli p, std::uint32_t q) {
    switch (p) {
        case Pauli::I:
            return {Gate::x(q), Gate::x(q)};
        case Pauli::X:
            return {Gate::sx(q), Gate::sx(q)};
        case Pauli::Y:
            return {Gate::rz(q, Angle::quarter_turns(2)), Gate::sx(q), Gate::sx(q)};
        case Pauli::Z:
            return {Gate::x(q), Gate::rz(q, Angle::quarter_turns(2)), Gate::x(q)};
    }
    throw std::logic_error("unreachable Pauli value");
}

Circuit pauli_twirl(const Circuit& native, std::uint64_t seed) {
    if (native.level() != Level::Native) {
        throw std::invalid_argument("pauli_twirl expects a native circuit");
    }
    Rng rng(seed);
    Circuit out(native.n_qubits(), Level::Native);
    const auto& starts = native.layer_starts();
    std::size_t next_mark = 0;
    const auto& gates = native.gates();
    for (std::size_t i = 0; i <= gates.size(); i++) {
        while (next_mark < starts.size() && starts[next_mark] == i) {
            out.mark_layer();
            next_mark++;
        }
        if (i == gates.size()) {
            break;
        }
        const Gate& g = gates[i];
        if (g.kind != GateKind::CZ) {
            out.append(g);
            continue;
        }
        const int idx = static_cast<int>(rng.below(16));
        const Pauli pa = Pauli(idx & 3);
        const Pauli pb = Pauli(idx >> 2);
        const auto post = cz_twirl_partner(pa, pb);
        const std::uint32_t a = g.qubits[0];
        const std::uint32_t b = g.qubits[1];
        out.append_all(native_pauli(pa, a));
        out.append_all(native_pauli(pb, b));
        out.append(g);
        out.append_all(native_pauli(post[0], a));
        out.append_all(native_pauli(post[1], b));
    }
    return out;
}

Circuit insert_dd(const Circuit& native) {
    if (native.level() != Level::Native) {
        throw std::invalid_argument("insert_dd expects a native circuit");
    }
    const std::size_t n = native.n_qubits();
    const auto& gates = native.gates();
    std::vector<std::size_t> frontier(n, 0);
    // Last scheduled (moment, gate index) per qubit; moment 0 means never used.
    std::vector<std::size_t> last_moment(n, 0);
    std::map<std::size_t, std::vector<std::uint32_t>> insert_before;
    for (std::size_t i = 0; i < gates.size(); i++) {
        const Gate& g = gates[i];
        if (g.kind == GateKind::RZ) {
            continue;
        }
        const std::size_t arity = g.is_two_qubit() ? 2 : 1;
        std::size_t m = 0;
        for (std::size_t k = 0; k < arity; k++) {
            m = std::max(m, frontier[g.qubits[k]]);
        }
        m += 1;
        for (std::size_t k = 0; k < arity; k++) {
            const std::uint32_t q = g.qubits[k];
            if (last_moment[q] != 0 && m - last_moment[q] > 1) {
                insert_before[i].push_back(q);
            }
            frontier[q] = m;
            last_moment[q] = m;
        }
    }
    if (insert_before.empty()) {
        return native;
    }
    Circuit out(n, Level::Native);
    const auto& starts = native.layer_starts();
    std::size_t next_mark = 0;
    for (std::size_t i = 0; i <= gates.size(); i++) {
        while (next_mark < starts.size() && starts[next_mark] == i) {
            out.mark_layer();
            next_mark++;
        }
        if (i == gates.size()) {
            break;
        }
        auto it = insert_before.find(i);
        if (it != insert_before.end()) {
            for (std::uint32_t q : it->second) {
                out.append(Gate::x(q));
                out.append(Gate::x(q));
            }
        }
        out.append(gates[i]);
    }
    return out;
}

}  // namespace benchmit
