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


#include "benchmit/statevector.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace benchmit {

StateVector::StateVector(std::size_t n_qubits) : n_(n_qubits) {
    if (n_qubits > 30) {
        throw std::length_error("statevector limited to 30 qubits");
    }
    amp_.assign(std::size_t{1} << n_qubits, cplx(0));
    amp_[0] = 1;
}

void StateVector::apply_1q(std::uint32_t q, const Mat2& u) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = amp_.size();
    for (std::size_t base = 0; base < dim; base += 2 * bit) {
        for (std::size_t j = base; j < base + bit; j++) {
            cplx a0 = amp_[j];
            cplx a1 = amp_[j | bit];
            amp_[j] = u.m[0] * a0 + u.m[1] * a1;
            amp_[j | bit] = u.m[2] * a0 + u.m[3] * a1;
        }
    }
}

void StateVector::apply_cz(std::uint32_t a, std::uint32_t b) {
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t j = 0; j < amp_.size(); j++) {
        if ((j & mask) == mask) {
            amp_[j] = -amp_[j];
        }
    }
}

void StateVector::apply_pauli(std::uint64_t x_mask, std::uint64_t z_mask, int y_count) {
    const cplx phase = i_power(y_count);
    std::vector<cplx> out(amp_.size());
    for (std::size_t j = 0; j < amp_.size(); j++) {
        double sign = (std::popcount(j & z_mask) & 1) ? -1.0 : 1.0;
        out[j ^ x_mask] = phase * sign * amp_[j];
    }
    amp_.swap(out);
}

void StateVector::apply_rotation(std::uint64_t x_mask, std::uint64_t z_mask, int y_count,
                                 double theta) {
    const double c = std::cos(theta / 2);
    const cplx ms = cplx(0, -std::sin(theta / 2)) * i_power(y_count);
    std::vector<cplx> out(amp_.size());
    for (std::size_t j = 0; j < amp_.size(); j++) {
        double sign = (std::popcount(j & z_mask) & 1) ? -1.0 : 1.0;
        out[j] += c * amp_[j];
        out[j ^ x_mask] += ms * sign * amp_[j];
    }
    amp_.swap(out);
}

void StateVector::apply(const ProgramOp& op) {
    switch (op.kind) {
        case ProgramOp::Kind::Unitary1:
            apply_1q(op.a, op.u);
            break;
        case ProgramOp::Kind::CZ:
            apply_cz(op.a, op.b);
            break;
        case ProgramOp::Kind::Rotation:
            apply_rotation(op.x_mask, op.z_mask, op.y_count, op.theta);
            break;
    }
}

void StateVector::run(const Program& prog) {
    if (prog.n_qubits != n_) {
        throw std::invalid_argument("program and state sizes differ");
    }
    for (const ProgramOp& op : prog.ops) {
        apply(op);
    }
}

double StateVector::expectation(const PauliString& p) const {
    if (p.size() != n_) {
        throw std::invalid_argument("observable length " + std::to_string(p.size()) +
                                    " does not match " + std::to_string(n_) + " qubits");
    }
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const cplx phase = i_power(static_cast<int>(p.y_count()));
    cplx total = 0;
    for (std::size_t j = 0; j < amp_.size(); j++) {
        double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
        total += std::conj(amp_[j ^ x]) * phase * sign * amp_[j];
    }
    return total.real();
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amp_.size());
    for (std::size_t j = 0; j < amp_.size(); j++) {
        out[j] = std::norm(amp_[j]);
    }
    return out;
}

StateVector simulate_statevector(const Circuit& c) {
    if (c.n_qubits() > kStatevectorQubitCap) {
        throw std::length_error("statevector simulation is capped at " +
                                std::to_string(kStatevectorQubitCap) + " qubits; circuit has " +
                                std::to_string(c.n_qubits()));
    }
    StateVector sv(c.n_qubits());
    sv.run(compile_program(c));
    return sv;
}

double exact_expectation(const Circuit& c, const PauliString& o) {
    return simulate_statevector(c).expectation(o);
}

}  // namespace benchmit
