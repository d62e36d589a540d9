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


#include "benchmit/density_matrix.h"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace benchmit {

DensityMatrix::DensityMatrix(std::size_t n_qubits) : n_(n_qubits) {
    if (n_qubits > 15) {
        throw std::length_error("density matrix limited to 15 qubits");
    }
    data_.assign(std::size_t{1} << (2 * n_qubits), cplx(0));
    data_[0] = 1;
}

namespace {

/// Spreads the bits of idx around zero bits at the given ascending positions.
template <std::size_t K>
std::size_t insert_zeros(std::size_t idx, const std::array<std::size_t, K>& pos) {
    for (std::size_t p : pos) {
        const std::size_t low = idx & ((std::size_t{1} << p) - 1);
        idx = low | ((idx >> p) << (p + 1));
    }
    return idx;
}

template <std::size_t K>
std::array<std::size_t, K> sorted(std::array<std::size_t, K> a) {
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

void DensityMatrix::apply_1q(std::uint32_t q, const Mat2& u) {
    // rho' = U rho U^dag on the 2x2 block spanned by row bit q and column bit q + n.
    const std::size_t r = std::size_t{1} << q;
    const std::size_t c = r << n_;
    const auto pos = sorted<2>({q, q + n_});
    const std::size_t blocks = data_.size() >> 2;
    const cplx u00 = u.m[0], u01 = u.m[1], u10 = u.m[2], u11 = u.m[3];
    const cplx v00 = std::conj(u00), v01 = std::conj(u01), v10 = std::conj(u10),
               v11 = std::conj(u11);
    cplx* d = data_.data();
    for (std::size_t i = 0; i < blocks; i++) {
        const std::size_t j = insert_zeros(i, pos);
        const cplx a00 = d[j], a10 = d[j | r], a01 = d[j | c], a11 = d[j | r | c];
        // Rows first: b = U a.
        const cplx b00 = u00 * a00 + u01 * a10;
        const cplx b10 = u10 * a00 + u11 * a10;
        const cplx b01 = u00 * a01 + u01 * a11;
        const cplx b11 = u10 * a01 + u11 * a11;
        // Columns: b conj(U)^T.
        d[j] = b00 * v00 + b01 * v01;
        d[j | c] = b00 * v10 + b01 * v11;
        d[j | r] = b10 * v00 + b11 * v01;
        d[j | r | c] = b10 * v10 + b11 * v11;
    }
}

void DensityMatrix::apply_cz(std::uint32_t a, std::uint32_t b) {
    apply_noisy_cz(a, b, 0);
}

void DensityMatrix::depolarize(std::uint32_t a, std::uint32_t b, double p) {
    if (p == 0) {
        return;
    }
    two_qubit_pass(a, b, false, p);
}

void DensityMatrix::apply_noisy_cz(std::uint32_t a, std::uint32_t b, double p) {
    two_qubit_pass(a, b, true, p);
}

void DensityMatrix::two_qubit_pass(std::uint32_t a, std::uint32_t b, bool cz, double p) {
    const std::size_t ra = std::size_t{1} << a;
    const std::size_t rb = std::size_t{1} << b;
    const std::size_t ca = ra << n_;
    const std::size_t cb = rb << n_;
    const auto pos = sorted<4>({a, b, a + n_, b + n_});
    const std::size_t blocks = data_.size() >> 4;
    std::array<std::size_t, 16> offset{};
    std::array<double, 16> sign{};
    for (std::size_t s = 0; s < 16; s++) {
        offset[s] = ((s & 1) ? ra : 0) | ((s & 2) ? rb : 0) | ((s & 4) ? ca : 0) |
                    ((s & 8) ? cb : 0);
        const bool row = (s & 3) == 3;
        const bool col = (s & 12) == 12;
        sign[s] = (cz && row != col) ? -1.0 : 1.0;
    }
    const double keep = 1 - p;
    constexpr std::size_t kDiag[4] = {0, 5, 10, 15};
    cplx* d = data_.data();
    for (std::size_t i = 0; i < blocks; i++) {
        const std::size_t j = insert_zeros(i, pos);
        if (p == 0) {
            for (std::size_t s = 0; s < 16; s++) {
                d[j | offset[s]] *= sign[s];
            }
            continue;
        }
        // CZ leaves the diagonal, hence the trace over (a, b), unchanged.
        cplx tr = 0;
        for (std::size_t s : kDiag) {
            tr += d[j | offset[s]];
        }
        for (std::size_t s = 0; s < 16; s++) {
            d[j | offset[s]] *= keep * sign[s];
        }
        const cplx add = p * tr / 4.0;
        for (std::size_t s : kDiag) {
            d[j | offset[s]] += add;
        }
    }
}

void DensityMatrix::apply(const ProgramOp& op) {
    switch (op.kind) {
        case ProgramOp::Kind::Unitary1:
            apply_1q(op.a, op.u);
            break;
        case ProgramOp::Kind::CZ:
            apply_cz(op.a, op.b);
            break;
        case ProgramOp::Kind::Rotation:
            throw std::invalid_argument("density-matrix simulation expects a native circuit");
    }
}

double DensityMatrix::expectation(const PauliString& p) const {
    if (p.size() != n_) {
        throw std::invalid_argument("observable length " + std::to_string(p.size()) +
                                    " does not match " + std::to_string(n_) + " qubits");
    }
    // Tr(P rho) = sum_c phase(c) rho(c, c ^ x) with P|c> = phase(c) |c ^ x>.
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const cplx phase = i_power(static_cast<int>(p.y_count()));
    const std::size_t dim = std::size_t{1} << n_;
    cplx total = 0;
    for (std::size_t c = 0; c < dim; c++) {
        double sign = (std::popcount(c & z) & 1) ? -1.0 : 1.0;
        total += phase * sign * data_[c | ((c ^ x) << n_)];
    }
    return total.real();
}

std::vector<double> DensityMatrix::probabilities() const {
    const std::size_t dim = std::size_t{1} << n_;
    std::vector<double> out(dim);
    for (std::size_t c = 0; c < dim; c++) {
        out[c] = data_[c | (c << n_)].real();
    }
    return out;
}

double DensityMatrix::trace() const {
    double t = 0;
    for (double v : probabilities()) {
        t += v;
    }
    return t;
}

}  // namespace benchmit
