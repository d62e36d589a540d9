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


#include "benchmit/linalg.h"

#include <cmath>

namespace benchmit {

Mat2 Mat2::pauli(Pauli p) {
    const cplx i(0, 1);
    switch (p) {
        case Pauli::I:
            return identity();
        case Pauli::X:
            return {{cplx(0), cplx(1), cplx(1), cplx(0)}};
        case Pauli::Y:
            return {{cplx(0), -i, i, cplx(0)}};
        case Pauli::Z:
            return {{cplx(1), cplx(0), cplx(0), cplx(-1)}};
    }
    return identity();
}

Mat2 Mat2::rotation(Pauli p, double theta) {
    Mat2 pm = pauli(p);
    cplx c(std::cos(theta / 2), 0);
    cplx s(0, -std::sin(theta / 2));
    Mat2 out;
    for (int k = 0; k < 4; k++) {
        out.m[k] = s * pm.m[k];
    }
    out.m[0] += c;
    out.m[3] += c;
    return out;
}

Mat2 Mat2::sx() {
    const cplx a(0.5, 0.5);
    const cplx b(0.5, -0.5);
    return {{a, b, b, a}};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    r.m[0] = m[0] * o.m[0] + m[1] * o.m[2];
    r.m[1] = m[0] * o.m[1] + m[1] * o.m[3];
    r.m[2] = m[2] * o.m[0] + m[3] * o.m[2];
    r.m[3] = m[2] * o.m[1] + m[3] * o.m[3];
    return r;
}

Mat2 Mat2::adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

double phase_insensitive_overlap(const Mat2& a, const Mat2& b) {
    cplx t = 0;
    for (int k = 0; k < 4; k++) {
        t += std::conj(a.m[k]) * b.m[k];
    }
    return std::abs(t) / 2;
}

ZyzAngles zyz_decompose(const Mat2& u) {
    // Normalise to SU(2): V = [[e^{-i(phi+lam)/2} c, -e^{-i(phi-lam)/2} s],
    //                          [e^{i(phi-lam)/2} s,  e^{i(phi+lam)/2} c]].
    cplx root = std::sqrt(u.det());
    Mat2 v;
    for (int k = 0; k < 4; k++) {
        v.m[k] = u.m[k] / root;
    }
    ZyzAngles z;
    z.theta = 2 * std::atan2(std::abs(v.m[2]), std::abs(v.m[0]));
    double sum = std::abs(v.m[3]) > 1e-15 ? 2 * std::arg(v.m[3]) : 0.0;
    double diff = std::abs(v.m[2]) > 1e-15 ? 2 * std::arg(v.m[2]) : 0.0;
    z.phi = (sum + diff) / 2;
    z.lambda = (sum - diff) / 2;
    return z;
}

}  // namespace benchmit
