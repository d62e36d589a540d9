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

#include <array>
#include <complex>

#include "benchmit/angle.h"
#include "benchmit/pauli.h"

namespace benchmit {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
struct Mat2 {
    std::array<cplx, 4> m{};

    static Mat2 identity() { return {{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
    static Mat2 pauli(Pauli p);
    /// exp(-i theta P / 2) for a single-qubit Pauli letter.
    static Mat2 rotation(Pauli p, double theta);
    static Mat2 rz(double theta) { return rotation(Pauli::Z, theta); }
    static Mat2 sx();
    static Mat2 x() { return pauli(Pauli::X); }

    cplx operator()(int r, int c) const { return m[2 * r + c]; }
    cplx& operator()(int r, int c) { return m[2 * r + c]; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 adjoint() const;
    cplx det() const { return m[0] * m[3] - m[1] * m[2]; }
};

/// |Tr(A^dag B)| / 2: equals 1 exactly when A and B agree up to a global phase.
double phase_insensitive_overlap(const Mat2& a, const Mat2& b);

/// Angles of U = e^{i g} RZ(phi) RY(theta) RZ(lambda).
struct ZyzAngles {
    double theta = 0;
    double phi = 0;
    double lambda = 0;
};

ZyzAngles zyz_decompose(const Mat2& u);

}  // namespace benchmit
