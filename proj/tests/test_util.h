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

#include <cmath>
#include <cstdint>
#include <random>

#include "benchmit/circuit.h"
#include "benchmit/noisy_sim.h"
#include "benchmit/statevector.h"

namespace benchmit::testing {

// Random native circuit with exactly n_cz CZ gates on random pairs and a random 1q gate
// sprinkle (RZ with arbitrary angles, X, SX) between them.
inline Circuit random_native(std::size_t n, std::size_t n_cz, std::size_t gates_between,
                             std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint32_t> qubit(0, static_cast<std::uint32_t>(n - 1));
    std::uniform_real_distribution<double> angle(-3.5, 3.5);
    Circuit c(n, Level::Native);
    auto sprinkle = [&] {
        for (std::size_t k = 0; k < gates_between; k++) {
            const std::uint32_t q = qubit(gen);
            switch (gen() % 3) {
                case 0:
                    c.append(Gate::rz(q, Angle::radians(angle(gen))));
                    break;
                case 1:
                    c.append(Gate::x(q));
                    break;
                default:
                    c.append(Gate::sx(q));
                    break;
            }
        }
    };
    sprinkle();
    for (std::size_t i = 0; i < n_cz; i++) {
        std::uint32_t a = qubit(gen);
        std::uint32_t b = qubit(gen);
        while (b == a) {
            b = qubit(gen);
        }
        c.append(Gate::cz(a, b));
        sprinkle();
    }
    return c;
}

// Random logical circuit of weight-1 and weight-2 Pauli rotations.
inline Circuit random_logical(std::size_t n, std::size_t n_gates, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint32_t> qubit(0, static_cast<std::uint32_t>(n - 1));
    std::uniform_real_distribution<double> angle(-3.5, 3.5);
    Circuit c(n, Level::Logical);
    for (std::size_t i = 0; i < n_gates; i++) {
        const Pauli pa = Pauli(1 + gen() % 3);
        if (n >= 2 && gen() % 2) {
            std::uint32_t a = qubit(gen);
            std::uint32_t b = qubit(gen);
            while (b == a) {
                b = qubit(gen);
            }
            c.append(Gate::rot2(a, pa, b, Pauli(1 + gen() % 3), Angle::radians(angle(gen))));
        } else {
            c.append(Gate::rot(qubit(gen), pa, Angle::radians(angle(gen))));
        }
    }
    return c;
}

// First Pauli string (in base-4 counting order) with noiseless |<O>| > 0.2 on c whose value
// moves by more than 0.01 under uniform depolarizing noise p.
inline PauliString informative_observable(const Circuit& c, double noise = 0.05) {
    const std::size_t n = c.n_qubits();
    StateVector sv = simulate_statevector(c);
    for (std::size_t code = 1; code < (std::size_t{1} << (2 * n)); code++) {
        PauliString p(n);
        for (std::size_t q = 0; q < n; q++) {
            p.set(q, Pauli(code >> (2 * q) & 3));
        }
        const double v = sv.expectation(p);
        if (std::abs(v) > 0.2 && std::abs(noisy_expectation(c, p, NoiseModel::uniform(noise)) -
                                          v) > 0.01) {
            return p;
        }
    }
    return PauliString(n);
}

}  // namespace benchmit::testing
