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


#include "benchmit/executor.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "benchmit/rng.h"
#include "benchmit/transpile.h"

namespace benchmit {

Distribution Executor::run(const Circuit& native, std::uint64_t seed) {
    if (native.level() != Level::Native) {
        throw std::invalid_argument("executors run native circuits only");
    }
    Distribution d = execute(native, seed);
    runs_.fetch_add(1);
    return d;
}

Distribution ExactExecutor::execute(const Circuit& native, std::uint64_t) {
    Distribution d;
    d.probs = simulate_density(native, nm_).probabilities();
    if (!nm_.readout.empty()) {
        d.probs = apply_readout(std::move(d.probs), nm_.readout);
    }
    return d;
}

Distribution ShotExecutor::execute(const Circuit& native, std::uint64_t seed) {
    if (shots_ == 0) {
        throw std::invalid_argument("shot executor needs a positive shot count");
    }
    const std::size_t n = native.n_qubits();
    if (mode_ == ShotMode::DensitySampling) {
        std::vector<double> probs = simulate_density(native, nm_).probabilities();
        if (!nm_.readout.empty()) {
            probs = apply_readout(std::move(probs), nm_.readout);
        }
        Rng rng(seed);
        return distribution_from_counts(sample_counts(probs, shots_, rng), shots_);
    }
    ShotRecord sr = sample_shots(native, nm_, shots_, seed);
    std::vector<std::size_t> counts(std::size_t{1} << n, 0);
    for (const auto& [bits, count] : sr.counts) {
        std::size_t idx = 0;
        for (std::size_t q = 0; q < n; q++) {
            if (bits[q] == '1') {
                idx |= std::size_t{1} << q;
            }
        }
        counts[idx] = count;
    }
    return distribution_from_counts(counts, shots_);
}

Distribution distribution_from_counts(const std::vector<std::size_t>& counts, std::size_t shots) {
    Distribution d;
    d.shots = shots;
    d.probs.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); i++) {
        d.probs[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
    }
    return d;
}

Circuit with_measurement_basis(const Circuit& native, const PauliString& basis) {
    if (basis.size() != native.n_qubits()) {
        throw std::invalid_argument("measurement basis length does not match the circuit");
    }
    Circuit out = native;
    for (std::size_t q = 0; q < basis.size(); q++) {
        Pauli p = basis[q];
        if (p != Pauli::X && p != Pauli::Y) {
            continue;
        }
        // V with V P V^dag = Z: H for X, H S^dag for Y.
        const double r = 1 / std::sqrt(2.0);
        Mat2 h{{cplx(r), cplx(r), cplx(r), cplx(-r)}};
        Mat2 v = p == Pauli::X ? h : h * Mat2::rz(-kPi / 2);
        std::vector<Gate> seq;
        append_euler(seq, static_cast<std::uint32_t>(q), v);
        for (const Gate& g : seq) {
            out.append(g);
        }
    }
    return out;
}

double parity_expectation(const Distribution& d, std::uint64_t mask) {
    double total = 0;
    for (std::size_t j = 0; j < d.probs.size(); j++) {
        total += (std::popcount(j & mask) & 1) ? -d.probs[j] : d.probs[j];
    }
    return total;
}

double parity_expectation(const Distribution& d, const PauliString& o) {
    return parity_expectation(d, support_mask(o));
}

std::uint64_t support_mask(const PauliString& o) {
    return o.x_mask() | o.z_mask();
}

std::uint64_t bits_mask(const BitState& bits) {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < bits.size(); q++) {
        if (bits[q]) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

Distribution flip_distribution(const Distribution& d, std::uint64_t mask) {
    if (mask == 0) {
        return d;
    }
    Distribution out;
    out.shots = d.shots;
    out.probs.resize(d.probs.size());
    for (std::size_t j = 0; j < d.probs.size(); j++) {
        out.probs[j ^ mask] = d.probs[j];
    }
    return out;
}

OutcomeProbability marginal(const Distribution& d, std::size_t q) {
    OutcomeProbability p;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t j = 0; j < d.probs.size(); j++) {
        (j & bit ? p.p1 : p.p0) += d.probs[j];
    }
    return p;
}

}  // namespace benchmit
