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


#include "benchmit/mitigation/trex.h"

#include <cmath>
#include <stdexcept>

#include "benchmit/rng.h"

namespace benchmit {

std::uint64_t trex_mask(std::size_t n_qubits, std::uint64_t seed) {
    Rng rng(seed);
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < n_qubits; q++) {
        if (rng.below(2)) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

Distribution run_with_readout_mask(Executor& ex, const Circuit& c, std::uint64_t mask,
                                   std::uint64_t seed) {
    Circuit masked = c;
    for (std::size_t q = 0; q < c.n_qubits(); q++) {
        if (mask >> q & 1) {
            masked.append(Gate::x(static_cast<std::uint32_t>(q)));
        }
    }
    return flip_distribution(ex.run(masked, seed), mask);
}

double TrexCalibration::attenuation(std::uint64_t mask) const {
    return parity_expectation(average, mask);
}

TrexCalibration trex_calibrate(Executor& ex, std::size_t n_qubits, std::size_t n_random,
                               std::uint64_t seed) {
    if (n_random == 0) {
        throw std::invalid_argument("TREX needs at least one random mask");
    }
    Circuit empty(n_qubits, Level::Native);
    TrexCalibration cal;
    cal.average.probs.assign(std::size_t{1} << n_qubits, 0.0);
    for (std::size_t i = 0; i < n_random; i++) {
        const std::uint64_t mask = trex_mask(n_qubits, derive_seed(seed, "trex-cal-mask", {i}));
        Distribution d = run_with_readout_mask(ex, empty, mask, derive_seed(seed, "trex-cal", {i}));
        for (std::size_t j = 0; j < d.probs.size(); j++) {
            cal.average.probs[j] += d.probs[j] / static_cast<double>(n_random);
        }
        cal.total_shots += d.shots;
    }
    cal.average.shots = cal.total_shots;
    return cal;
}

double parity_standard_error(double mean, std::size_t shots) {
    if (shots == 0) {
        return 0;
    }
    return std::sqrt(std::max(0.0, 1 - mean * mean) / static_cast<double>(shots));
}

TrexResult trex(Executor& ex, const Circuit& c, const PauliString& o, std::size_t n_random,
                std::uint64_t seed, double guard) {
    if (!o.is_diagonal()) {
        throw std::invalid_argument("TREX needs a diagonal observable");
    }
    if (o.size() != c.n_qubits()) {
        throw std::invalid_argument("observable length does not match the circuit");
    }
    const std::uint64_t supp = support_mask(o);
    TrexCalibration cal = trex_calibrate(ex, c.n_qubits(), n_random, derive_seed(seed, "cal", {}));
    TrexResult r;
    r.attenuation = cal.attenuation(supp);
    if (std::abs(r.attenuation) < guard) {
        throw std::runtime_error("TREX attenuation " + std::to_string(r.attenuation) +
                                 " is below the guard threshold");
    }
    std::size_t shots = 0;
    for (std::size_t i = 0; i < n_random; i++) {
        const std::uint64_t mask = trex_mask(c.n_qubits(), derive_seed(seed, "mask", {i}));
        Distribution d = run_with_readout_mask(ex, c, mask, derive_seed(seed, "run", {i}));
        r.raw += parity_expectation(d, supp) / static_cast<double>(n_random);
        shots += d.shots;
    }
    r.value = r.raw / r.attenuation;
    const double sr = parity_standard_error(r.raw, shots);
    const double sf = parity_standard_error(r.attenuation, cal.total_shots);
    const double f = r.attenuation;
    r.sigma = std::sqrt(sr * sr / (f * f) + r.raw * r.raw * sf * sf / (f * f * f * f));
    return r;
}

}  // namespace benchmit
