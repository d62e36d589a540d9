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


#include "benchmit/noise.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace benchmit {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                    std::to_string(p));
    }
}

}  // namespace

NoiseModel NoiseModel::uniform(double p) {
    NoiseModel nm;
    nm.p2q = p;
    return nm;
}

double NoiseModel::depolarizing(std::uint32_t a, std::uint32_t b) const {
    if (!per_edge.empty()) {
        auto it = per_edge.find({std::min(a, b), std::max(a, b)});
        if (it != per_edge.end()) {
            return it->second;
        }
    }
    return p2q;
}

bool NoiseModel::has_readout() const {
    return std::any_of(readout.begin(), readout.end(), [](const ReadoutError& r) {
        return r.p1_given_0 != 0 || r.p0_given_1 != 0;
    });
}

void NoiseModel::validate(std::size_t n_qubits) const {
    check_probability(p2q, "depolarizing probability");
    for (const auto& [edge, p] : per_edge) {
        check_probability(p, "per-edge depolarizing probability");
        if (edge.first >= n_qubits || edge.second >= n_qubits) {
            throw std::invalid_argument("per-edge noise references a qubit outside the register");
        }
    }
    if (!readout.empty() && readout.size() != n_qubits) {
        throw std::invalid_argument("readout table has " + std::to_string(readout.size()) +
                                    " entries for " + std::to_string(n_qubits) + " qubits");
    }
    for (const auto& r : readout) {
        check_probability(r.p1_given_0, "readout P(1|0)");
        check_probability(r.p0_given_1, "readout P(0|1)");
    }
}

void NoiseModel::validate(const Topology& t) const {
    validate(t.n_qubits());
    if (per_edge.empty()) {
        return;
    }
    for (const Edge& e : t.edges()) {
        if (!per_edge.count(e)) {
            throw std::invalid_argument("per-edge noise map is missing edge (" +
                                        std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
        }
    }
}

}  // namespace benchmit
