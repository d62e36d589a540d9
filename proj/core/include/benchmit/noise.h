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

#include <cstddef>
#include <map>
#include <vector>

#include "benchmit/topology.h"

namespace benchmit {

/// Classical readout confusion of one qubit.
struct ReadoutError {
    double p1_given_0 = 0;
    double p0_given_1 = 0;

    bool operator==(const ReadoutError&) const = default;
};

/// Two-qubit depolarizing noise after every CZ plus optional per-qubit readout confusion.
/// Single-qubit gates are noiseless.
struct NoiseModel {
    double p2q = 0;
    /// Overrides p2q on listed edges (smaller index first).
    std::map<Edge, double> per_edge;
    /// Empty means perfect readout; otherwise one entry per qubit.
    std::vector<ReadoutError> readout;

    static NoiseModel uniform(double p);

    double depolarizing(std::uint32_t a, std::uint32_t b) const;
    bool has_readout() const;
    /// Throws std::invalid_argument on probabilities outside [0, 1] or a readout table of the
    /// wrong length.
    void validate(std::size_t n_qubits) const;
    /// Additionally requires the per-edge map, when present, to cover every edge of t.
    void validate(const Topology& t) const;
};

}  // namespace benchmit
