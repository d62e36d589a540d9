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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "benchmit/circuit.h"

namespace benchmit {

enum class TopologyShape : std::uint8_t { LinearChain, HeavyHexSubset, Custom };

const char* topology_shape_name(TopologyShape s);
TopologyShape topology_shape_from_name(const std::string& name);

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected coupling graph. Edges are stored with the smaller index first, in insertion order.
class Topology {
   public:
    Topology() = default;
    Topology(std::size_t n_qubits, std::vector<Edge> edges, TopologyShape shape);

    static Topology linear_chain(std::size_t n);

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<Edge>& edges() const { return edges_; }
    TopologyShape shape() const { return shape_; }
    bool has_edge(std::uint32_t a, std::uint32_t b) const;
    bool connected() const;
    /// Qubit minimising the maximum graph distance to every other qubit (lowest index on ties).
    std::uint32_t center() const;

    bool operator==(const Topology&) const = default;

   private:
    std::size_t n_qubits_ = 0;
    std::vector<Edge> edges_;
    TopologyShape shape_ = TopologyShape::Custom;
};

struct TopologyReport {
    bool ok = true;
    std::vector<std::size_t> offending_gates;
};

/// Checks that every two-qubit gate acts on an edge. Throws on qubit-count mismatch.
TopologyReport validate_on_topology(const Circuit& c, const Topology& t);

}  // namespace benchmit
