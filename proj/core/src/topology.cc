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


#include "benchmit/topology.h"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace benchmit {

const char* topology_shape_name(TopologyShape s) {
    switch (s) {
        case TopologyShape::LinearChain:
            return "linear_chain";
        case TopologyShape::HeavyHexSubset:
            return "heavy_hex_subset";
        case TopologyShape::Custom:
            return "custom";
    }
    return "custom";
}

TopologyShape topology_shape_from_name(const std::string& name) {
    if (name == "linear_chain") {
        return TopologyShape::LinearChain;
    }
    if (name == "heavy_hex_subset") {
        return TopologyShape::HeavyHexSubset;
    }
    if (name == "custom") {
        return TopologyShape::Custom;
    }
    throw std::invalid_argument("unknown topology shape '" + name + "'");
}

Topology::Topology(std::size_t n_qubits, std::vector<Edge> edges, TopologyShape shape)
    : n_qubits_(n_qubits), shape_(shape) {
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
        if (a >= n_qubits || b >= n_qubits) {
            throw std::out_of_range("topology edge references a qubit outside the register");
        }
        if (a == b) {
            throw std::invalid_argument("topology edge is a self-loop");
        }
        Edge e{std::min(a, b), std::max(a, b)};
        if (seen.insert(e).second) {
            edges_.push_back(e);
        }
    }
}

Topology Topology::linear_chain(std::size_t n) {
    std::vector<Edge> edges;
    for (std::uint32_t q = 0; q + 1 < n; q++) {
        edges.emplace_back(q, q + 1);
    }
    return Topology(n, std::move(edges), TopologyShape::LinearChain);
}

bool Topology::has_edge(std::uint32_t a, std::uint32_t b) const {
    Edge e{std::min(a, b), std::max(a, b)};
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

namespace {

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<std::uint32_t>>& adj,
                                       std::uint32_t start) {
    std::vector<std::size_t> dist(adj.size(), SIZE_MAX);
    std::queue<std::uint32_t> todo;
    dist[start] = 0;
    todo.push(start);
    while (!todo.empty()) {
        auto q = todo.front();
        todo.pop();
        for (auto nb : adj[q]) {
            if (dist[nb] == SIZE_MAX) {
                dist[nb] = dist[q] + 1;
                todo.push(nb);
            }
        }
    }
    return dist;
}

std::vector<std::vector<std::uint32_t>> adjacency(const Topology& t) {
    std::vector<std::vector<std::uint32_t>> adj(t.n_qubits());
    for (auto [a, b] : t.edges()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

}  // namespace

bool Topology::connected() const {
    if (n_qubits_ == 0) {
        return true;
    }
    auto dist = bfs_distances(adjacency(*this), 0);
    return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == SIZE_MAX; });
}

std::uint32_t Topology::center() const {
    if (n_qubits_ == 0) {
        throw std::invalid_argument("empty topology has no center");
    }
    auto adj = adjacency(*this);
    std::uint32_t best = 0;
    std::size_t best_ecc = SIZE_MAX;
    for (std::uint32_t q = 0; q < n_qubits_; q++) {
        auto dist = bfs_distances(adj, q);
        std::size_t ecc = *std::max_element(dist.begin(), dist.end());
        if (ecc < best_ecc) {
            best_ecc = ecc;
            best = q;
        }
    }
    return best;
}

TopologyReport validate_on_topology(const Circuit& c, const Topology& t) {
    if (c.n_qubits() != t.n_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(c.n_qubits()) +
                                    " qubits but topology has " + std::to_string(t.n_qubits()));
    }
    TopologyReport report;
    for (std::size_t i = 0; i < c.size(); i++) {
        const Gate& g = c[i];
        if (g.is_two_qubit() && !t.has_edge(g.qubits[0], g.qubits[1])) {
            report.offending_gates.push_back(i);
        }
    }
    report.ok = report.offending_gates.empty();
    return report;
}

}  // namespace benchmit
