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


#include "benchmit/circuit_io.h"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace benchmit {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

GateKind kind_from_name(const std::string& s) {
    if (s == "CZ") {
        return GateKind::CZ;
    }
    if (s == "RZ") {
        return GateKind::RZ;
    }
    if (s == "X") {
        return GateKind::X;
    }
    if (s == "SX") {
        return GateKind::SX;
    }
    if (s == "ROT") {
        return GateKind::PauliRot;
    }
    throw std::invalid_argument("unknown gate kind '" + s + "'");
}

Level level_from_name(const std::string& s) {
    if (s == "logical") {
        return Level::Logical;
    }
    if (s == "native") {
        return Level::Native;
    }
    throw std::invalid_argument("unknown circuit level '" + s + "'");
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("malformed number '" + s + "'");
    }
    return v;
}

std::uint32_t parse_qubit(const std::string& s) {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("malformed qubit index '" + s + "'");
    }
    return static_cast<std::uint32_t>(v);
}

Gate make_gate(GateKind kind, const std::string& paulis, const std::vector<std::uint32_t>& qs,
               double angle) {
    auto need = [&](std::size_t n) {
        if (qs.size() != n) {
            throw std::invalid_argument(std::string(gate_kind_name(kind)) + " expects " +
                                        std::to_string(n) + " qubit(s)");
        }
    };
    switch (kind) {
        case GateKind::CZ:
            need(2);
            return Gate::cz(qs[0], qs[1]);
        case GateKind::RZ:
            need(1);
            return Gate::rz(qs[0], Angle::radians(angle));
        case GateKind::X:
            need(1);
            return Gate::x(qs[0]);
        case GateKind::SX:
            need(1);
            return Gate::sx(qs[0]);
        case GateKind::PauliRot:
            need(paulis.size());
            if (paulis.size() == 1) {
                return Gate::rot(qs[0], pauli_from_char(paulis[0]), Angle::radians(angle));
            }
            if (paulis.size() == 2) {
                return Gate::rot2(qs[0], pauli_from_char(paulis[0]), qs[1],
                                  pauli_from_char(paulis[1]), Angle::radians(angle));
            }
            throw std::invalid_argument("ROT generator must have 1 or 2 letters");
    }
    throw std::logic_error("unreachable gate kind");
}

std::string rot_letters(const Gate& g) {
    std::string s;
    for (int k = 0; k < g.arity; k++) {
        s.push_back(pauli_char(g.paulis[k]));
    }
    return s;
}

bool has_angle(GateKind k) {
    return k == GateKind::RZ || k == GateKind::PauliRot;
}

}  // namespace

std::string circuit_to_text(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.n_qubits() << "\n";
    out << "level " << level_name(c.level()) << "\n";
    std::size_t next_layer = 0;
    const auto& layers = c.layer_starts();
    for (std::size_t i = 0; i <= c.size(); i++) {
        while (next_layer < layers.size() && layers[next_layer] == i) {
            out << "layer\n";
            next_layer++;
        }
        if (i == c.size()) {
            break;
        }
        const Gate& g = c[i];
        out << gate_kind_name(g.kind);
        if (g.kind == GateKind::PauliRot) {
            out << " " << rot_letters(g);
        }
        for (int k = 0; k < g.arity; k++) {
            out << " " << g.qubits[k];
        }
        if (has_angle(g.kind)) {
            out << " " << format_real(g.angle.radians());
        }
        out << "\n";
    }
    return out.str();
}

Circuit circuit_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n_qubits = 0;
    bool have_qubits = false;
    Level level = Level::Native;
    Circuit c;
    bool started = false;
    std::size_t line_no = 0;
    auto start = [&] {
        if (!started) {
            if (!have_qubits) {
                throw std::invalid_argument("circuit text is missing the 'qubits' header");
            }
            c = Circuit(n_qubits, level);
            started = true;
        }
    };
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        try {
            if (tok[0] == "qubits" && !started) {
                n_qubits = parse_qubit(tok.at(1));
                have_qubits = true;
            } else if (tok[0] == "level" && !started) {
                level = level_from_name(tok.at(1));
            } else if (tok[0] == "layer") {
                start();
                c.mark_layer();
            } else {
                start();
                GateKind kind = kind_from_name(tok[0]);
                std::size_t pos = 1;
                std::string paulis;
                if (kind == GateKind::PauliRot) {
                    paulis = tok.at(pos++);
                }
                std::size_t nq = kind == GateKind::CZ ? 2
                                 : kind == GateKind::PauliRot ? paulis.size()
                                                              : 1;
                std::vector<std::uint32_t> qs;
                for (std::size_t k = 0; k < nq; k++) {
                    qs.push_back(parse_qubit(tok.at(pos++)));
                }
                double angle = 0;
                if (has_angle(kind)) {
                    angle = parse_real(tok.at(pos++));
                }
                if (pos != tok.size()) {
                    throw std::invalid_argument("trailing tokens");
                }
                c.append(make_gate(kind, paulis, qs, angle));
            }
        } catch (const std::out_of_range& e) {
            throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": " +
                                        e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": " +
                                        e.what());
        }
    }
    start();
    return c;
}

nlohmann::json circuit_to_json(const Circuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate& g : c.gates()) {
        nlohmann::json j;
        j["kind"] = gate_kind_name(g.kind);
        if (g.kind == GateKind::PauliRot) {
            j["paulis"] = rot_letters(g);
        }
        std::vector<std::uint32_t> qs(g.qubits.begin(), g.qubits.begin() + g.arity);
        j["qubits"] = qs;
        if (has_angle(g.kind)) {
            j["angle"] = g.angle.radians();
        }
        gates.push_back(std::move(j));
    }
    return {{"n_qubits", c.n_qubits()},
            {"level", level_name(c.level())},
            {"layers", c.layer_starts()},
            {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
    Circuit c(j.at("n_qubits").get<std::size_t>(),
              level_from_name(j.at("level").get<std::string>()));
    std::vector<std::size_t> layers;
    if (j.contains("layers")) {
        layers = j.at("layers").get<std::vector<std::size_t>>();
    }
    std::size_t next_layer = 0;
    const auto& gates = j.at("gates");
    for (std::size_t i = 0; i <= gates.size(); i++) {
        while (next_layer < layers.size() && layers[next_layer] == i) {
            c.mark_layer();
            next_layer++;
        }
        if (i == gates.size()) {
            break;
        }
        const auto& g = gates[i];
        GateKind kind = kind_from_name(g.at("kind").get<std::string>());
        std::string paulis = kind == GateKind::PauliRot ? g.at("paulis").get<std::string>() : "";
        auto qs = g.at("qubits").get<std::vector<std::uint32_t>>();
        double angle = has_angle(kind) ? g.at("angle").get<double>() : 0.0;
        c.append(make_gate(kind, paulis, qs, angle));
    }
    if (next_layer != layers.size()) {
        throw std::invalid_argument("layer start beyond end of circuit");
    }
    return c;
}

nlohmann::json topology_to_json(const Topology& t) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : t.edges()) {
        edges.push_back({a, b});
    }
    return {{"n_qubits", t.n_qubits()},
            {"shape", topology_shape_name(t.shape())},
            {"edges", std::move(edges)}};
}

Topology topology_from_json(const nlohmann::json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("topology edge must be a pair of qubit indices");
        }
        edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    TopologyShape shape = TopologyShape::Custom;
    if (j.contains("shape")) {
        shape = topology_shape_from_name(j.at("shape").get<std::string>());
    }
    return Topology(j.at("n_qubits").get<std::size_t>(), std::move(edges), shape);
}

}  // namespace benchmit
