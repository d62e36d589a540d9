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
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "benchmit/angle.h"
#include "benchmit/pauli.h"

namespace benchmit {

enum class GateKind : std::uint8_t { CZ, RZ, X, SX, PauliRot };

const char* gate_kind_name(GateKind k);

/// One gate of either level. Pauli rotations exp(-i theta P / 2) keep only the non-identity
/// letters of P (weight 1 or 2) together with the qubits they act on.
struct Gate {
    GateKind kind = GateKind::X;
    std::uint8_t arity = 1;
    std::array<std::uint32_t, 2> qubits{0, 0};
    std::array<Pauli, 2> paulis{Pauli::I, Pauli::I};
    Angle angle;

    static Gate cz(std::uint32_t a, std::uint32_t b);
    static Gate rz(std::uint32_t q, Angle theta);
    static Gate x(std::uint32_t q);
    static Gate sx(std::uint32_t q);
    static Gate rot(std::uint32_t q, Pauli p, Angle theta);
    static Gate rot2(std::uint32_t a, Pauli pa, std::uint32_t b, Pauli pb, Angle theta);
    /// Builds a rotation from a full-length generator of weight 1 or 2.
    static Gate pauli_rot(const PauliString& generator, Angle theta);

    bool is_two_qubit() const { return arity == 2; }
    bool is_native() const { return kind != GateKind::PauliRot; }
    /// The full-length generator of a PauliRot gate.
    PauliString generator(std::size_t n_qubits) const;

    bool operator==(const Gate& o) const;
};

enum class Level : std::uint8_t { Logical, Native };

const char* level_name(Level l);

struct GateCensus {
    std::size_t cz = 0;
    std::size_t rz = 0;
    std::size_t x = 0;
    std::size_t sx = 0;
    std::size_t rot1 = 0;
    std::size_t rot2 = 0;
    /// Two-qubit gate count N: CZ at native level, weight-2 rotations at logical level.
    std::size_t two_qubit = 0;

    bool operator==(const GateCensus&) const = default;
};

/// Ordered gate list on a fixed register. Appending validates qubit indices and level.
class Circuit {
   public:
    Circuit() = default;
    Circuit(std::size_t n_qubits, Level level) : n_qubits_(n_qubits), level_(level) {}

    std::size_t n_qubits() const { return n_qubits_; }
    Level level() const { return level_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    const Gate& operator[](std::size_t i) const { return gates_[i]; }

    void append(const Gate& g);
    void append_all(const Circuit& other);
    void append_all(const std::vector<Gate>& gates);

    /// Starts a new layer at the current end. Layer starts are strictly increasing gate indices.
    void mark_layer();
    const std::vector<std::size_t>& layer_starts() const { return layer_starts_; }
    std::size_t layer_count() const { return layer_starts_.size(); }
    /// Half-open gate index range of layer i.
    std::pair<std::size_t, std::size_t> layer_range(std::size_t i) const;

    bool operator==(const Circuit& o) const = default;

   private:
    std::size_t n_qubits_ = 0;
    Level level_ = Level::Native;
    std::vector<Gate> gates_;
    std::vector<std::size_t> layer_starts_;
};

GateCensus gate_census(const Circuit& c);

/// Number of ASAP moments. RZ is virtual (frame change) and does not occupy a moment.
std::size_t circuit_depth(const Circuit& c);

}  // namespace benchmit
