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
#include <cstdint>

#include "benchmit/circuit.h"
#include "benchmit/pauli.h"

namespace benchmit {

/// Replaces every CZ by r consecutive CZ on the same pair (r odd, >= 1). Logically the
/// identity transformation; the noise on each CZ is amplified r-fold.
Circuit fold(const Circuit& native, int r);

/// Pauli pair (Qa, Qb) with (Qa x Qb) CZ (Pa x Pb) proportional to CZ.
std::array<Pauli, 2> cz_twirl_partner(Pauli pa, Pauli pb);

/// Native realization of a Pauli letter on qubit q using exactly two RX-class gates, so
/// every twirl instance shares one structural skeleton.
std::vector<Gate> native_pauli(Pauli p, std::uint32_t q);

/// Surrounds every CZ with a uniformly random Pauli pair and its partner.
Circuit pauli_twirl(const Circuit& native, std::uint64_t seed);

/// Inserts one X X pair on every qubit idle for at least one moment between two of its own
/// gates. Moments are ASAP over non-RZ gates.
Circuit insert_dd(const Circuit& native);

}  // namespace benchmit
