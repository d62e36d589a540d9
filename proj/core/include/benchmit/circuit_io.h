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

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "benchmit/circuit.h"
#include "benchmit/topology.h"

namespace benchmit {

/// Line-oriented text form, one gate per line:
///
///     qubits 3
///     level native
///     layer
///     CZ 0 1
///     RZ 2 0.0100000000000000002
///     ROT XZ 0 1 3.1415926535897931
///
/// Angles are written with 17 significant digits so that parsing restores the same double.
/// "layer" lines record layer boundaries; '#' starts a comment.
std::string circuit_to_text(const Circuit& c);
Circuit circuit_from_text(const std::string& text);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json topology_to_json(const Topology& t);
Topology topology_from_json(const nlohmann::json& j);

/// %.17g formatting of a double.
std::string format_real(double v);

}  // namespace benchmit
