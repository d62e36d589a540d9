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
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "benchmit/circuit.h"
#include "benchmit/topology.h"

namespace benchmit {

enum class ModelKind : std::uint8_t { KickedIsing, Heisenberg };

std::string_view model_kind_name(ModelKind k);
ModelKind model_kind_from_name(std::string_view name);

enum class TrotterOrder : std::uint8_t {
    /// [L2 L1] per step.
    First,
    /// L1(theta/2) L2 L1(theta/2) per step; each step is then layout-invertible. Edge layers
    /// with non-commuting terms are split palindromically over the edge colors.
    Symmetric,
};

std::string_view trotter_order_name(TrotterOrder o);
TrotterOrder trotter_order_from_name(std::string_view name);

struct ModelParams {
    ModelKind model = ModelKind::KickedIsing;
    double theta1 = 0.01;
    double theta2 = 0.01;
    double theta3 = 0.01;
    double theta4 = 0.01;
    std::size_t n_trotter = 1;
    Topology topology;
    TrotterOrder order = TrotterOrder::First;

    void validate() const;
};

/// Edges grouped by a greedy proper coloring in sorted order. On a chain this is the even
/// pairs (0,1), (2,3), ... followed by the odd pairs (1,2), (3,4), ...
std::vector<Edge> colored_edge_order(const Topology& t);
/// The color classes of colored_edge_order, in order.
std::vector<std::vector<Edge>> colored_edge_groups(const Topology& t);

/// [L2 L1]^N_T with L1 = RX(theta1) on every site and L2 = RZZ(theta2) on every edge. One
/// layer mark per Trotter step.
Circuit build_kicked_ising(const ModelParams& p);

/// [L4 L3]^N_T with L3 = RX(theta3) RZ(theta3) per site and
/// L4 = RXX(theta4) RYY(theta4) RZZ(theta4) per edge.
Circuit build_heisenberg(const ModelParams& p);

Circuit build_model(const ModelParams& p);

double connected_correlator(double zz, double z_i, double z_j);

/// values[x][y - 1] is the connected correlator between sites x and x + y.
struct CorrelatorTable {
    std::vector<std::vector<double>> values;

    /// "x,y,value" with 1-based sites.
    std::string to_csv() const;
};

/// Builds the table from single-site values z and pair values zz(x, x + y), y = 1..y_max.
CorrelatorTable correlator_table(const std::vector<double>& z,
                                 const std::vector<std::vector<double>>& zz);

struct DecayRateFit {
    double alpha = 0;
    double residual = 0;
    std::size_t used = 0;
    /// Points dropped for |corr| below the floor.
    std::size_t excluded = 0;
};

inline constexpr double kDecayFloor = 1e-6;

/// Least-squares slope of -log|corr(y)| over y = 1..y_max. row[k] is corr at y = k + 1.
/// Throws when fewer than 3 points clear the floor.
DecayRateFit decay_rate(const std::vector<double>& row, std::size_t y_max,
                        double floor = kDecayFloor);

struct FidelityMetrics {
    double fidelity = 0;
    double rmse = 0;
    /// Sites with zero exact value, left out of the fidelity mean.
    std::size_t excluded = 0;

    nlohmann::json to_json() const;
};

FidelityMetrics fidelity_metrics(const std::vector<double>& qem, const std::vector<double>& exact);

/// "x,alpha_x" rows with 1-based sites.
std::string decay_rates_csv(const std::vector<DecayRateFit>& fits);

}  // namespace benchmit
