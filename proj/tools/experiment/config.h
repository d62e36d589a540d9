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
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "benchmit/benchgen.h"
#include "benchmit/mitigation/extrapolate.h"
#include "benchmit/mitigation/zne.h"
#include "benchmit/models.h"
#include "benchmit/noise.h"
#include "benchmit/transpile.h"

namespace benchmit::experiment {

/// Invalid configuration. path() is the dotted location of the offending key.
class ConfigError : public std::runtime_error {
   public:
    ConfigError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

   private:
    std::string path_;
};

struct MethodConfig {
    bool enabled = false;
    FitKind fit = FitKind::Exponential;
    std::vector<int> levels{1, 3, 5};
};

enum class ObservableKind : std::uint8_t {
    /// Pauli strings listed verbatim.
    Explicit,
    /// Z on every site.
    SingleZ,
    /// Z on the topology center.
    CenterZ,
    /// Z on every site plus Z_x Z_{x+y} for y = 1..y_max.
    Correlators,
};

struct ObservableSpec {
    ObservableKind kind = ObservableKind::CenterZ;
    std::vector<std::string> paulis;
    std::size_t y_max = 0;
};

enum class BackendMode : std::uint8_t { ChannelExact, Trajectories, DensitySampling };

std::string_view backend_mode_name(BackendMode m);

enum class SigmaEstimator : std::uint8_t { TwirlSpread, InstanceSpread };

std::string_view sigma_estimator_name(SigmaEstimator s);

struct ExperimentConfig {
    std::string name = "experiment";

    /// Model and topology; n_trotter inside is ignored in favour of the list below.
    ModelParams model;
    std::vector<std::size_t> n_trotter{1};
    TranspilePath path = TranspilePath::Rigid;
    ObservableSpec observables;

    GeneratorKind generator = GeneratorKind::Agnostic;
    /// Independent benchmark instances per observable.
    std::size_t instances = 1;
    bool single_pair = false;

    MethodConfig zne;
    MethodConfig bnzne;
    MethodConfig iczne;
    IcVariant ic_variant = IcVariant::ProductOfP0;
    bool bias_mitigation = true;
    bool select_fit = false;
    double guard = 0.05;

    bool twirl = true;
    std::size_t twirl_instances = 5;
    AverageMode average = AverageMode::BeforeExtrapolation;
    bool dd = false;
    bool trex = false;
    std::size_t trex_masks = 16;
    SigmaEstimator sigma_estimator = SigmaEstimator::TwirlSpread;

    NoiseModel noise;
    BackendMode backend = BackendMode::ChannelExact;
    std::size_t shots = 2048;

    std::uint64_t seed = 0;
    std::string output_dir = "out";

    std::size_t n_qubits() const { return model.topology.n_qubits(); }
    /// Union of the enabled methods' noise levels, ascending.
    std::vector<int> level_union() const;
    /// The observables in a fixed order.
    std::vector<PauliString> observable_list() const;
    ZneConfig zne_config(const MethodConfig& m) const;
};

/// Parses and validates a configuration. Unknown keys are rejected.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& file);

/// Canonical form with every default written out. parse_config(config_to_json(c)) == c.
nlohmann::json config_to_json(const ExperimentConfig& c);

/// 16 hex digits identifying the canonical configuration.
std::string config_hash(const ExperimentConfig& c);

}  // namespace benchmit::experiment
