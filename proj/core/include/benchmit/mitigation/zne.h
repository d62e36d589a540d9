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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "benchmit/benchgen.h"
#include "benchmit/circuit.h"
#include "benchmit/executor.h"
#include "benchmit/mitigation/extrapolate.h"
#include "benchmit/mitigation/trex.h"
#include "benchmit/noisy_sim.h"
#include "benchmit/pauli.h"

namespace benchmit {

enum class AverageMode : std::uint8_t { BeforeExtrapolation, AfterExtrapolation };

struct ZneConfig {
    std::vector<int> levels{1, 3, 5};
    FitKind fit = FitKind::Exponential;
    /// Twirl instances per level; 0 runs the folded circuit once without twirling.
    std::size_t twirls_per_level = 5;
    /// Informational; the executor owns the shot budget.
    std::size_t shots_per_circuit = 0;
    AverageMode average = AverageMode::BeforeExtrapolation;
    bool dd = false;
    /// Random readout masks on every run, divided by a calibration passed to the analysis.
    bool trex = false;

    /// Throws std::invalid_argument unless levels are odd, positive, sorted, distinct, >= 2.
    void validate() const;
};

/// Raw runs of one circuit family at every noise level. With TREX the stored
/// distributions are already un-flipped.
struct SweepPoint {
    int r = 1;
    std::vector<Distribution> runs;
};

struct Sweep {
    std::vector<SweepPoint> points;
    std::uint64_t seed = 0;
};

/// Builds the pre-twirl native circuit for level r.
using LevelBuilder = std::function<Circuit(int r)>;

/// For each level: build, twirl (cfg.twirls_per_level instances), optional DD, change to the
/// measurement basis, optional readout mask, execute.
Sweep run_sweep(Executor& ex, const LevelBuilder& build, const PauliString& basis,
                const ZneConfig& cfg, std::uint64_t seed);

/// Expectation of o per run at one level. flip XORs the expected outcome; cal divides out
/// readout attenuation.
std::vector<double> point_values(const SweepPoint& pt, const PauliString& o, std::uint64_t flip,
                                 const TrexCalibration* cal = nullptr);

/// Outcome probabilities of each qubit in `qubits`, averaged over the runs of one level.
std::vector<OutcomeProbability> point_marginals(const SweepPoint& pt,
                                                const std::vector<std::size_t>& qubits,
                                                const TrexCalibration* cal = nullptr);

/// epsilon = prod_{q in Q} (1 - p(b_q; q)). probs[i] belongs to qubit Q[i].
double bnzne_epsilon(const std::vector<OutcomeProbability>& probs, const BitState& expected,
                     const std::vector<std::size_t>& Q);

enum class IcVariant : std::uint8_t {
    /// P0 = prod (1 - p0(q)).
    AsWritten,
    /// P0 = prod p0(q).
    ProductOfP0,
    /// P0 = probability of the all-zero string over the full register.
    AllZero,
};

std::string_view ic_variant_name(IcVariant v);
IcVariant ic_variant_from_name(std::string_view name);

/// Piecewise error-rate map from a return probability P0 on n qubits. `clamped` is set
/// when a negative radicand was clamped to zero.
double iczne_epsilon_from_probability(double p0, std::size_t n, bool* clamped = nullptr);

/// P0 from per-qubit zero probabilities under the variant, then the piecewise map.
double iczne_epsilon(const std::vector<double>& p0, std::size_t n, IcVariant variant,
                     bool* clamped = nullptr);

/// fold(app, r) followed by its native inverse.
Circuit detection_circuit(const Circuit& app, int r);

struct LevelRecord {
    int r = 1;
    double mean = 0;
    double sigma = 0;
    std::vector<double> per_twirl;
    /// Benchmark (or detection) outcome probabilities over the measured support.
    std::vector<OutcomeProbability> bench_probs;
    std::optional<double> epsilon;
};

struct MitigationRun {
    std::string method;
    std::vector<LevelRecord> levels;
    /// Extrapolation abscissae, r or epsilon(r).
    std::vector<double> x;
    ExtrapolationResult fit;
    double value = 0;
    double sigma = 0;
    std::string sigma_estimator = "twirl_spread";
    std::uint64_t seed = 0;
    std::size_t twirls_per_level = 0;
    std::size_t shots_per_circuit = 0;
    AverageMode average = AverageMode::BeforeExtrapolation;
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
    static MitigationRun from_json(const nlohmann::json& j);
    /// "x,y,sigma" rows, one per level.
    std::string to_csv() const;
};

/// Extrapolates the ordinate sweep against abscissae x (one per level).
MitigationRun extrapolate_sweep(const std::string& method, const Sweep& ordinates,
                                const PauliString& o, std::uint64_t flip,
                                const std::vector<double>& x, const ZneConfig& cfg,
                                const TrexCalibration* cal = nullptr);

/// epsilon(r) from benchmark runs over Q = support(o). Flags non-monotone data in warnings.
std::vector<double> bench_epsilons(const Sweep& bench, const PauliString& o,
                                   const BitState& expected, std::vector<std::string>& warnings,
                                   const TrexCalibration* cal = nullptr,
                                   std::vector<std::vector<OutcomeProbability>>* probs = nullptr);

/// epsilon(r) from detection runs under the variant.
std::vector<double> detection_epsilons(const Sweep& detection, const PauliString& o,
                                       IcVariant variant, std::vector<std::string>& warnings,
                                       const TrexCalibration* cal = nullptr,
                                       std::vector<std::vector<OutcomeProbability>>* probs = nullptr);

/// Records epsilon(r) and the measured outcome probabilities on each level of run.
void attach_epsilons(MitigationRun& run, const std::vector<double>& eps,
                     std::vector<std::vector<OutcomeProbability>>& probs,
                     const std::vector<std::string>& warnings);

MitigationRun run_zne(Executor& ex, const Circuit& app, const PauliString& o,
                      const ZneConfig& cfg, std::uint64_t seed);

/// Runs app and benchmark with equal budgets; abscissae come from the benchmark.
MitigationRun run_bnzne(Executor& ex, const Circuit& app, const BenchmarkBundle& bundle,
                        const PauliString& o, const ZneConfig& cfg, std::uint64_t seed);

MitigationRun run_iczne(Executor& ex, const Circuit& app, const PauliString& o,
                        const ZneConfig& cfg, IcVariant variant, std::uint64_t seed);

std::string_view average_mode_name(AverageMode m);
AverageMode average_mode_from_name(std::string_view name);

}  // namespace benchmit
