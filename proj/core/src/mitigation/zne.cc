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


#include "benchmit/mitigation/zne.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "benchmit/circuit_io.h"
#include "benchmit/mitigation/transforms.h"
#include "benchmit/rng.h"
#include "benchmit/transpile.h"

namespace benchmit {

namespace {

double mean_of(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v) {
    if (v.size() < 2) {
        return 0;
    }
    const double m = mean_of(v);
    double s = 0;
    for (double x : v) {
        s += (x - m) * (x - m);
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::vector<std::size_t> sorted_support(const PauliString& o) { return o.support(); }

void check_monotone(const std::vector<double>& eps, std::vector<std::string>& warnings) {
    for (std::size_t i = 1; i < eps.size(); i++) {
        if (eps[i] < eps[i - 1]) {
            warnings.push_back("epsilon(r) is not monotone in r");
            return;
        }
    }
}

}  // namespace

void ZneConfig::validate() const {
    if (levels.size() < 2) {
        throw std::invalid_argument("ZNE needs at least two noise levels");
    }
    for (std::size_t i = 0; i < levels.size(); i++) {
        if (levels[i] < 1 || levels[i] % 2 == 0) {
            throw std::invalid_argument("noise levels must be odd positive integers");
        }
        if (i > 0 && levels[i] <= levels[i - 1]) {
            throw std::invalid_argument("noise levels must be sorted and distinct");
        }
    }
}

std::string_view average_mode_name(AverageMode m) {
    return m == AverageMode::BeforeExtrapolation ? "before" : "after";
}

AverageMode average_mode_from_name(std::string_view name) {
    if (name == "before") {
        return AverageMode::BeforeExtrapolation;
    }
    if (name == "after") {
        return AverageMode::AfterExtrapolation;
    }
    throw std::invalid_argument("unknown averaging mode: " + std::string(name));
}

std::string_view ic_variant_name(IcVariant v) {
    switch (v) {
        case IcVariant::AsWritten:
            return "as_written";
        case IcVariant::ProductOfP0:
            return "product_of_p0";
        case IcVariant::AllZero:
            return "all_zero";
    }
    throw std::logic_error("unreachable variant");
}

IcVariant ic_variant_from_name(std::string_view name) {
    if (name == "as_written") {
        return IcVariant::AsWritten;
    }
    if (name == "product_of_p0") {
        return IcVariant::ProductOfP0;
    }
    if (name == "all_zero") {
        return IcVariant::AllZero;
    }
    throw std::invalid_argument("unknown IC-ZNE variant: " + std::string(name));
}

Sweep run_sweep(Executor& ex, const LevelBuilder& build, const PauliString& basis,
                const ZneConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    Sweep sweep;
    sweep.seed = seed;
    const std::size_t instances = std::max<std::size_t>(1, cfg.twirls_per_level);
    for (int r : cfg.levels) {
        SweepPoint pt;
        pt.r = r;
        try {
            const Circuit base = build(r);
            for (std::size_t t = 0; t < instances; t++) {
                const auto ur = static_cast<std::uint64_t>(r);
                Circuit c = cfg.twirls_per_level > 0
                                ? pauli_twirl(base, derive_seed(seed, "twirl", {ur, t}))
                                : base;
                if (cfg.dd) {
                    c = insert_dd(c);
                }
                c = with_measurement_basis(c, basis);
                const std::uint64_t run_seed = derive_seed(seed, "run", {ur, t});
                if (cfg.trex) {
                    const std::uint64_t mask =
                        trex_mask(c.n_qubits(), derive_seed(seed, "readout-mask", {ur, t}));
                    pt.runs.push_back(run_with_readout_mask(ex, c, mask, run_seed));
                } else {
                    pt.runs.push_back(ex.run(c, run_seed));
                }
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("noise level r=" + std::to_string(r) + ": " + e.what());
        }
        sweep.points.push_back(std::move(pt));
    }
    return sweep;
}

std::vector<double> point_values(const SweepPoint& pt, const PauliString& o, std::uint64_t flip,
                                 const TrexCalibration* cal) {
    const std::uint64_t supp = support_mask(o);
    const double sign = std::popcount(flip & supp) & 1 ? -1.0 : 1.0;
    const double att = cal ? cal->attenuation(supp) : 1.0;
    std::vector<double> out;
    for (const Distribution& d : pt.runs) {
        out.push_back(sign * parity_expectation(d, supp) / att);
    }
    return out;
}

std::vector<OutcomeProbability> point_marginals(const SweepPoint& pt,
                                                const std::vector<std::size_t>& qubits,
                                                const TrexCalibration* cal) {
    std::vector<OutcomeProbability> out;
    for (std::size_t q : qubits) {
        OutcomeProbability p;
        for (const Distribution& d : pt.runs) {
            OutcomeProbability m = marginal(d, q);
            p.p0 += m.p0 / static_cast<double>(pt.runs.size());
            p.p1 += m.p1 / static_cast<double>(pt.runs.size());
        }
        if (cal) {
            const double z = std::clamp((p.p0 - p.p1) / cal->attenuation(std::uint64_t{1} << q),
                                        -1.0, 1.0);
            p.p0 = (1 + z) / 2;
            p.p1 = (1 - z) / 2;
        }
        out.push_back(p);
    }
    return out;
}

double bnzne_epsilon(const std::vector<OutcomeProbability>& probs, const BitState& expected,
                     const std::vector<std::size_t>& Q) {
    if (probs.size() != Q.size()) {
        throw std::invalid_argument("outcome probabilities missing for some measured qubit");
    }
    double eps = 1;
    for (std::size_t i = 0; i < Q.size(); i++) {
        std::uint8_t b = 0;
        if (!expected.empty()) {
            if (Q[i] >= expected.size()) {
                throw std::invalid_argument("expected bitstring misses qubit " +
                                            std::to_string(Q[i]));
            }
            b = expected[Q[i]];
        }
        const double right = b ? probs[i].p1 : probs[i].p0;
        eps *= 1 - right;
    }
    return std::clamp(eps, 0.0, 1.0);
}

double iczne_epsilon_from_probability(double p0, std::size_t n, bool* clamped) {
    if (clamped) {
        *clamped = false;
    }
    const double inv = std::ldexp(1.0, -static_cast<int>(n));
    if (p0 > inv) {
        double rad = p0 - (1 - p0) * inv;
        if (rad < 0) {
            rad = 0;
            if (clamped) {
                *clamped = true;
            }
        }
        return (1 - std::sqrt(rad)) / (1 + inv);
    }
    return (1 - p0) / (1 + p0);
}

double iczne_epsilon(const std::vector<double>& p0, std::size_t n, IcVariant variant,
                     bool* clamped) {
    double P0 = 1;
    for (double v : p0) {
        if (!(v >= 0 && v <= 1)) {
            throw std::invalid_argument("zero-state probabilities must lie in [0, 1]");
        }
        switch (variant) {
            case IcVariant::AsWritten:
                P0 *= 1 - v;
                break;
            case IcVariant::ProductOfP0:
                P0 *= v;
                break;
            case IcVariant::AllZero:
                throw std::invalid_argument(
                    "the all_zero variant takes the all-zero probability directly");
        }
    }
    return iczne_epsilon_from_probability(P0, n, clamped);
}

Circuit detection_circuit(const Circuit& app, int r) {
    Circuit folded = fold(app, r);
    Circuit out = folded;
    out.append_all(native_inverse(folded));
    return out;
}

MitigationRun extrapolate_sweep(const std::string& method, const Sweep& ordinates,
                                const PauliString& o, std::uint64_t flip,
                                const std::vector<double>& x, const ZneConfig& cfg,
                                const TrexCalibration* cal) {
    if (x.size() != ordinates.points.size()) {
        throw std::invalid_argument("one abscissa per noise level required");
    }
    MitigationRun run;
    run.method = method;
    run.x = x;
    run.seed = ordinates.seed;
    run.twirls_per_level = cfg.twirls_per_level;
    run.shots_per_circuit = cfg.shots_per_circuit;
    run.average = cfg.average;
    std::vector<double> means;
    std::vector<double> sems;
    for (const SweepPoint& pt : ordinates.points) {
        LevelRecord rec;
        rec.r = pt.r;
        rec.per_twirl = point_values(pt, o, flip, cal);
        rec.mean = mean_of(rec.per_twirl);
        if (rec.per_twirl.size() >= 2) {
            rec.sigma = sample_sd(rec.per_twirl) / std::sqrt(double(rec.per_twirl.size()));
        } else {
            rec.sigma = parity_standard_error(rec.mean, pt.runs.front().shots);
        }
        means.push_back(rec.mean);
        sems.push_back(rec.sigma);
        run.levels.push_back(std::move(rec));
    }
    run.fit = extrapolate(x, means, cfg.fit);
    run.warnings = run.fit.warnings;
    if (cfg.average == AverageMode::AfterExtrapolation) {
        const std::size_t instances = run.levels.front().per_twirl.size();
        std::vector<double> values;
        for (std::size_t t = 0; t < instances; t++) {
            std::vector<double> y;
            for (const LevelRecord& rec : run.levels) {
                y.push_back(rec.per_twirl[t]);
            }
            values.push_back(extrapolate(x, y, cfg.fit).value);
        }
        run.value = mean_of(values);
        run.sigma = instances >= 2 ? sample_sd(values) / std::sqrt(double(instances))
                                   : propagate_sigma(run.fit.sensitivity, sems);
    } else {
        run.value = run.fit.value;
        run.sigma = propagate_sigma(run.fit.sensitivity, sems);
    }
    return run;
}

std::vector<double> bench_epsilons(const Sweep& bench, const PauliString& o,
                                   const BitState& expected, std::vector<std::string>& warnings,
                                   const TrexCalibration* cal,
                                   std::vector<std::vector<OutcomeProbability>>* probs) {
    const auto Q = sorted_support(o);
    std::vector<double> eps;
    for (const SweepPoint& pt : bench.points) {
        auto m = point_marginals(pt, Q, cal);
        eps.push_back(bnzne_epsilon(m, expected, Q));
        if (probs) {
            probs->push_back(std::move(m));
        }
    }
    check_monotone(eps, warnings);
    return eps;
}

std::vector<double> detection_epsilons(const Sweep& detection, const PauliString& o,
                                       IcVariant variant, std::vector<std::string>& warnings,
                                       const TrexCalibration* cal,
                                       std::vector<std::vector<OutcomeProbability>>* probs) {
    const auto Q = sorted_support(o);
    const std::size_t n = o.size();
    std::vector<double> eps;
    bool any_clamped = false;
    for (const SweepPoint& pt : detection.points) {
        auto m = point_marginals(pt, Q, cal);
        bool clamped = false;
        if (variant == IcVariant::AllZero) {
            double p_zero = 0;
            for (const Distribution& d : pt.runs) {
                p_zero += d.probs[0] / static_cast<double>(pt.runs.size());
            }
            eps.push_back(iczne_epsilon_from_probability(p_zero, n, &clamped));
        } else {
            std::vector<double> p0;
            for (const auto& p : m) {
                p0.push_back(std::clamp(p.p0, 0.0, 1.0));
            }
            eps.push_back(iczne_epsilon(p0, n, variant, &clamped));
        }
        any_clamped = any_clamped || clamped;
        if (probs) {
            probs->push_back(std::move(m));
        }
    }
    if (any_clamped) {
        warnings.push_back("negative radicand clamped to zero in the detection error rate");
    }
    check_monotone(eps, warnings);
    return eps;
}

namespace {

void check_app(const Circuit& app, const PauliString& o) {
    if (app.level() != Level::Native) {
        throw std::invalid_argument("mitigation expects a native application circuit");
    }
    if (o.size() != app.n_qubits()) {
        throw std::invalid_argument("observable length does not match the circuit");
    }
}

std::vector<double> level_abscissae(const ZneConfig& cfg) {
    std::vector<double> x;
    for (int r : cfg.levels) {
        x.push_back(static_cast<double>(r));
    }
    return x;
}

}  // namespace

void attach_epsilons(MitigationRun& run, const std::vector<double>& eps,
                     std::vector<std::vector<OutcomeProbability>>& probs,
                     const std::vector<std::string>& warnings) {
    for (std::size_t i = 0; i < run.levels.size(); i++) {
        run.levels[i].epsilon = eps[i];
        run.levels[i].bench_probs = std::move(probs[i]);
    }
    run.warnings.insert(run.warnings.end(), warnings.begin(), warnings.end());
}

MitigationRun run_zne(Executor& ex, const Circuit& app, const PauliString& o,
                      const ZneConfig& cfg, std::uint64_t seed) {
    check_app(app, o);
    Sweep s = run_sweep(ex, [&](int r) { return fold(app, r); }, o, cfg,
                        derive_seed(seed, "app", {}));
    return extrapolate_sweep("zne", s, o, 0, level_abscissae(cfg), cfg);
}

MitigationRun run_bnzne(Executor& ex, const Circuit& app, const BenchmarkBundle& bundle,
                        const PauliString& o, const ZneConfig& cfg, std::uint64_t seed) {
    check_app(app, o);
    if (!(bundle.observable == o)) {
        throw std::invalid_argument("benchmark bundle was generated for a different observable");
    }
    Sweep a = run_sweep(ex, [&](int r) { return fold(app, r); }, o, cfg,
                        derive_seed(seed, "app", {}));
    Sweep b = run_sweep(ex, [&](int r) { return fold(bundle.benchmark, r); }, o, cfg,
                        derive_seed(seed, "bench", {}));
    std::vector<std::string> warnings;
    std::vector<std::vector<OutcomeProbability>> probs;
    const auto eps = bench_epsilons(b, o, bundle.expected_bits, warnings, nullptr, &probs);
    MitigationRun run = extrapolate_sweep("bnzne", a, o, 0, eps, cfg);
    attach_epsilons(run, eps, probs, warnings);
    return run;
}

MitigationRun run_iczne(Executor& ex, const Circuit& app, const PauliString& o,
                        const ZneConfig& cfg, IcVariant variant, std::uint64_t seed) {
    check_app(app, o);
    Sweep a = run_sweep(ex, [&](int r) { return fold(app, r); }, o, cfg,
                        derive_seed(seed, "app", {}));
    Sweep d = run_sweep(ex, [&](int r) { return detection_circuit(app, r); },
                        PauliString(app.n_qubits()), cfg, derive_seed(seed, "detect", {}));
    std::vector<std::string> warnings;
    std::vector<std::vector<OutcomeProbability>> probs;
    const auto eps = detection_epsilons(d, o, variant, warnings, nullptr, &probs);
    MitigationRun run = extrapolate_sweep("iczne", a, o, 0, eps, cfg);
    attach_epsilons(run, eps, probs, warnings);
    return run;
}

nlohmann::json MitigationRun::to_json() const {
    nlohmann::json levels_json = nlohmann::json::array();
    for (const LevelRecord& rec : levels) {
        nlohmann::json l = {{"r", rec.r},
                            {"mean", rec.mean},
                            {"sigma", rec.sigma},
                            {"per_twirl", rec.per_twirl}};
        if (rec.epsilon) {
            l["epsilon"] = *rec.epsilon;
        }
        if (!rec.bench_probs.empty()) {
            nlohmann::json probs = nlohmann::json::array();
            for (const auto& p : rec.bench_probs) {
                probs.push_back({p.p0, p.p1});
            }
            l["bench_probs"] = probs;
        }
        levels_json.push_back(l);
    }
    nlohmann::json fit_json = {{"requested", fit_kind_name(fit.requested)},
                               {"used", fit_kind_name(fit.used)},
                               {"value", fit.value},
                               {"params", fit.params},
                               {"residual_norm", fit.residual_norm},
                               {"constant_data", fit.constant_data}};
    if (fit.used == FitKind::Richardson && !fit.constant_data) {
        fit_json["alpha"] = fit.params;
    }
    return {{"method", method},
            {"levels", levels_json},
            {"x", x},
            {"fit", fit_json},
            {"value", value},
            {"sigma", sigma},
            {"sigma_estimator", sigma_estimator},
            {"seed", seed},
            {"twirls_per_level", twirls_per_level},
            {"shots_per_circuit", shots_per_circuit},
            {"average", average_mode_name(average)},
            {"warnings", warnings}};
}

MitigationRun MitigationRun::from_json(const nlohmann::json& j) {
    MitigationRun run;
    run.method = j.at("method").get<std::string>();
    for (const auto& l : j.at("levels")) {
        LevelRecord rec;
        rec.r = l.at("r").get<int>();
        rec.mean = l.at("mean").get<double>();
        rec.sigma = l.at("sigma").get<double>();
        rec.per_twirl = l.at("per_twirl").get<std::vector<double>>();
        if (l.contains("epsilon")) {
            rec.epsilon = l.at("epsilon").get<double>();
        }
        if (l.contains("bench_probs")) {
            for (const auto& p : l.at("bench_probs")) {
                rec.bench_probs.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
            }
        }
        run.levels.push_back(std::move(rec));
    }
    run.x = j.at("x").get<std::vector<double>>();
    const auto& f = j.at("fit");
    run.fit.requested = fit_kind_from_name(f.at("requested").get<std::string>());
    run.fit.used = fit_kind_from_name(f.at("used").get<std::string>());
    run.fit.value = f.at("value").get<double>();
    run.fit.params = f.at("params").get<std::vector<double>>();
    run.fit.residual_norm = f.at("residual_norm").get<double>();
    run.fit.constant_data = f.at("constant_data").get<bool>();
    run.value = j.at("value").get<double>();
    run.sigma = j.at("sigma").get<double>();
    run.sigma_estimator = j.at("sigma_estimator").get<std::string>();
    run.seed = j.at("seed").get<std::uint64_t>();
    run.twirls_per_level = j.at("twirls_per_level").get<std::size_t>();
    run.shots_per_circuit = j.at("shots_per_circuit").get<std::size_t>();
    run.average = average_mode_from_name(j.at("average").get<std::string>());
    run.warnings = j.at("warnings").get<std::vector<std::string>>();
    run.fit.warnings = run.warnings;
    return run;
}

std::string MitigationRun::to_csv() const {
    std::ostringstream os;
    os << "x,y,sigma\n";
    for (std::size_t i = 0; i < levels.size(); i++) {
        os << format_real(x[i]) << ',' << format_real(levels[i].mean) << ','
           << format_real(levels[i].sigma) << '\n';
    }
    return os.str();
}

}  // namespace benchmit
