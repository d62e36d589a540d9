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


#include "experiment/runner.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "benchmit/circuit_io.h"
#include "benchmit/density_matrix.h"
#include "benchmit/mitigation/bias.h"
#include "benchmit/mitigation/transforms.h"
#include "benchmit/mitigation/trex.h"
#include "benchmit/mitigation/zne.h"
#include "benchmit/models.h"
#include "benchmit/rng.h"
#include "benchmit/statevector.h"

#ifndef BENCHMIT_VERSION
#define BENCHMIT_VERSION "unknown"
#endif

namespace benchmit::experiment {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_json(const fs::path& file, const json& j) {
    fs::create_directories(file.parent_path());
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw ExecutionError("cannot write '" + file.string() + "'");
        }
        out << j.dump(2) << "\n";
    }
    fs::rename(tmp, file);
}

void write_text(const fs::path& file, const std::string& text) {
    fs::create_directories(file.parent_path());
    std::ofstream out(file);
    if (!out) {
        throw ExecutionError("cannot write '" + file.string() + "'");
    }
    out << text;
}

json read_json(const fs::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ExecutionError("cannot read '" + file.string() + "'");
    }
    return json::parse(in);
}

/// X/Y letters of o; Z and I need no basis change.
PauliString measurement_basis(const PauliString& o) {
    PauliString b(o.size());
    for (std::size_t q = 0; q < o.size(); q++) {
        if (o[q] == Pauli::X || o[q] == Pauli::Y) {
            b.set(q, o[q]);
        }
    }
    return b;
}

Sweep subset(const Sweep& s, const std::vector<int>& levels) {
    Sweep out;
    out.seed = s.seed;
    for (int r : levels) {
        auto it = std::find_if(s.points.begin(), s.points.end(),
                               [r](const SweepPoint& p) { return p.r == r; });
        if (it == s.points.end()) {
            throw std::logic_error("sweep lacks noise level " + std::to_string(r));
        }
        out.points.push_back(*it);
    }
    return out;
}

double mean(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

double sd(const std::vector<double>& v) {
    if (v.size() < 2) {
        return 0;
    }
    const double m = mean(v);
    double s = 0;
    for (double x : v) {
        s += (x - m) * (x - m);
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::vector<double> as_doubles(const std::vector<int>& levels) {
    return {levels.begin(), levels.end()};
}

json nullable(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

class JobRunner {
   public:
    JobRunner(const ExperimentConfig& c, std::size_t nt)
        : c_(c), jc_(build_job_circuits(c, nt)), ex_(make_executor(c)),
          seed_(derive_seed(c.seed, "job", {nt})) {
        twirls_ = std::max<std::size_t>(1, c.twirl ? c.twirl_instances : 0);
        bench_levels_ = c.level_union();
        app_levels_ = bench_levels_;
        if (std::find(app_levels_.begin(), app_levels_.end(), 1) == app_levels_.end()) {
            app_levels_.insert(app_levels_.begin(), 1);
        }
    }

    json run() {
        if (c_.trex) {
            cal_ = trex_calibrate(*ex_, c_.n_qubits(), c_.trex_masks,
                                  derive_seed(seed_, "trex-calibration", {}));
        }
        json obs = json::array();
        for (std::size_t k = 0; k < jc_.observables.size(); k++) {
            obs.push_back(observable(k));
        }
        json j = {{"job", job_id(jc_.n_trotter)},
                  {"n_trotter", jc_.n_trotter},
                  {"seed", seed_},
                  {"executor_runs", ex_->runs()},
                  {"observables", obs}};
        if (cal_) {
            j["trex_calibration_shots"] = cal_->total_shots;
        }
        return j;
    }

   private:
    const TrexCalibration* cal() const { return cal_ ? &*cal_ : nullptr; }

    const Sweep& sweep(const std::string& role, std::uint64_t index, const Circuit& circ,
                       const PauliString& basis, const std::vector<int>& levels, bool detection) {
        const std::string key =
            role + "#" + std::to_string(index) + "#" + basis.str() + "#" + circuit_to_text(circ);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        MethodConfig m;
        m.levels = levels;
        ZneConfig z = c_.zne_config(m);
        LevelBuilder build = detection ? LevelBuilder([&](int r) { return detection_circuit(circ, r); })
                                       : LevelBuilder([&](int r) { return fold(circ, r); });
        Sweep s = run_sweep(*ex_, build, basis, z, derive_seed(seed_, role, {index}));
        return cache_.emplace(key, std::move(s)).first->second;
    }

    struct Bench {
        const BenchmarkBundle* bundle;
        const Sweep* sweep;
    };

    /// Instance-combined benchmark QEM value and sigma.
    std::pair<double, double> combine(const std::vector<double>& values,
                                      const std::vector<double>& sigmas) const {
        const double k = static_cast<double>(values.size());
        if (c_.sigma_estimator == SigmaEstimator::InstanceSpread) {
            return {mean(values), sd(values) / std::sqrt(k)};
        }
        double s2 = 0;
        for (double s : sigmas) {
            s2 += s * s;
        }
        return {mean(values), std::sqrt(s2) / k};
    }

    json observable(std::size_t k) {
        const PauliString& o = jc_.observables[k];
        const PauliString basis = measurement_basis(o);
        const Circuit& app = c_.generator == GeneratorKind::Agnostic
                                 ? jc_.bundles[k].front().padded_application
                                 : jc_.native;
        const Sweep& a = sweep("app", 0, app, basis, app_levels_, false);
        std::vector<Bench> benches;
        const bool need_bench = c_.bias_mitigation || c_.select_fit || c_.bnzne.enabled;
        for (std::size_t i = 0; need_bench && i < c_.instances; i++) {
            const auto& list = jc_.bundles[k];
            const BenchmarkBundle& b = list[std::min(i, list.size() - 1)];
            benches.push_back({&b, &sweep("bench", i, b.benchmark, basis, bench_levels_, false)});
        }

        json methods = json::object();
        {
            const Sweep one = subset(a, {1});
            const std::vector<double> v = point_values(one.points.front(), o, 0, cal());
            const double m = mean(v);
            const double s = v.size() >= 2
                                 ? sd(v) / std::sqrt(double(v.size()))
                                 : parity_standard_error(m, one.points.front().runs.front().shots);
            methods["unmitigated"] = {{"value", m}, {"sigma", s}, {"runs", twirls_}};
        }
        const std::size_t K = c_.instances;
        if (c_.zne.enabled) {
            const std::vector<double> x = as_doubles(c_.zne.levels);
            std::vector<std::vector<double>> xb(K, x);
            method(methods, "zne", c_.zne, o, a, x, benches, xb, {}, 1, 1 + K);
        }
        if (c_.bnzne.enabled) {
            std::vector<std::vector<double>> eps(K);
            std::vector<std::string> warnings;
            std::vector<std::vector<OutcomeProbability>> probs0;
            for (std::size_t i = 0; i < K; i++) {
                std::vector<std::vector<OutcomeProbability>> probs;
                eps[i] = bench_epsilons(subset(*benches[i].sweep, c_.bnzne.levels), o,
                                        benches[i].bundle->expected_bits, warnings, cal(), &probs);
                if (i == 0) {
                    probs0 = std::move(probs);
                }
            }
            std::vector<double> x(c_.bnzne.levels.size(), 0.0);
            for (std::size_t l = 0; l < x.size(); l++) {
                for (std::size_t i = 0; i < K; i++) {
                    x[l] += eps[i][l] / static_cast<double>(K);
                }
            }
            Attach at{x, probs0, warnings};
            method(methods, "bnzne", c_.bnzne, o, a, x, benches, eps, at, 1 + K, 1 + K);
        }
        if (c_.iczne.enabled) {
            const Sweep& d = sweep("detect", 0, jc_.native, PauliString(o.size()),
                                   c_.iczne.levels, true);
            std::vector<std::string> warnings;
            std::vector<std::vector<OutcomeProbability>> probs;
            const std::vector<double> x =
                detection_epsilons(d, o, c_.ic_variant, warnings, cal(), &probs);
            std::vector<std::vector<double>> xb(K, x);
            Attach at{x, probs, warnings};
            method(methods, "iczne", c_.iczne, o, a, x, benches, xb, at, 2, 2 + K);
        }
        return {{"pauli", o.str()},
                {"exact", exact_expectation(jc_.logical, o)},
                {"methods", methods}};
    }

    struct Attach {
        std::vector<double> eps;
        std::vector<std::vector<OutcomeProbability>> probs;
        std::vector<std::string> warnings;
    };

    void method(json& out, const std::string& name, const MethodConfig& m, const PauliString& o,
                const Sweep& a, const std::vector<double>& x, const std::vector<Bench>& benches,
                const std::vector<std::vector<double>>& xb, std::optional<Attach> at,
                std::size_t app_factor, std::size_t bmit_factor) {
        const Sweep app_sweep = subset(a, m.levels);
        std::vector<Sweep> bench_sweeps;
        for (const Bench& b : benches) {
            bench_sweeps.push_back(subset(*b.sweep, m.levels));
        }
        const std::size_t per_level = m.levels.size() * twirls_;

        auto bench_qem = [&](FitKind fit) {
            ZneConfig z = c_.zne_config(m);
            z.fit = fit;
            std::vector<double> values;
            std::vector<double> sigmas;
            std::vector<std::string> warnings;
            for (std::size_t i = 0; i < benches.size(); i++) {
                MitigationRun r = extrapolate_sweep(name, bench_sweeps[i], o,
                                                    bits_mask(benches[i].bundle->flip_mask), xb[i],
                                                    z, cal());
                values.push_back(r.value);
                sigmas.push_back(r.sigma);
                warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
            }
            auto [v, s] = combine(values, sigmas);
            return std::make_tuple(v, s, values, warnings);
        };

        FitKind fit = m.fit;
        json selection;
        if (c_.select_fit) {
            std::vector<std::pair<FitKind, double>> candidates;
            for (FitKind f : {FitKind::Linear, FitKind::Exponential, FitKind::Richardson}) {
                try {
                    const double v = std::get<0>(bench_qem(f));
                    if (std::isfinite(v)) {
                        candidates.emplace_back(f, v);
                        selection[std::string(fit_kind_name(f))] = v;
                    }
                } catch (const std::exception&) {
                }
            }
            if (!candidates.empty()) {
                fit = select_fit(candidates);
            }
        }

        ZneConfig z = c_.zne_config(m);
        z.fit = fit;
        MitigationRun run = extrapolate_sweep(name, app_sweep, o, 0, x, z, cal());
        if (at) {
            attach_epsilons(run, at->eps, at->probs, at->warnings);
        }
        json entry = {{"value", nullable(run.value)},
                      {"sigma", nullable(run.sigma)},
                      {"fit", fit_kind_name(run.fit.used)},
                      {"runs", per_level * app_factor},
                      {"warnings", run.warnings},
                      {"run", run.to_json()}};
        if (c_.select_fit) {
            entry["fit_selection"] = selection;
        }
        out[name] = entry;

        if (!c_.bias_mitigation) {
            return;
        }
        auto [bv, bs, values, warnings] = bench_qem(fit);
        json b = {{"bench_qem", nullable(bv)},
                  {"bench_sigma", nullable(bs)},
                  {"bench_values", values},
                  {"fit", fit_kind_name(run.fit.used)},
                  {"runs", per_level * bmit_factor},
                  {"warnings", warnings}};
        try {
            BiasMitigatedValue r = bias_mitigate(run.value, bv, run.sigma, bs, c_.guard);
            b["value"] = nullable(r.ratio);
            b["sigma"] = nullable(r.sigma);
        } catch (const std::domain_error& e) {
            b["value"] = nullptr;
            b["sigma"] = nullptr;
            b["error"] = e.what();
        }
        out[name + "_bmit"] = b;
    }

    const ExperimentConfig& c_;
    JobCircuits jc_;
    std::unique_ptr<Executor> ex_;
    std::uint64_t seed_;
    std::size_t twirls_ = 1;
    std::vector<int> app_levels_;
    std::vector<int> bench_levels_;
    std::optional<TrexCalibration> cal_;
    std::map<std::string, Sweep> cache_;
};

json metrics_for(const json& job) {
    const json& obs = job.at("observables");
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < obs.size(); k++) {
        if (PauliString::parse(obs[k].at("pauli").get<std::string>()).weight() == 1) {
            chosen.push_back(k);
        }
    }
    if (chosen.empty()) {
        for (std::size_t k = 0; k < obs.size(); k++) {
            chosen.push_back(k);
        }
    }
    json out = json::array();
    for (const std::string& name : kMethodOrder) {
        std::vector<double> qem;
        std::vector<double> exact;
        double rel2 = 0;
        bool complete = true;
        for (std::size_t k : chosen) {
            const json& methods = obs[k].at("methods");
            if (!methods.contains(name) || methods[name].at("value").is_null()) {
                complete = false;
                break;
            }
            const double v = methods[name]["value"].get<double>();
            const double e = obs[k].at("exact").get<double>();
            qem.push_back(v);
            exact.push_back(e);
            const json& s = methods[name].at("sigma");
            if (e != 0 && !s.is_null()) {
                rel2 += std::pow(s.get<double>() / e, 2);
            }
        }
        if (!complete || qem.empty()) {
            continue;
        }
        FidelityMetrics fm = fidelity_metrics(qem, exact);
        const std::size_t used = qem.size() - fm.excluded;
        out.push_back({{"n_trotter", job.at("n_trotter")},
                       {"method", name},
                       {"fidelity", nullable(fm.fidelity)},
                       {"fidelity_sigma", used ? json(std::sqrt(rel2) / double(used)) : json(nullptr)},
                       {"rmse", fm.rmse},
                       {"excluded", fm.excluded},
                       {"observables", qem.size()}});
    }
    return out;
}

}  // namespace

fs::path bundle_dir(const ExperimentConfig& c) {
    return fs::path(c.output_dir) / config_hash(c);
}

std::string job_id(std::size_t n_trotter) {
    return "nt" + std::to_string(n_trotter);
}

std::vector<std::string> job_ids(const ExperimentConfig& c) {
    std::vector<std::string> ids;
    for (std::size_t nt : c.n_trotter) {
        ids.push_back(job_id(nt));
    }
    return ids;
}

void check_capacity(const ExperimentConfig& c) {
    const std::size_t n = c.n_qubits();
    const std::string nq = "topology.n_qubits=" + std::to_string(n);
    if (n > kStatevectorQubitCap) {
        throw ExecutionError(nq + " exceeds the statevector cap of " +
                             std::to_string(kStatevectorQubitCap) +
                             " qubits used for exact reference values; reduce the register or "
                             "use `generate` only (circuit generation has no cap)");
    }
    if (c.backend != BackendMode::Trajectories && n > kDensityQubitCap) {
        throw ExecutionError(nq + " exceeds the density-matrix cap of " +
                             std::to_string(kDensityQubitCap) + " qubits of backend.mode=" +
                             std::string(backend_mode_name(c.backend)) +
                             "; switch to backend.mode=trajectories (statevector, up to " +
                             std::to_string(kStatevectorQubitCap) + " qubits)");
    }
}

std::unique_ptr<Executor> make_executor(const ExperimentConfig& c) {
    c.noise.validate(c.n_qubits());
    switch (c.backend) {
        case BackendMode::ChannelExact:
            return std::make_unique<ExactExecutor>(c.noise);
        case BackendMode::Trajectories:
            return std::make_unique<ShotExecutor>(c.noise, c.shots, ShotMode::Trajectories);
        case BackendMode::DensitySampling:
            return std::make_unique<ShotExecutor>(c.noise, c.shots, ShotMode::DensitySampling);
    }
    throw std::logic_error("unknown backend mode");
}

JobCircuits build_job_circuits(const ExperimentConfig& c, std::size_t n_trotter) {
    JobCircuits jc;
    jc.n_trotter = n_trotter;
    try {
        ModelParams mp = c.model;
        mp.n_trotter = n_trotter;
        jc.logical = build_model(mp);
        jc.native = transpile(jc.logical, c.path);
        jc.observables = c.observable_list();
        for (std::size_t k = 0; k < jc.observables.size(); k++) {
            const PauliString& o = jc.observables[k];
            std::vector<BenchmarkBundle> list;
            switch (c.generator) {
                case GeneratorKind::Agnostic:
                    for (std::size_t i = 0; i < c.instances; i++) {
                        BenchmarkBundle b = gen_agnostic(
                            jc.logical, o, derive_seed(c.seed, "benchmark", {n_trotter, k, i}));
                        b.benchmark = transpile(b.benchmark, c.path);
                        b.padded_application = transpile(b.padded_application, c.path);
                        list.push_back(std::move(b));
                    }
                    break;
                case GeneratorKind::Tailored:
                    list.push_back(gen_tailored(jc.native, o));
                    break;
                case GeneratorKind::Entangling: {
                    EntanglingOptions opts;
                    opts.single_pair = c.single_pair;
                    BenchmarkBundle b = gen_entangling(jc.logical, o, opts);
                    b.benchmark = transpile(b.benchmark, c.path);
                    b.padded_application = transpile(b.padded_application, c.path);
                    list.push_back(std::move(b));
                    break;
                }
            }
            jc.bundles.push_back(std::move(list));
        }
    } catch (const std::exception& e) {
        throw ExecutionError("generating circuits for " + job_id(n_trotter) + ": " + e.what());
    }
    return jc;
}

GenerateResult generate(const ExperimentConfig& c) {
    GenerateResult gr;
    gr.dir = bundle_dir(c);
    std::vector<std::string> files;
    for (std::size_t nt : c.n_trotter) {
        const JobCircuits jc = build_job_circuits(c, nt);
        const std::string tag = "nt" + std::to_string(nt);
        const std::string app = "circuits/app_" + tag + ".txt";
        write_text(gr.dir / app, circuit_to_text(jc.native));
        files.push_back(app);
        for (std::size_t k = 0; k < jc.bundles.size(); k++) {
            for (std::size_t i = 0; i < jc.bundles[k].size(); i++) {
                const BenchmarkBundle& b = jc.bundles[k][i];
                const std::string name = "circuits/bench_" + tag + "_o" + std::to_string(k) +
                                         "_i" + std::to_string(i) + ".json";
                write_json(gr.dir / name, {{"manifest", b.manifest()},
                                           {"benchmark", circuit_to_json(b.benchmark)},
                                           {"padded_application",
                                            circuit_to_json(b.padded_application)}});
                files.push_back(name);
            }
        }
    }
    write_json(gr.dir / "config.json", config_to_json(c));
    files.push_back("config.json");
    json obs = json::array();
    for (const auto& o : c.observable_list()) {
        obs.push_back(o.str());
    }
    std::sort(files.begin(), files.end());
    write_json(gr.dir / "manifest.json", {{"name", c.name},
                                          {"config_hash", config_hash(c)},
                                          {"version", BENCHMIT_VERSION},
                                          {"n_qubits", c.n_qubits()},
                                          {"observables", obs},
                                          {"jobs", job_ids(c)},
                                          {"files", files}});
    files.push_back("manifest.json");
    std::sort(files.begin(), files.end());
    gr.files = files;
    return gr;
}

json run_job(const ExperimentConfig& c, std::size_t n_trotter) {
    check_capacity(c);
    try {
        JobRunner runner(c, n_trotter);
        return runner.run();
    } catch (const ExecutionError&) {
        throw;
    } catch (const std::exception& e) {
        throw ExecutionError(job_id(n_trotter) + ": " + e.what());
    }
}

RunResult run(const ExperimentConfig& c, const RunOptions& opts) {
    check_capacity(c);
    RunResult rr;
    rr.dir = generate(c).dir;
    const fs::path jobs_dir = rr.dir / "jobs";
    fs::create_directories(jobs_dir);
    std::vector<std::size_t> pending;
    for (std::size_t nt : c.n_trotter) {
        if (fs::exists(jobs_dir / (job_id(nt) + ".json"))) {
            rr.jobs_resumed++;
        } else {
            pending.push_back(nt);
        }
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= pending.size()) {
                return;
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                if (failure) {
                    return;
                }
                if (opts.log) {
                    opts.log("running " + job_id(pending[idx]));
                }
            }
            try {
                json j = run_job(c, pending[idx]);
                write_json(jobs_dir / (job_id(pending[idx]) + ".json"), j);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    const std::size_t n_workers = std::clamp<std::size_t>(opts.workers, 1, std::max<std::size_t>(1, pending.size()));
    std::vector<std::thread> threads;
    for (std::size_t w = 1; w < n_workers; w++) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto& t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    rr.jobs_run = pending.size();
    std::vector<json> jobs;
    for (std::size_t nt : c.n_trotter) {
        jobs.push_back(read_json(jobs_dir / (job_id(nt) + ".json")));
    }
    write_json(rr.dir / "results.json", assemble_results(c, jobs));
    return rr;
}

json assemble_results(const ExperimentConfig& c, const std::vector<json>& jobs) {
    json metrics = json::array();
    std::size_t total_runs = 0;
    for (const json& j : jobs) {
        for (const json& m : metrics_for(j)) {
            metrics.push_back(m);
        }
        total_runs += j.value("executor_runs", std::size_t{0});
    }
    return {{"manifest",
             {{"name", c.name},
              {"config_hash", config_hash(c)},
              {"version", BENCHMIT_VERSION},
              {"jobs", job_ids(c)},
              {"n_qubits", c.n_qubits()},
              {"executor_runs", total_runs}}},
            {"config", config_to_json(c)},
            {"jobs", jobs},
            {"metrics", metrics}};
}

}  // namespace benchmit::experiment
