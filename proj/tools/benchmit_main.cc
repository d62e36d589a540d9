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


#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "experiment/config.h"
#include "experiment/report.h"
#include "experiment/runner.h"

namespace ex = benchmit::experiment;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitExecution = 3;

struct Options {
    std::string config;
    std::string out;
    std::string bundle;
    std::size_t workers = 1;
    std::optional<std::uint64_t> seed_override;
};

ex::ExperimentConfig load(const Options& o) {
    ex::ExperimentConfig c = ex::load_config(o.config);
    if (!o.out.empty()) {
        c.output_dir = o.out;
    }
    if (o.seed_override) {
        c.seed = *o.seed_override;
    }
    return c;
}

int cmd_generate(const Options& o) {
    const ex::ExperimentConfig c = load(o);
    const ex::GenerateResult g = ex::generate(c);
    std::cout << g.dir.string() << "\n";
    for (const auto& f : g.files) {
        std::cout << "  " << f << "\n";
    }
    return 0;
}

int cmd_run(const Options& o) {
    const ex::ExperimentConfig c = load(o);
    ex::RunOptions ro;
    ro.workers = o.workers;
    ro.log = [](const std::string& line) { std::cerr << line << "\n"; };
    const ex::RunResult r = ex::run(c, ro);
    std::cout << r.dir.string() << "\n"
              << "  jobs run: " << r.jobs_run << ", resumed: " << r.jobs_resumed << "\n"
              << "  results: " << (r.dir / "results.json").string() << "\n";
    return 0;
}

int cmd_report(const Options& o) {
    std::filesystem::path dir = o.bundle;
    if (dir.empty()) {
        if (o.config.empty()) {
            throw ex::ConfigError("report", "pass a bundle directory or --config");
        }
        dir = ex::bundle_dir(load(o));
    }
    const ex::ReportFiles rf = ex::report(dir);
    std::cout << rf.dir.string() << "\n";
    for (const auto& f : rf.files) {
        std::cout << "  " << f << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmit: benchmark-informed error mitigation experiments"};
    app.require_subcommand(1);
    Options o;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* c = sub->add_option("--config", o.config, "Experiment configuration (JSON)");
        if (config_required) {
            c->required()->check(CLI::ExistingFile);
        }
        sub->add_option("--out", o.out, "Override output.directory");
        sub->add_option("--seed-override", seed, "Override seeds.base");
    };
    CLI::App* gen = app.add_subcommand("generate", "Write application and benchmark circuits");
    add_common(gen, true);
    CLI::App* run = app.add_subcommand("run", "Execute all jobs, resuming finished ones");
    add_common(run, true);
    run->add_option("--workers", o.workers, "Parallel jobs")->check(CLI::PositiveNumber);
    CLI::App* rep = app.add_subcommand("report", "Write CSV tables from a result bundle");
    add_common(rep, false);
    rep->add_option("bundle", o.bundle, "Bundle directory out/<hash>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }
    for (CLI::App* sub : {gen, run, rep}) {
        if (sub->count("--seed-override")) {
            o.seed_override = seed;
        }
    }

    try {
        if (gen->parsed()) {
            return cmd_generate(o);
        }
        if (run->parsed()) {
            return cmd_run(o);
        }
        return cmd_report(o);
    } catch (const ex::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ex::IncompleteBundle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExecution;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExecution;
    }
}
