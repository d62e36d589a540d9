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
#include <filesystem>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "benchmit/benchgen.h"
#include "benchmit/executor.h"
#include "experiment/config.h"

namespace benchmit::experiment {

/// Failure while generating or executing circuits (as opposed to a bad configuration).
class ExecutionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Method names in the order they appear in results.
inline const std::vector<std::string> kMethodOrder{"unmitigated", "zne",   "zne_bmit",
                                                   "bnzne",       "bnzne_bmit", "iczne",
                                                   "iczne_bmit"};

/// out/<hash>: the content-addressed directory of an experiment.
std::filesystem::path bundle_dir(const ExperimentConfig& c);

std::string job_id(std::size_t n_trotter);
std::vector<std::string> job_ids(const ExperimentConfig& c);

/// Throws ExecutionError naming the relevant cap when the backend cannot hold the register.
void check_capacity(const ExperimentConfig& c);

std::unique_ptr<Executor> make_executor(const ExperimentConfig& c);

/// Application (logical and native) and benchmark bundles of one Trotter depth.
struct JobCircuits {
    std::size_t n_trotter = 0;
    Circuit logical;
    Circuit native;
    std::vector<PauliString> observables;
    /// bundles[o][i]: observable o, instance i. Circuits are native.
    std::vector<std::vector<BenchmarkBundle>> bundles;
};

JobCircuits build_job_circuits(const ExperimentConfig& c, std::size_t n_trotter);

struct GenerateResult {
    std::filesystem::path dir;
    /// Paths relative to dir, sorted.
    std::vector<std::string> files;
};

/// Writes config.json, manifest.json and the circuits of every job. Deterministic.
GenerateResult generate(const ExperimentConfig& c);

/// Runs one job in memory.
nlohmann::json run_job(const ExperimentConfig& c, std::size_t n_trotter);

struct RunOptions {
    std::size_t workers = 1;
    std::function<void(const std::string&)> log;
};

struct RunResult {
    std::filesystem::path dir;
    std::size_t jobs_run = 0;
    std::size_t jobs_resumed = 0;
};

/// Generates if needed, runs every job without a jobs/<id>.json, then writes results.json.
RunResult run(const ExperimentConfig& c, const RunOptions& opts = {});

/// The result bundle assembled from job records, in job order.
nlohmann::json assemble_results(const ExperimentConfig& c, const std::vector<nlohmann::json>& jobs);

}  // namespace benchmit::experiment
