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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "experiment/config.h"
#include "experiment/report.h"
#include "experiment/runner.h"

namespace benchmit::experiment {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json minimal(const fs::path& out) {
    return {{"name", "t"},
            {"model", {{"kind", "kicked_ising"}, {"theta1", 0.3}, {"theta2", 0.2}, {"n_trotter", 1}}},
            {"topology", {{"shape", "linear_chain"}, {"n_qubits", 2}}},
            {"observables", {{"kind", "explicit"}, {"paulis", {"ZI"}}}},
            {"mitigation",
             {{"zne", {{"enabled", true}}}, {"pauli_twirling", {{"instances", 3}}}}},
            {"noise", {{"p2q", 0.02}}},
            {"seeds", {{"base", 7}}},
            {"output", {{"directory", out.string()}}}};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class ExperimentTest : public ::testing::Test {
   protected:
    void SetUp() override {
        root_ = fs::temp_directory_path() /
                ("benchmit_tools_" + std::string(::testing::UnitTest::GetInstance()
                                                     ->current_test_info()
                                                     ->name()));
        fs::remove_all(root_);
    }
    void TearDown() override { fs::remove_all(root_); }
    fs::path root_;
};

std::string error_path(const json& j) {
    try {
        parse_config(j);
    } catch (const ConfigError& e) {
        return e.path();
    }
    return "";
}

TEST_F(ExperimentTest, ConfigErrorsCarryFieldPath) {
    json j = minimal(root_);
    j["mitigation"]["zne"]["fit"] = "cubic";
    EXPECT_EQ(error_path(j), "mitigation.zne.fit");
    j = minimal(root_);
    j["model"]["bogus"] = 1;
    EXPECT_EQ(error_path(j), "model.bogus");
    j = minimal(root_);
    j["mitigation"]["zne"]["enabled"] = false;
    EXPECT_FALSE(error_path(j).empty());
    j = minimal(root_);
    j["observables"]["paulis"] = {"ZII"};
    EXPECT_FALSE(error_path(j).empty());
    EXPECT_EQ(error_path(minimal(root_)), "");
}

TEST_F(ExperimentTest, HashIgnoresOutputDirectory) {
    const ExperimentConfig a = parse_config(minimal(root_ / "a"));
    const ExperimentConfig b = parse_config(minimal(root_ / "b"));
    EXPECT_EQ(config_hash(a), config_hash(b));
    json j = minimal(root_);
    j["noise"]["p2q"] = 0.03;
    EXPECT_NE(config_hash(a), config_hash(parse_config(j)));
}

TEST_F(ExperimentTest, GenerateIsDeterministic) {
    const ExperimentConfig c = parse_config(minimal(root_));
    const GenerateResult first = generate(c);
    EXPECT_EQ(first.files.size(), 4u);
    std::vector<std::string> contents;
    for (const std::string& f : first.files) {
        contents.push_back(slurp(first.dir / f));
    }
    fs::remove_all(root_);
    const GenerateResult second = generate(c);
    ASSERT_EQ(second.files, first.files);
    for (std::size_t i = 0; i < first.files.size(); i++) {
        EXPECT_EQ(slurp(second.dir / second.files[i]), contents[i]) << first.files[i];
    }
}

TEST_F(ExperimentTest, ResumeGivesIdenticalBundle) {
    json j = minimal(root_);
    j["model"]["n_trotter"] = {1, 2};
    const ExperimentConfig c = parse_config(j);
    const RunResult full = run(c);
    EXPECT_EQ(full.jobs_run, 2u);
    const std::string reference = slurp(full.dir / "results.json");
    fs::remove(full.dir / "jobs" / "nt2.json");
    fs::remove(full.dir / "results.json");
    const RunResult resumed = run(c);
    EXPECT_EQ(resumed.jobs_run, 1u);
    EXPECT_EQ(resumed.jobs_resumed, 1u);
    EXPECT_EQ(slurp(resumed.dir / "results.json"), reference);
}

TEST_F(ExperimentTest, ReportListsMissingJobs) {
    json j = minimal(root_);
    j["model"]["n_trotter"] = {1, 2};
    const RunResult rr = run(parse_config(j));
    fs::remove(rr.dir / "jobs" / "nt2.json");
    fs::remove(rr.dir / "results.json");
    try {
        report(rr.dir);
        FAIL() << "expected IncompleteBundle";
    } catch (const IncompleteBundle& e) {
        EXPECT_NE(std::string(e.what()).find("nt2"), std::string::npos);
    }
}

TEST_F(ExperimentTest, NoiselessRunIsExact) {
    json j = minimal(root_);
    j["noise"]["p2q"] = 0.0;
    j["mitigation"]["bnzne"] = {{"enabled", true}, {"fit", "linear"}};
    const json job = run_job(parse_config(j), 1);
    const json& o = job["observables"][0];
    const double exact = o["exact"];
    for (const char* m : {"unmitigated", "zne", "zne_bmit"}) {
        EXPECT_NEAR(o["methods"][m]["value"].get<double>(), exact, 1e-10) << m;
    }
}

TEST_F(ExperimentTest, BenchmarkAwareMethodsDoubleTheBudget) {
    json zne_only = minimal(root_);
    zne_only["mitigation"]["bias_mitigation"] = false;
    json bn_only = zne_only;
    bn_only["mitigation"]["zne"]["enabled"] = false;
    bn_only["mitigation"]["bnzne"] = {{"enabled", true}, {"fit", "linear"}};
    const json a = run_job(parse_config(zne_only), 1);
    const json b = run_job(parse_config(bn_only), 1);
    const std::size_t zne_runs = a["executor_runs"];
    EXPECT_EQ(b["executor_runs"].get<std::size_t>(), 2 * zne_runs);
    const json& m = b["observables"][0]["methods"];
    EXPECT_EQ(m["bnzne"]["runs"].get<std::size_t>(),
              2 * a["observables"][0]["methods"]["zne"]["runs"].get<std::size_t>());
    json bmit = minimal(root_);
    const json c = run_job(parse_config(bmit), 1);
    EXPECT_EQ(c["executor_runs"].get<std::size_t>(), 2 * zne_runs);
}

}  // namespace
}  // namespace benchmit::experiment
