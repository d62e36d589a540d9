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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace benchmit::experiment {

/// A bundle directory whose jobs have not all completed.
class IncompleteBundle : public std::runtime_error {
   public:
    explicit IncompleteBundle(std::vector<std::string> missing);
    const std::vector<std::string>& missing() const { return missing_; }

   private:
    std::vector<std::string> missing_;
};

struct ReportFiles {
    std::filesystem::path dir;
    std::vector<std::string> files;
};

/// Writes fidelity.csv, rmse.csv, correlators.csv and decay_rates.csv for a result bundle.
/// Correlator and decay-rate rows come from methods that have every Z_x and Z_x Z_{x+y} value;
/// "exact" is reported as its own method.
ReportFiles write_report(const nlohmann::json& results, const std::filesystem::path& out_dir);

/// Reads <dir>/results.json and writes the CSVs into <dir>/report. Throws IncompleteBundle
/// listing the job ids without a record.
ReportFiles report(const std::filesystem::path& dir);

}  // namespace benchmit::experiment
