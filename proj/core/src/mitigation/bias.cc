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


#include "benchmit/mitigation/bias.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace benchmit {

BiasMitigatedValue bias_mitigate(double app_qem, double bench_qem, double app_sigma,
                                 double bench_sigma, double guard) {
    if (!(std::abs(bench_qem) >= guard)) {
        throw std::domain_error("benchmark mitigated value " + std::to_string(bench_qem) +
                                " is below the guard " + std::to_string(guard) +
                                "; the benchmark is saturated by noise");
    }
    BiasMitigatedValue v;
    v.app_qem = app_qem;
    v.bench_qem = bench_qem;
    v.ratio = app_qem / bench_qem;
    const double da = app_sigma / bench_qem;
    const double db = app_qem * bench_sigma / (bench_qem * bench_qem);
    v.sigma = std::sqrt(da * da + db * db);
    return v;
}

FitKind select_fit(const std::vector<std::pair<FitKind, double>>& bench_values) {
    if (bench_values.empty()) {
        throw std::invalid_argument("select_fit needs at least one candidate");
    }
    auto better = [](const std::pair<FitKind, double>& a, const std::pair<FitKind, double>& b) {
        const double da = std::abs(a.second - 1);
        const double db = std::abs(b.second - 1);
        if (da != db) {
            return da < db;
        }
        return a.first < b.first;
    };
    std::pair<FitKind, double> best = bench_values.front();
    for (const auto& c : bench_values) {
        if (better(c, best)) {
            best = c;
        }
    }
    return best.first;
}

}  // namespace benchmit
