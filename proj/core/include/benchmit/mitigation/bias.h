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

#include <utility>
#include <vector>

#include "benchmit/mitigation/extrapolate.h"

namespace benchmit {

inline constexpr double kBiasGuard = 0.05;

struct BiasMitigatedValue {
    double app_qem = 0;
    double bench_qem = 0;
    double ratio = 0;
    double sigma = 0;
};

/// app_qem / bench_qem with first-order error propagation. Throws std::domain_error when
/// |bench_qem| < guard.
BiasMitigatedValue bias_mitigate(double app_qem, double bench_qem, double app_sigma = 0,
                                 double bench_sigma = 0, double guard = kBiasGuard);

/// Fit whose benchmark extrapolation lies closest to +1; ties resolve linear, exponential,
/// richardson_poly. Throws on an empty candidate list.
FitKind select_fit(const std::vector<std::pair<FitKind, double>>& bench_values);

}  // namespace benchmit
