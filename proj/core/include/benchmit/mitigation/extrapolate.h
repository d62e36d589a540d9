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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace benchmit {

enum class FitKind : std::uint8_t { Linear, Exponential, Richardson };

std::string_view fit_kind_name(FitKind k);
FitKind fit_kind_from_name(std::string_view name);

struct ExtrapolationResult {
    /// Value of the fitted model at x = 0.
    double value = 0;
    FitKind requested = FitKind::Linear;
    /// Fit actually used (differs from `requested` after a fallback).
    FitKind used = FitKind::Linear;
    /// Linear: {intercept, slope}. Exponential: {A, B} for A exp(-B x). Richardson: weights.
    std::vector<double> params;
    /// d value / d y_i, used for error propagation.
    std::vector<double> sensitivity;
    /// Euclidean norm of y_i minus the fitted model at x_i.
    double residual_norm = 0;
    bool constant_data = false;
    std::vector<std::string> warnings;
};

/// Extrapolates (x_i, y_i), x_i >= 0, to x = 0. Constant data returns that constant for every fit.
/// An exponential fit on data that changes sign or touches zero falls back to linear.
ExtrapolationResult extrapolate(const std::vector<double>& x, const std::vector<double>& y,
                                FitKind fit);

/// Richardson weights alpha_i with sum_i alpha_i x_i^k = [k == 0] for k < size.
std::vector<double> richardson_weights(const std::vector<double>& x);

/// sqrt(sum_i (s_i sigma_i)^2).
double propagate_sigma(const std::vector<double>& sensitivity, const std::vector<double>& sigma);

}  // namespace benchmit
