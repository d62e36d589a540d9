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


#include "benchmit/mitigation/extrapolate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace benchmit {

namespace {

struct LineFit {
    double intercept;
    double slope;
    std::vector<double> sensitivity;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0) {
        throw std::invalid_argument("extrapolation needs at least two distinct abscissae");
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    for (std::size_t i = 0; i < x.size(); i++) {
        f.sensitivity.push_back(1 / n - mx * (x[i] - mx) / sxx);
    }
    return f;
}

double sse(const std::vector<double>& x, const std::vector<double>& y, double a, double b) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        const double r = y[i] - a * std::exp(-b * x[i]);
        s += r * r;
    }
    return s;
}

// Solves the 2x2 system [[a, b], [b, d]] u = v.
bool solve2(double a, double b, double d, double v0, double v1, double& u0, double& u1) {
    const double det = a * d - b * b;
    if (!(std::abs(det) > 0)) {
        return false;
    }
    u0 = (d * v0 - b * v1) / det;
    u1 = (a * v1 - b * v0) / det;
    return true;
}

ExtrapolationResult fit_exponential(const std::vector<double>& x, const std::vector<double>& y) {
    const double sign = y[0] > 0 ? 1.0 : -1.0;
    std::vector<double> logs;
    for (double v : y) {
        logs.push_back(std::log(std::abs(v)));
    }
    LineFit seed = fit_line(x, logs);
    double a = sign * std::exp(seed.intercept);
    double b = -seed.slope;
    double lambda = 1e-3;
    double cost = sse(x, y, a, b);
    for (int iter = 0; iter < 200; iter++) {
        double jaa = 0, jab = 0, jbb = 0, ga = 0, gb = 0;
        for (std::size_t i = 0; i < x.size(); i++) {
            const double e = std::exp(-b * x[i]);
            const double da = e;
            const double db = -a * x[i] * e;
            const double r = y[i] - a * e;
            jaa += da * da;
            jab += da * db;
            jbb += db * db;
            ga += da * r;
            gb += db * r;
        }
        bool improved = false;
        for (int tries = 0; tries < 30 && !improved; tries++) {
            double ua, ub;
            if (!solve2(jaa * (1 + lambda), jab, jbb * (1 + lambda), ga, gb, ua, ub)) {
                lambda *= 10;
                continue;
            }
            const double c = sse(x, y, a + ua, b + ub);
            if (c <= cost) {
                const bool converged =
                    std::abs(ua) + std::abs(ub) <= 1e-15 * (1 + std::abs(a) + std::abs(b));
                a += ua;
                b += ub;
                cost = c;
                lambda = std::max(lambda / 10, 1e-12);
                improved = true;
                if (converged) {
                    iter = 200;
                }
            } else {
                lambda *= 10;
            }
        }
        if (!improved) {
            break;
        }
    }
    ExtrapolationResult r;
    r.used = FitKind::Exponential;
    r.value = a;
    r.params = {a, b};
    // Implicit differentiation of the normal equations J^T r = 0 with the full Hessian.
    double haa = 0, hab = 0, hbb = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        const double e = std::exp(-b * x[i]);
        const double da = e;
        const double db = -a * x[i] * e;
        const double res = y[i] - a * e;
        haa += da * da;
        hab += da * db + res * x[i] * e;
        hbb += db * db - res * a * x[i] * x[i] * e;
    }
    for (double xi : x) {
        const double e = std::exp(-b * xi);
        double sa = 0, sb = 0;
        if (!solve2(haa, hab, hbb, e, -a * xi * e, sa, sb)) {
            sa = 0;
        }
        r.sensitivity.push_back(sa);
    }
    return r;
}

}  // namespace

std::string_view fit_kind_name(FitKind k) {
    switch (k) {
        case FitKind::Linear:
            return "linear";
        case FitKind::Exponential:
            return "exponential";
        case FitKind::Richardson:
            return "richardson_poly";
    }
    throw std::logic_error("unreachable fit kind");
}

FitKind fit_kind_from_name(std::string_view name) {
    if (name == "linear") {
        return FitKind::Linear;
    }
    if (name == "exponential") {
        return FitKind::Exponential;
    }
    if (name == "richardson_poly" || name == "richardson") {
        return FitKind::Richardson;
    }
    throw std::invalid_argument("unknown fit: " + std::string(name));
}

std::vector<double> richardson_weights(const std::vector<double>& x) {
    std::vector<double> alpha(x.size(), 1.0);
    for (std::size_t i = 0; i < x.size(); i++) {
        for (std::size_t m = 0; m < x.size(); m++) {
            if (m == i) {
                continue;
            }
            if (x[m] == x[i]) {
                throw std::invalid_argument("Richardson extrapolation needs distinct abscissae");
            }
            alpha[i] *= x[m] / (x[m] - x[i]);
        }
    }
    return alpha;
}

double propagate_sigma(const std::vector<double>& sensitivity, const std::vector<double>& sigma) {
    if (sensitivity.size() != sigma.size()) {
        throw std::invalid_argument("sensitivity and sigma sizes differ");
    }
    double s = 0;
    for (std::size_t i = 0; i < sigma.size(); i++) {
        s += sensitivity[i] * sensitivity[i] * sigma[i] * sigma[i];
    }
    return std::sqrt(s);
}

ExtrapolationResult extrapolate(const std::vector<double>& x, const std::vector<double>& y,
                                FitKind fit) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("extrapolation needs at least two points of matching size");
    }
    for (std::size_t i = 0; i < x.size(); i++) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw std::invalid_argument("extrapolation data must be finite");
        }
        if (x[i] < 0) {
            throw std::invalid_argument("extrapolation abscissae must be non-negative");
        }
    }
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    if (*hi - *lo <= 1e-14 * std::max(1.0, std::abs(*lo))) {
        ExtrapolationResult r;
        r.requested = r.used = fit;
        r.value = y[0];
        r.constant_data = true;
        r.sensitivity.assign(y.size(), 1.0 / static_cast<double>(y.size()));
        return r;
    }
    ExtrapolationResult r;
    switch (fit) {
        case FitKind::Linear: {
            LineFit f = fit_line(x, y);
            r.used = FitKind::Linear;
            r.value = f.intercept;
            r.params = {f.intercept, f.slope};
            r.sensitivity = std::move(f.sensitivity);
            break;
        }
        case FitKind::Richardson: {
            r.used = FitKind::Richardson;
            r.params = richardson_weights(x);
            r.sensitivity = r.params;
            for (std::size_t i = 0; i < y.size(); i++) {
                r.value += r.params[i] * y[i];
            }
            break;
        }
        case FitKind::Exponential: {
            const bool same_sign =
                std::all_of(y.begin(), y.end(), [](double v) { return v > 0; }) ||
                std::all_of(y.begin(), y.end(), [](double v) { return v < 0; });
            if (!same_sign) {
                r = extrapolate(x, y, FitKind::Linear);
                r.warnings.push_back("exponential fit needs same-sign nonzero data; used linear");
            } else {
                r = fit_exponential(x, y);
            }
            break;
        }
    }
    r.requested = fit;
    double rr = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        double model = 0;
        switch (r.used) {
            case FitKind::Linear:
                model = r.params[0] + r.params[1] * x[i];
                break;
            case FitKind::Exponential:
                model = r.params[0] * std::exp(-r.params[1] * x[i]);
                break;
            case FitKind::Richardson:
                model = y[i];
                break;
        }
        rr += (y[i] - model) * (y[i] - model);
    }
    r.residual_norm = std::sqrt(rr);
    return r;
}

}  // namespace benchmit
