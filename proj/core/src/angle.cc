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

#include "benchmit/angle.h"

#include <cmath>
#include <stdexcept>

namespace benchmit {

namespace {

constexpr double kSnapTolerance = 1e-12;

int mod8(int k) {
    int r = k % 8;
    return r < 0 ? r + 8 : r;
}

}  // namespace

double quarter_turn_radians(int k) {
    return static_cast<double>(mod8(k)) * (kPi / 2);
}

Angle Angle::radians(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    double r = std::fmod(value, kFourPi);
    if (r < 0) {
        r += kFourPi;
    }
    if (r >= kFourPi) {
        r = 0;
    }
    double k = std::round(r / (kPi / 2));
    if (std::abs(r - k * (kPi / 2)) <= kSnapTolerance) {
        return quarter_turns(static_cast<int>(k));
    }
    Angle a;
    a.radians_ = r;
    a.quarter_ = -1;
    return a;
}

Angle Angle::quarter_turns(int k) {
    Angle a;
    a.quarter_ = static_cast<std::int8_t>(mod8(k));
    a.radians_ = quarter_turn_radians(a.quarter_);
    return a;
}

Angle Angle::operator-() const {
    if (quarter_ >= 0) {
        return quarter_turns(-quarter_);
    }
    return radians(-radians_);
}

Angle Angle::operator+(const Angle& other) const {
    if (quarter_ >= 0 && other.quarter_ >= 0) {
        return quarter_turns(quarter_ + other.quarter_);
    }
    return radians(radians_ + other.radians_);
}

}  // namespace benchmit
