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
#include <numbers>
#include <optional>

namespace benchmit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kFourPi = 4 * std::numbers::pi;

/// A rotation angle in radians, reduced into [0, 4pi).
///
/// Rotation gates exp(-i theta P / 2) are 4pi-periodic, so reduction is exact as a unitary.
/// Multiples of pi/2 carry an integer tag (quarter turns, 0..7) so that Clifford tracking
/// reads the tag instead of comparing floating-point values. Radian inputs within 1e-12 of
/// a multiple of pi/2 are snapped to the canonical double `k * (pi / 2)` and tagged.
class Angle {
   public:
    constexpr Angle() = default;

    static Angle radians(double value);
    static Angle quarter_turns(int k);

    double radians() const { return radians_; }
    /// Quarter turns in 0..7 when the angle is an exact multiple of pi/2.
    std::optional<int> quarter_turns() const {
        return quarter_ < 0 ? std::nullopt : std::optional<int>(quarter_);
    }
    bool is_quarter_turn() const { return quarter_ >= 0; }

    Angle operator-() const;
    Angle operator+(const Angle& other) const;

    bool operator==(const Angle& other) const {
        return radians_ == other.radians_ && quarter_ == other.quarter_;
    }

   private:
    double radians_ = 0.0;
    std::int8_t quarter_ = 0;
};

/// Canonical double for k quarter turns, k in 0..7.
double quarter_turn_radians(int k);

}  // namespace benchmit
