// SPDX-License-Identifier: Apache-2.0
//
// ballcover: explicit coverings of finite-dimensional unit balls
// Copyright (C) 2026 The ballcover authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#pragma once

// Covering-number and dictionary-size bounds, all in log space. Absolute
// constants are caller-supplied and default to 1 (reported as uncalibrated).

#include "ballcover/lp_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ballcover {

struct BoundConstants {
    double C1 = 1.0;         // dictionary-size bound in l_2
    double C2 = 1.0;         // dictionary-size bound in smooth spaces
    double C_generic = 1.0;  // iteration bounds

    /// Throws std::invalid_argument unless all constants are positive.
    void validate() const;
    /// True while every constant still holds its default.
    bool uncalibrated() const noexcept { return C1 == 1.0 && C2 == 1.0 && C_generic == 1.0; }
};

/// Raw counts are reported only below this value.
inline constexpr double kMaxRawCount = 1e15;

struct VolumetricBounds {
    double log_lower;  // -d ln eps
    double log_upper;  // d ln(1 + 2/eps)

    std::optional<double> lower() const;
    std::optional<double> upper() const;
};

/// eps^-d <= N_eps <= (1 + 2/eps)^d. Throws unless eps in (0, 1] and d >= 1.
VolumetricBounds volumetric_bounds(std::size_t d, double eps);

struct LogBound {
    double value;
    bool outside_stated_range;  // mu < (2d)^{-1/2}
};

/// C1 d mu^2 ln(2/mu), the log of the l_2 dictionary-size bound. Requires
/// 0 < mu <= 1/2.
LogBound ndmu_upper(std::size_t d, double mu, const BoundConstants& c);

/// log max(C2 d, exp(C2 d mu^2 ln(2/mu))). Requires 0 < mu <= 1/2.
double ndmux_upper(std::size_t d, double mu, const BoundConstants& c);

/// log|D| / (d mu^2 ln(2/mu)): the C1 that makes the l_2 bound tight for an
/// observed dictionary size.
double calibrate_c1(std::size_t d, double mu, std::size_t dictionary_size);

/// mu with delta = mu a(mu) / 2 for the power majorant of the space.
double mu_for_delta(const LpSpace& space, double delta);

/// Radius of the one-step covering that log_iterated composes (axis cover
/// for p = 2, standard-basis cover otherwise).
double iteration_base_radius(const LpSpace& space);

struct BoundRow {
    double delta;
    double mu;
    double log_lower;
    double log_volumetric_upper;
    double log_regime_upper;
    double log_iterated;
    std::string regime_flag;  // "polynomial", "exponential" or "out_of_range"
};

/// One row per delta in (0, 1). Requires 1 < p < inf.
std::vector<BoundRow> covering_bound_table(const LpSpace& space, const std::vector<double>& delta_grid,
                                           const BoundConstants& c);

/// "a:b:n" -> n evenly spaced values from a to b inclusive (n = 1 gives {a}).
/// Throws std::invalid_argument for malformed grids or values outside (0, 1).
std::vector<double> parse_delta_grid(const std::string& text);

/// CSV with header delta,mu,log_lower,log_volumetric_upper,log_regime_upper,log_iterated,regime_flag.
std::string bound_table_csv(const std::vector<BoundRow>& rows);

}  // namespace ballcover
