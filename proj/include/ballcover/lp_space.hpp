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

// l_p geometry on R^d: norms, norming functionals, power-type smoothness
// majorants, the step-size equation a*mu = 4*omega(2a), and seeded sampling
// of the unit sphere and ball.

#include "ballcover/point_set.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>

namespace ballcover {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// R^d with the l_p norm, 1 < p <= inf.
class LpSpace {
public:
    /// Throws std::invalid_argument unless dim >= 1 and p > 1 (p may be kInfinity).
    LpSpace(std::size_t dim, double p);

    static LpSpace euclidean(std::size_t dim) { return LpSpace(dim, 2.0); }

    std::size_t dim() const noexcept { return dim_; }
    double p() const noexcept { return p_; }
    bool is_infinite() const noexcept { return p_ == kInfinity; }
    bool is_euclidean() const noexcept { return p_ == 2.0; }
    /// 1 < p < inf: unique norming functionals, power-type smoothness.
    bool is_smooth() const noexcept { return !is_infinite(); }

    /// q with 1/p + 1/q = 1; 1 when p = inf.
    double dual_exponent() const noexcept;

    /// Throws std::invalid_argument when x.size() != dim().
    void require_dim(std::span<const double> x) const;

    /// "2", "4", "1.5", "inf".
    std::string p_label() const;

    bool operator==(const LpSpace&) const = default;

private:
    std::size_t dim_;
    double p_;
};

/// omega(u) = gamma * u^power, a majorant of the modulus of smoothness.
struct SmoothnessMajorant {
    double gamma;
    double power;

    /// Throws unless gamma > 0 and power in (1, 2].
    SmoothnessMajorant(double gamma, double power);

    double operator()(double u) const;
    bool operator==(const SmoothnessMajorant&) const = default;
};

/// Element of the dual space (l_q), acting by the Euclidean pairing.
struct DualVector {
    Vector coords;
    LpSpace source_space;

    double apply(std::span<const double> x) const;
    double dual_norm() const;
};

double norm(const LpSpace& space, std::span<const double> x);

/// ||a - b||_p
double distance(const LpSpace& space, std::span<const double> a, std::span<const double> b);

/// l_q norm for arbitrary q >= 1 (used for dual norms).
double lq_norm(std::span<const double> x, double q);

/// F with F(x) = ||x||_p and ||F||_q = 1:
/// F_i = sign(x_i) |x_i|^{p-1} / ||x||_p^{p-1}, sign(0) = 0.
/// Throws std::invalid_argument for x = 0 or p = inf.
DualVector norming_functional(const LpSpace& space, std::span<const double> x);

/// u^p/p for p <= 2, (p/2) u^2 for p >= 2. Rejects p = inf.
SmoothnessMajorant smoothness_majorant_for(const LpSpace& space);

/// ||x|| + u F_x(y) + 2 ||x|| omega(u ||y|| / ||x||), an upper bound for
/// ||x + u y||. Throws for x = 0.
double smoothness_upper_bound(std::span<const double> x, std::span<const double> y, double u,
                              const LpSpace& space, const SmoothnessMajorant& majorant);

/// Positive root of a*mu = 4*omega(2a) for the power majorant, closed form,
/// capped at 1. Throws std::invalid_argument for mu <= 0.
double solve_step_size(const SmoothnessMajorant& majorant, double mu);

/// Same equation for an arbitrary majorant with omega(u)/u decreasing to 0;
/// bisection on [1e-15, 1], 200 iterations, returns 1 when there is no root
/// below 1.
double solve_step_size_bisection(const std::function<double(double)>& omega, double mu);

/// Deterministic child seed for stream `stream` of `seed` (splitmix64 mix).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/// Points per independently seeded RNG block in the samplers.
inline constexpr std::size_t kSampleBlock = 1024;

/// n points with ||x||_p = 1: coordinates with density ~ exp(-|t|^p), then
/// normalized (p = inf: uniform cube point scaled by its max modulus). Block b
/// of kSampleBlock points draws from its own engine seeded with
/// split_seed(seed, b), so any partition of the blocks reproduces the same
/// output.
PointSet sample_sphere(const LpSpace& space, std::size_t n, std::uint64_t seed);

/// n points uniform in the closed unit ball: sphere sample scaled by U^{1/d}.
PointSet sample_ball(const LpSpace& space, std::size_t n, std::uint64_t seed);

}  // namespace ballcover
