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

#include "ballcover/lp_space.hpp"

#include "ballcover/simd.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ballcover {

LpSpace::LpSpace(std::size_t dim, double p) : dim_(dim), p_(p) {
    if (dim == 0) throw std::invalid_argument("LpSpace: dimension must be at least 1");
    if (!(p > 1.0)) throw std::invalid_argument("LpSpace: p must exceed 1");
}

double LpSpace::dual_exponent() const noexcept {
    if (is_infinite()) return 1.0;
    return p_ / (p_ - 1.0);
}

void LpSpace::require_dim(std::span<const double> x) const {
    if (x.size() != dim_) {
        throw std::invalid_argument("dimension mismatch: expected " + std::to_string(dim_) +
                                    ", got " + std::to_string(x.size()));
    }
}

std::string LpSpace::p_label() const {
    if (is_infinite()) return "inf";
    std::ostringstream os;
    os.precision(17);
    os << p_;
    return os.str();
}

SmoothnessMajorant::SmoothnessMajorant(double g, double q) : gamma(g), power(q) {
    if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("SmoothnessMajorant: gamma must be positive");
    if (!(q > 1.0 && q <= 2.0)) throw std::invalid_argument("SmoothnessMajorant: power must lie in (1, 2]");
}

double SmoothnessMajorant::operator()(double u) const { return gamma * std::pow(u, power); }

double DualVector::apply(std::span<const double> x) const {
    source_space.require_dim(x);
    return simd::dot(coords, x);
}

double DualVector::dual_norm() const { return lq_norm(coords, source_space.dual_exponent()); }

double lq_norm(std::span<const double> x, double q) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    if (q == kInfinity || m == 0.0) return m;
    if (q == 1.0) {
        double s = 0.0;
        for (double v : x) s += std::fabs(v);
        return s;
    }
    // Scale by the max modulus so large/small entries neither overflow nor underflow.
    double s = 0.0;
    for (double v : x) s += std::pow(std::fabs(v) / m, q);
    return m * std::pow(s, 1.0 / q);
}

double norm(const LpSpace& space, std::span<const double> x) {
    space.require_dim(x);
    if (space.is_euclidean()) return std::sqrt(simd::dot(x, x));
    return lq_norm(x, space.p());
}

double distance(const LpSpace& space, std::span<const double> a, std::span<const double> b) {
    space.require_dim(a);
    space.require_dim(b);
    if (space.is_euclidean()) return std::sqrt(simd::squared_distance(a, b));
    if (space.is_infinite()) return simd::max_abs_difference(a, b);
    Vector diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    return lq_norm(diff, space.p());
}

DualVector norming_functional(const LpSpace& space, std::span<const double> x) {
    space.require_dim(x);
    if (space.is_infinite()) {
        throw std::invalid_argument("norming_functional: l_inf norming functionals are not unique");
    }
    const double nx = norm(space, x);
    if (nx == 0.0) throw std::invalid_argument("norming_functional: zero vector");
    const double p = space.p();
    Vector f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) continue;
        const double mag = p == 2.0 ? std::fabs(x[i]) / nx : std::pow(std::fabs(x[i]) / nx, p - 1.0);
        f[i] = std::copysign(mag, x[i]);
    }
    return {std::move(f), space};
}

SmoothnessMajorant smoothness_majorant_for(const LpSpace& space) {
    if (space.is_infinite()) throw std::invalid_argument("smoothness_majorant_for: l_inf is not smooth");
    const double p = space.p();
    if (p < 2.0) return {1.0 / p, p};
    return {p / 2.0, 2.0};
}

double smoothness_upper_bound(std::span<const double> x, std::span<const double> y, double u,
                              const LpSpace& space, const SmoothnessMajorant& majorant) {
    space.require_dim(y);
    const DualVector fx = norming_functional(space, x);
    const double nx = norm(space, x);
    const double ny = norm(space, y);
    return nx + u * fx.apply(y) + 2.0 * nx * majorant(u * ny / nx);
}

double solve_step_size(const SmoothnessMajorant& majorant, double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("solve_step_size: mu must be positive");
    const double q = majorant.power;
    const double a = std::pow(mu / (majorant.gamma * std::exp2(q + 2.0)), 1.0 / (q - 1.0));
    return std::min(a, 1.0);
}

double solve_step_size_bisection(const std::function<double(double)>& omega, double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("solve_step_size: mu must be positive");
    // f > 0 below the root since omega(u)/u -> 0.
    auto f = [&](double a) { return a * mu - 4.0 * omega(2.0 * a); };
    double lo = 1e-15;
    double hi = 1.0;
    if (f(hi) > 0.0) return 1.0;
    if (f(lo) <= 0.0) throw std::domain_error("solve_step_size: root lies below 1e-15");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL));
}

namespace {

// One direction on the unit sphere of `space`.
void draw_direction(const LpSpace& space, std::mt19937_64& rng, std::span<double> out) {
    const double p = space.p();
    for (;;) {
        if (space.is_infinite()) {
            std::uniform_real_distribution<double> unif(-1.0, 1.0);
            for (double& v : out) v = unif(rng);
        } else if (p == 2.0) {
            std::normal_distribution<double> gauss(0.0, 1.0);
            for (double& v : out) v = gauss(rng);
        } else {
            // |t| = G^{1/p}, G ~ Gamma(1/p, 1), has density ~ exp(-|t|^p).
            std::gamma_distribution<double> gam(1.0 / p, 1.0);
            std::bernoulli_distribution coin(0.5);
            for (double& v : out) {
                const double mag = std::pow(gam(rng), 1.0 / p);
                v = coin(rng) ? mag : -mag;
            }
        }
        const double n = norm(space, out);
        if (n > 0.0 && std::isfinite(n)) {
            for (double& v : out) v /= n;
            return;
        }
    }
}

PointSet sample_scaled(const LpSpace& space, std::size_t n, std::uint64_t seed, bool fill_ball) {
    if (n == 0) throw std::invalid_argument("sampling: n must be at least 1");
    const std::size_t d = space.dim();
    PointSet out(d, std::vector<double>(n * d));
    const double inv_d = 1.0 / static_cast<double>(d);
    for (std::size_t block = 0; block * kSampleBlock < n; ++block) {
        std::mt19937_64 rng(split_seed(seed, block));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const std::size_t end = std::min(n, (block + 1) * kSampleBlock);
        for (std::size_t i = block * kSampleBlock; i < end; ++i) {
            auto row = out[i];
            draw_direction(space, rng, row);
            if (fill_ball) {
                const double r = std::pow(unit(rng), inv_d);
                for (double& v : row) v *= r;
            }
        }
    }
    return out;
}

}  // namespace

PointSet sample_sphere(const LpSpace& space, std::size_t n, std::uint64_t seed) {
    return sample_scaled(space, n, seed, false);
}

PointSet sample_ball(const LpSpace& space, std::size_t n, std::uint64_t seed) {
    return sample_scaled(space, n, seed, true);
}

}  // namespace ballcover
