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


#include "ballcover/bounds.hpp"

#include "ballcover/coverings.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ballcover {
namespace {

void require_mu(double mu, const char* who) {
    if (!(mu > 0.0 && mu <= 0.5)) throw std::invalid_argument(std::string(who) + ": mu must lie in (0, 1/2]");
}

void require_dim(std::size_t d, const char* who) {
    if (d == 0) throw std::invalid_argument(std::string(who) + ": dimension must be at least 1");
}

std::optional<double> raw_count(double log_value) {
    const double v = std::exp(log_value);
    if (v < kMaxRawCount) return v;
    return std::nullopt;
}

double exponent_term(std::size_t d, double mu) {
    return static_cast<double>(d) * mu * mu * std::log(2.0 / mu);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void BoundConstants::validate() const {
    if (!(C1 > 0.0 && C2 > 0.0 && C_generic > 0.0)) {
        throw std::invalid_argument("BoundConstants: constants must be positive");
    }
}

std::optional<double> VolumetricBounds::lower() const { return raw_count(log_lower); }
std::optional<double> VolumetricBounds::upper() const { return raw_count(log_upper); }

VolumetricBounds volumetric_bounds(std::size_t d, double eps) {
    require_dim(d, "volumetric_bounds");
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("volumetric_bounds: eps must lie in (0, 1]");
    const double dd = static_cast<double>(d);
    return {-dd * std::log(eps), dd * std::log1p(2.0 / eps)};
}

LogBound ndmu_upper(std::size_t d, double mu, const BoundConstants& c) {
    require_dim(d, "ndmu_upper");
    require_mu(mu, "ndmu_upper");
    c.validate();
    const bool outside = mu < 1.0 / std::sqrt(2.0 * static_cast<double>(d));
    return {c.C1 * exponent_term(d, mu), outside};
}

double ndmux_upper(std::size_t d, double mu, const BoundConstants& c) {
    require_dim(d, "ndmux_upper");
    require_mu(mu, "ndmux_upper");
    c.validate();
    return std::max(std::log(c.C2 * static_cast<double>(d)), c.C2 * exponent_term(d, mu));
}

double calibrate_c1(std::size_t d, double mu, std::size_t dictionary_size) {
    require_dim(d, "calibrate_c1");
    require_mu(mu, "calibrate_c1");
    if (dictionary_size == 0) throw std::invalid_argument("calibrate_c1: empty dictionary");
    return std::log(static_cast<double>(dictionary_size)) / exponent_term(d, mu);
}

double mu_for_delta(const LpSpace& space, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("mu_for_delta: delta must lie in (0, 1)");
    const SmoothnessMajorant w = smoothness_majorant_for(space);
    const double q = w.power;
    // a(mu) = kappa mu^{1/(q-1)}, so delta = kappa mu^{q'} / 2.
    const double kappa = std::pow(1.0 / (w.gamma * std::pow(2.0, q + 2.0)), 1.0 / (q - 1.0));
    const double q_dual = q / (q - 1.0);
    const double mu = std::pow(2.0 * delta / kappa, 1.0 / q_dual);
    if (solve_step_size(w, mu) >= 1.0) return 2.0 * delta;  // a capped at 1
    return mu;
}

double iteration_base_radius(const LpSpace& space) {
    if (space.is_euclidean()) return axis_cover_radius(space.dim());
    return basis_cover_parameters(space, 1.0, smoothness_majorant_for(space)).radius;
}

std::vector<BoundRow> covering_bound_table(const LpSpace& space, const std::vector<double>& delta_grid,
                                           const BoundConstants& c) {
    if (!space.is_smooth()) throw std::invalid_argument("covering_bound_table: requires 1 < p < inf");
    if (delta_grid.empty()) throw std::invalid_argument("covering_bound_table: empty grid");
    c.validate();
    const std::size_t d = space.dim();
    const double dd = static_cast<double>(d);
    const double p = space.p();
    const double p_dual = space.dual_exponent();
    const double r0 = iteration_base_radius(space);

    std::vector<BoundRow> rows;
    rows.reserve(delta_grid.size());
    for (double delta : delta_grid) {
        if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("covering_bound_table: delta must lie in (0, 1)");
        BoundRow row{};
        row.delta = delta;
        row.mu = mu_for_delta(space, delta);
        const VolumetricBounds vol = volumetric_bounds(d, 1.0 - delta);
        row.log_lower = vol.log_lower;
        row.log_volumetric_upper = vol.log_upper;

        const double linear = std::log(c.C2 * dd);
        double exponent;
        bool polynomial;
        if (p >= 2.0) {
            exponent = 8.0 * c.C2 * dd * p * delta * std::log(1.0 / (4.0 * p * delta));
            polynomial = dd * p * delta <= 1.0;
        } else {
            const double s = std::pow(delta, 2.0 / p_dual);
            exponent = c.C2 * dd * s * std::log(2.0 / delta);
            polynomial = dd * s <= 1.0;
        }
        row.log_regime_upper = std::log(2.0) + std::max(linear, exponent);

        // (2d)^m centers at radius r0^m <= 1 - delta.
        const double m = std::max(1.0, std::ceil(std::log1p(-delta) / std::log(r0)));
        row.log_iterated = m * std::log(2.0 * dd);

        if (row.mu > 0.5) {
            row.regime_flag = "out_of_range";
        } else {
            row.regime_flag = polynomial ? "polynomial" : "exponential";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<double> parse_delta_grid(const std::string& text) {
    const auto bad = [&] { return std::invalid_argument("parse_delta_grid: expected a:b:n, got '" + text + "'"); };
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) throw bad();
    double a = 0.0;
    double b = 0.0;
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        a = std::stod(text.substr(0, c1), &used);
        if (used != c1) throw bad();
        b = std::stod(text.substr(c1 + 1, c2 - c1 - 1), &used);
        if (used != c2 - c1 - 1) throw bad();
    } catch (const std::logic_error&) {
        throw bad();
    }
    const std::string ns = text.substr(c2 + 1);
    const auto res = std::from_chars(ns.data(), ns.data() + ns.size(), n);
    if (res.ec != std::errc() || res.ptr != ns.data() + ns.size() || n == 0) throw bad();
    if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
        throw std::invalid_argument("parse_delta_grid: endpoints must lie in (0, 1)");
    }
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return grid;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "delta,mu,log_lower,log_volumetric_upper,log_regime_upper,log_iterated,regime_flag\n";
    for (const BoundRow& r : rows) {
        out << fmt(r.delta) << ',' << fmt(r.mu) << ',' << fmt(r.log_lower) << ',' << fmt(r.log_volumetric_upper)
            << ',' << fmt(r.log_regime_upper) << ',' << fmt(r.log_iterated) << ',' << r.regime_flag << '\n';
    }
    return out.str();
}

}  // namespace ballcover
