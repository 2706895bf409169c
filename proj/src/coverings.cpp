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

#include "ballcover/coverings.hpp"

#include "ballcover/hadamard.hpp"
#include "ballcover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ballcover {
namespace {

std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_dim(std::size_t d, const char* what) {
    if (d == 0) throw std::invalid_argument(std::string(what) + ": dimension must be at least 1");
}

// The argument only treats ||x|| >= 1/2; points closer to the origin are
// within 1/2 + max||c|| of every center.
void require_small_norm_branch(double radius, double center_norm, const char* what) {
    if (radius < 0.5 + center_norm) {
        throw std::invalid_argument(std::string(what) + ": radius " + fmt_num(radius) +
                                    " is below 1/2 + " + fmt_num(center_norm) +
                                    "; small-norm points would not be covered");
    }
}

PointSet symmetric_centers(const PointSet& directions, double scale) {
    PointSet out(directions.dim());
    out.reserve(2 * directions.size());
    Vector c(directions.dim());
    for (double sign : {1.0, -1.0}) {
        for (std::size_t j = 0; j < directions.size(); ++j) {
            const auto g = directions[j];
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = sign * scale * g[i];
            out.push_back(c);
        }
    }
    return out;
}

PointSet standard_basis(std::size_t d) {
    PointSet e(d, std::vector<double>(d * d, 0.0));
    for (std::size_t j = 0; j < d; ++j) e[j][j] = 1.0;
    return e;
}

}  // namespace

BallCovering simplex_layout(const LpSpace& space, double a, double radius, bool closed) {
    const std::size_t d = space.dim();
    PointSet centers(d, std::vector<double>((d + 1) * d, 0.0));
    for (std::size_t j = 0; j < d; ++j) {
        centers[j][j] = a;
        centers[d][j] = -a;
    }
    return {space, std::move(centers), radius, closed,
            "simplex(d=" + std::to_string(d) + ",p=" + space.p_label() + ",a=" + fmt_num(a) + ")"};
}

MarginedCovering simplex_cover_unit(std::size_t d) {
    require_dim(d, "simplex_cover_unit");
    const double a = 1.0 / (2.0 * static_cast<double>(d));
    BallCovering cov = simplex_layout(LpSpace::euclidean(d), a, 1.0, false);
    cov.provenance = "simplex-unit(d=" + std::to_string(d) + ",a=" + fmt_num(a) + ")";
    return {std::move(cov), {MarginKind::strict_open, 0.0}};
}

MarginedCovering simplex_cover_shrunk(std::size_t d) {
    require_dim(d, "simplex_cover_shrunk");
    const double a = 2.0 / (5.0 * static_cast<double>(d) + 1.0);
    BallCovering cov = simplex_layout(LpSpace::euclidean(d), a, std::sqrt(1.0 - a * a), true);
    cov.provenance = "simplex-shrunk(d=" + std::to_string(d) + ",a=" + fmt_num(a) + ")";
    return {std::move(cov), {MarginKind::uniform, a * a}};
}

MarginedCovering etf_cover(std::size_t d) {
    require_dim(d, "etf_cover");
    if (!hadamard_order_available(d + 1)) {
        throw std::invalid_argument("etf_cover: d + 1 = " + std::to_string(d + 1) +
                                    " is not an available Hadamard order (need a power of two)");
    }
    const TightFrame frame = etf_from_hadamard(normalize_first_row(hadamard_of_order(d + 1)));
    const double dd = static_cast<double>(d);
    const double a = 1.0 / (8.0 * dd);
    const double gap = 1.0 / (64.0 * dd * dd);
    const double radius = std::sqrt(1.0 - gap);
    require_small_norm_branch(radius, a, "etf_cover");

    PointSet centers(d);
    centers.reserve(d + 1);
    Vector c(d);
    for (std::size_t j = 0; j <= d; ++j) {
        const auto phi = frame.vectors[j];
        for (std::size_t i = 0; i < d; ++i) c[i] = a * phi[i];
        centers.push_back(c);
    }
    BallCovering cov{LpSpace::euclidean(d), std::move(centers), radius, true,
                     "etf(d=" + std::to_string(d) + ",a=" + fmt_num(a) + ")"};
    return {std::move(cov), {MarginKind::uniform, gap}};
}

BallCovering dictionary_cover_l2(const Dictionary& dict, double mu) {
    if (!dict.space().is_euclidean()) throw std::invalid_argument("dictionary_cover_l2: requires p = 2");
    if (!(mu > 0.0 && mu <= std::sqrt(0.5))) {
        throw std::invalid_argument("dictionary_cover_l2: mu must lie in (0, 1/sqrt(2)]");
    }
    if (dict.size() == 0) throw std::invalid_argument("dictionary_cover_l2: empty dictionary");
    return {dict.space(), symmetric_centers(dict.vectors(), mu), std::sqrt(1.0 - mu * mu), true,
            "dict-l2(d=" + std::to_string(dict.space().dim()) + ",N=" + std::to_string(dict.size()) +
                ",mu=" + fmt_num(mu) + ")"};
}

BallCovering dictionary_cover_banach(const Dictionary& dict, double mu, const SmoothnessMajorant& majorant) {
    const LpSpace& space = dict.space();
    if (space.is_infinite()) throw std::invalid_argument("dictionary_cover_banach: requires 1 < p < inf");
    if (!(mu > 0.0 && mu <= 1.0)) throw std::invalid_argument("dictionary_cover_banach: mu must lie in (0, 1]");
    if (dict.size() == 0) throw std::invalid_argument("dictionary_cover_banach: empty dictionary");
    const double a = solve_step_size(majorant, mu);
    const double radius = 1.0 - 0.5 * mu * a;
    require_small_norm_branch(radius, a, "dictionary_cover_banach");
    return {space, symmetric_centers(dict.vectors(), a), radius, true,
            "dict-banach(d=" + std::to_string(space.dim()) + ",p=" + space.p_label() +
                ",N=" + std::to_string(dict.size()) + ",mu=" + fmt_num(mu) + ",a=" + fmt_num(a) + ")"};
}

double axis_cover_radius(std::size_t d) {
    require_dim(d, "axis_cover");
    const double dd = static_cast<double>(d);
    const double a = 1.0 / (4.0 * std::sqrt(dd));
    return std::max(0.5 + a, std::sqrt(1.0 - 3.0 / (16.0 * dd)));
}

MarginedCovering axis_cover(std::size_t d) {
    const double radius = axis_cover_radius(d);
    const double dd = static_cast<double>(d);
    const double a = 1.0 / (4.0 * std::sqrt(dd));
    require_small_norm_branch(radius, a, "axis_cover");
    BallCovering cov{LpSpace::euclidean(d), symmetric_centers(standard_basis(d), a), radius, true,
                     "axis(d=" + std::to_string(d) + ",a=" + fmt_num(a) + ")"};
    return {std::move(cov), {MarginKind::uniform, 3.0 / (16.0 * dd)}};
}

BasisCoverParameters basis_cover_parameters(const LpSpace& space, double basis_constant,
                                            const SmoothnessMajorant& majorant) {
    if (space.is_infinite()) throw std::invalid_argument("basis_cover: requires 1 < p < inf");
    if (!(basis_constant >= 1.0) || !std::isfinite(basis_constant)) {
        throw std::invalid_argument("basis_cover: basis constant K must be >= 1");
    }
    const double mu = 1.0 / (basis_constant * static_cast<double>(space.dim()));
    const double a = solve_step_size(majorant, mu);
    return {mu, a, 1.0 - 0.5 * a * mu};
}

BallCovering basis_cover(const LpSpace& space, double basis_constant, const SmoothnessMajorant& majorant) {
    return basis_cover(space, basis_constant, majorant, standard_basis(space.dim()));
}

BallCovering basis_cover(const LpSpace& space, double basis_constant, const SmoothnessMajorant& majorant,
                         const PointSet& basis) {
    const BasisCoverParameters prm = basis_cover_parameters(space, basis_constant, majorant);
    if (basis.dim() != space.dim() || basis.size() != space.dim()) {
        throw std::invalid_argument("basis_cover: basis must hold d vectors of dimension d");
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (std::fabs(norm(space, basis[j]) - 1.0) > kUnitNormTolerance) {
            throw std::invalid_argument("basis_cover: basis vectors must be unit norm");
        }
    }
    require_small_norm_branch(prm.radius, prm.step, "basis_cover");
    return {space, symmetric_centers(basis, prm.step), prm.radius, true,
            "basis(d=" + std::to_string(space.dim()) + ",p=" + space.p_label() + ",K=" +
                fmt_num(basis_constant) + ",mu=" + fmt_num(prm.mu) + ",a=" + fmt_num(prm.step) + ")"};
}

BallCovering iterate_cover(const BallCovering& cov, unsigned m, bool dedup) {
    if (m == 0) throw std::invalid_argument("iterate_cover: m must be at least 1");
    const double r = cov.radius;
    if (!(r < 1.0) || !(r > 0.0)) throw std::invalid_argument("iterate_cover: radius must lie in (0, 1)");
    const std::size_t n = cov.size();
    if (n == 0) throw std::invalid_argument("iterate_cover: empty covering");
    std::size_t total = 1;
    for (unsigned k = 0; k < m; ++k) {
        if (total > kMaxIteratedCenters / n) {
            throw std::out_of_range("iterate_cover: N^m exceeds " + std::to_string(kMaxIteratedCenters) + " centers");
        }
        total *= n;
    }
    const std::size_t d = cov.space.dim();

    // Level k adds r^k c_{i_k}; index digits in base n, most significant first.
    PointSet level = cov.centers;
    double scale = 1.0;
    for (unsigned k = 1; k < m; ++k) {
        scale *= r;
        PointSet next(d);
        next.reserve(level.size() * n);
        Vector c(d);
        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto base = level[i];
            for (std::size_t j = 0; j < n; ++j) {
                const auto step = cov.centers[j];
                for (std::size_t t = 0; t < d; ++t) c[t] = base[t] + scale * step[t];
                next.push_back(c);
            }
        }
        level = std::move(next);
    }
    const double radius = scale * r;

    if (dedup && level.size() > 1) {
        std::vector<std::size_t> order(level.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            const auto a = level[x];
            const auto b = level[y];
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
        auto close = [&](std::size_t x, std::size_t y) {
            const auto a = level[x];
            const auto b = level[y];
            for (std::size_t t = 0; t < d; ++t) {
                if (std::fabs(a[t] - b[t]) > 1e-12) return false;
            }
            return true;
        };
        PointSet kept(d);
        std::size_t last = order.front();
        kept.push_back(level[last]);
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (close(order[i], last)) continue;
            last = order[i];
            kept.push_back(level[last]);
        }
        level = std::move(kept);
    }
    return {cov.space, std::move(level), radius, cov.closed,
            "iterate(m=" + std::to_string(m) + (dedup ? ",dedup" : "") + "," + cov.provenance + ")"};
}

SimplexSearchResult banach_simplex_search(const LpSpace& space, const SmoothnessMajorant& majorant,
                                          std::size_t certify_samples, std::uint64_t seed) {
    if (space.is_infinite()) throw std::invalid_argument("banach_simplex_search: requires 1 < p < inf");
    if (certify_samples == 0) throw std::invalid_argument("banach_simplex_search: certify_samples must be positive");
    SimplexSearchResult result;
    for (int t = kSimplexSearchMinExponent; t <= kSimplexSearchMaxExponent; ++t) {
        const double a = std::ldexp(1.0, -t);
        BallCovering cov = simplex_layout(space, a, 1.0, false);
        ++result.candidates_tried;
        const CoverageReport rep = certify_sampling(cov, certify_samples, certify_samples, split_seed(seed, static_cast<std::uint64_t>(t)));
        if (rep.passed) {
            cov.provenance = "simplex-search(d=" + std::to_string(space.dim()) + ",p=" + space.p_label() +
                             ",a=" + fmt_num(a) + ",omega=" + fmt_num(majorant.gamma) + "u^" +
                             fmt_num(majorant.power) + ")";
            result.step = a;
            result.covering = std::move(cov);
            return result;
        }
    }
    return result;
}

}  // namespace ballcover
