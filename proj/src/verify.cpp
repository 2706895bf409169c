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

#include "ballcover/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace ballcover {
namespace {

// ||a - b||_p for finite p != 2 without temporaries.
double lp_distance_raw(const double* a, const double* b, std::size_t n, double p) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::pow(std::fabs(a[i] - b[i]) / m, p);
    return m * std::pow(s, 1.0 / p);
}

// Subgradient of x -> ||x - c||_p at x != c.
void distance_gradient(const LpSpace& space, std::span<const double> x, std::span<const double> c,
                       std::span<double> out) {
    const std::size_t d = x.size();
    Vector diff(d);
    for (std::size_t i = 0; i < d; ++i) diff[i] = x[i] - c[i];
    std::fill(out.begin(), out.end(), 0.0);
    if (space.is_infinite()) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < d; ++i) {
            if (std::fabs(diff[i]) > std::fabs(diff[k])) k = i;
        }
        out[k] = diff[k] >= 0.0 ? 1.0 : -1.0;
        return;
    }
    const DualVector f = norming_functional(space, diff);
    std::copy(f.coords.begin(), f.coords.end(), out.begin());
}

}  // namespace

simd::Extremum nearest_center(const BallCovering& cov, std::span<const double> x) {
    cov.space.require_dim(x);
    if (cov.centers.empty()) return {std::numeric_limits<double>::infinity(), 0};
    const auto& k = simd::active();
    const std::size_t d = cov.space.dim();
    if (cov.space.is_euclidean()) {
        simd::Extremum e = k.nearest_squared(cov.centers.data(), cov.size(), x.data(), d);
        e.value = std::sqrt(e.value);
        return e;
    }
    if (cov.space.is_infinite()) return k.nearest_chebyshev(cov.centers.data(), cov.size(), x.data(), d);
    simd::Extremum best{std::numeric_limits<double>::infinity(), 0};
    const double p = cov.space.p();
    for (std::size_t j = 0; j < cov.size(); ++j) {
        const double v = lp_distance_raw(cov.centers[j].data(), x.data(), d, p);
        if (v < best.value) best = {v, j};
    }
    return best;
}

double check_point(const BallCovering& cov, std::span<const double> x) {
    return cov.radius - nearest_center(cov, x).value;
}

bool margin_passes(const BallCovering& cov, double margin) {
    return cov.closed ? margin >= -kCoverTolerance : margin > 0.0;
}

CoverageReport certify_sampling(const BallCovering& cov, std::size_t n_ball, std::size_t n_sphere,
                                std::uint64_t seed) {
    if (n_ball + n_sphere == 0) throw std::invalid_argument("certify_sampling: no samples requested");
    const auto start = std::chrono::steady_clock::now();
    CoverageReport rep;
    rep.seed = seed;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    auto scan = [&](const PointSet& pts) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double m = check_point(cov, pts[i]);
            rep.worst_margin = std::min(rep.worst_margin, m);
            if (!rep.failure_witness && !margin_passes(cov, m)) {
                rep.failure_witness = Vector(pts[i].begin(), pts[i].end());
            }
        }
        rep.samples_tested += pts.size();
    };
    if (n_ball > 0) scan(sample_ball(cov.space, n_ball, split_seed(seed, 0)));
    if (n_sphere > 0) scan(sample_sphere(cov.space, n_sphere, split_seed(seed, 1)));
    rep.passed = !rep.failure_witness.has_value();
    rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

AdversarialResult adversarial_search(const BallCovering& cov, std::size_t restarts, std::size_t steps,
                                     std::uint64_t seed) {
    if (restarts == 0 || steps == 0) throw std::invalid_argument("adversarial_search: restarts and steps must be positive");
    const LpSpace& space = cov.space;
    const std::size_t d = space.dim();
    const PointSet starts = sample_sphere(space, restarts, seed);

    AdversarialResult best;
    best.min_distance = -1.0;
    Vector x(d);
    Vector g(d);
    for (std::size_t r = 0; r < restarts; ++r) {
        std::copy(starts[r].begin(), starts[r].end(), x.begin());
        for (std::size_t t = 1;; ++t) {
            const simd::Extremum near = nearest_center(cov, x);
            if (near.value > best.min_distance) {
                best.min_distance = near.value;
                best.point = x;
            }
            if (t > steps || near.value == 0.0) break;
            distance_gradient(space, x, cov.centers[near.index], g);
            const double eta = 0.1 / std::sqrt(static_cast<double>(t));
            for (std::size_t i = 0; i < d; ++i) x[i] += eta * g[i];
            const double nx = norm(space, x);
            for (double& v : x) v /= nx;
        }
    }
    best.margin = cov.radius - best.min_distance;
    return best;
}

std::size_t zero_sum_select(std::span<const double> y) {
    const std::size_t n = y.size();
    if (n < 2) throw std::invalid_argument("zero_sum_select: need at least two coordinates");
    const double norm2 = std::sqrt(simd::dot(y, y));
    if (norm2 == 0.0) throw std::invalid_argument("zero_sum_select: zero vector");
    const double sum = std::accumulate(y.begin(), y.end(), 0.0);
    if (std::fabs(sum) > 1e-10 * norm2) throw std::invalid_argument("zero_sum_select: coordinates must sum to zero");
    const double threshold = norm2 / (2.0 * static_cast<double>(n - 1));
    for (std::size_t k = 0; k < n; ++k) {
        if (y[k] >= threshold) return k;
    }
    throw std::logic_error("zero_sum_select: no coordinate reaches the threshold");
}

SimplexDichotomy simplex_dichotomy(std::span<const double> y) {
    const std::size_t d = y.size();
    if (d == 0) throw std::invalid_argument("simplex_dichotomy: empty vector");
    const double a = 1.0 / (2.0 * static_cast<double>(d));
    const double sq = simd::dot(y, y);
    SimplexDichotomy out;
    for (std::size_t k = 0; k < d; ++k) {
        if (y[k] > a / 2.0 && sq - 2.0 * a * y[k] + a * a < 1.0) {
            out.coordinate_branch = true;
            out.coordinate = k;
            break;
        }
    }
    double last = 0.0;
    for (double v : y) last += (v + a) * (v + a);
    out.last_center_sq = last;
    out.holds = out.coordinate_branch || last <= 1.0 - 1.0 / (4.0 * static_cast<double>(d)) + 1e-12;
    return out;
}

WitnessResult uncovered_witness(const LpSpace& space, const PointSet& centers) {
    if (space.is_infinite()) throw std::invalid_argument("uncovered_witness: requires 1 < p < inf");
    const std::size_t d = space.dim();
    if (centers.size() != d || centers.dim() != d) {
        throw std::invalid_argument("uncovered_witness: need exactly d centers of dimension d");
    }
    const Eigen::Index dd = static_cast<Eigen::Index>(d);

    // Directions x^k - x^1 span the direction space of the affine hull; w
    // annihilates it. The last left singular vector is orthogonal to the
    // column space whatever its rank.
    Eigen::MatrixXd dirs(dd, std::max<Eigen::Index>(dd - 1, 1));
    dirs.setZero();
    for (std::size_t k = 1; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i) dirs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k - 1)) = centers[k][i] - centers[0][i];
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(dirs, Eigen::ComputeFullU);
    const Eigen::VectorXd wv = svd.matrixU().col(dd - 1);

    const double q = space.dual_exponent();
    Vector w(wv.data(), wv.data() + dd);
    const double wq = lq_norm(w, q);
    for (double& v : w) v /= wq;

    // Norming vector of w in X: z_i = sign(w_i) |w_i|^{q-1}, so ||z||_p = 1 and w(z) = 1.
    Vector z(d);
    for (std::size_t i = 0; i < d; ++i) z[i] = std::copysign(std::pow(std::fabs(w[i]), q - 1.0), w[i]);
    const double zn = norm(space, z);
    for (double& v : z) v /= zn;

    // On the hull w(x) = w(x^1); pick the sign of z that moves away from it.
    const double offset = simd::dot(w, centers[0]);
    const double sign = offset <= 0.0 ? 1.0 : -1.0;
    for (double& v : z) v *= sign;

    WitnessResult out;
    out.functional_gap = std::fabs(simd::dot(w, z) - offset);
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d; ++j) nearest = std::min(nearest, distance(space, z, centers[j]));
    out.min_center_distance = nearest;

    if (space.is_euclidean()) {
        const Eigen::VectorXd s = svd.singularValues();
        const double smax = s.size() > 0 ? s(0) : 0.0;
        Eigen::VectorXd rel(dd);
        for (std::size_t i = 0; i < d; ++i) rel(static_cast<Eigen::Index>(i)) = z[i] - centers[0][i];
        Eigen::VectorXd resid = rel;
        for (Eigen::Index k = 0; k < s.size(); ++k) {
            if (d == 1 || s(k) <= 1e-12 * smax || smax == 0.0) continue;
            const Eigen::VectorXd u = svd.matrixU().col(k);
            resid -= u.dot(rel) * u;
        }
        out.hull_distance = resid.norm();
    }
    out.z = std::move(z);
    if (out.min_center_distance < 1.0 - 1e-9) {
        throw std::logic_error("uncovered_witness: numeric witness is within distance 1 of a center");
    }
    return out;
}

LinfVertexReport linf_vertex_check(std::size_t d, std::size_t samples, std::size_t probe_centers,
                                   std::uint64_t seed) {
    if (d == 0) throw std::invalid_argument("linf_vertex_check: dimension must be at least 1");
    if (d > kMaxLinfDim) throw std::out_of_range("linf_vertex_check: d exceeds " + std::to_string(kMaxLinfDim));
    const LpSpace space(d, kInfinity);
    const std::size_t n_vertices = std::size_t{1} << d;
    const auto& k = simd::active();

    PointSet vertices(d, std::vector<double>(n_vertices * d));
    for (std::size_t mask = 0; mask < n_vertices; ++mask) {
        for (std::size_t i = 0; i < d; ++i) vertices[mask][i] = (mask >> i) & 1U ? 1.0 : -1.0;
    }

    LinfVertexReport rep;
    rep.dim = d;
    rep.centers = n_vertices;
    rep.samples = samples;

    // (a) half-vertex centers cover the cube with open radius 1.
    PointSet half = vertices;
    for (std::size_t i = 0; i < half.size() * d; ++i) half.data()[i] *= 0.5;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    if (samples > 0) {
        const PointSet pts = sample_ball(space, samples, split_seed(seed, 0));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double m = 1.0 - k.nearest_chebyshev(half.data(), half.size(), pts[i].data(), d).value;
            rep.worst_margin = std::min(rep.worst_margin, m);
        }
    }
    rep.covering_ok = rep.worst_margin > 0.0;

    // (b) vertices are pairwise 2 apart, so an open radius-1 ball holds at
    // most one of them. All pairs up to 2^12 vertices; beyond that, pairs at
    // Hamming distance one (any other pair differs in a coordinate too).
    double sep = std::numeric_limits<double>::infinity();
    if (n_vertices == 1) sep = 2.0;
    if (d <= 12) {
        for (std::size_t u = 0; u < n_vertices; ++u) {
            for (std::size_t v = u + 1; v < n_vertices; ++v) {
                sep = std::min(sep, k.max_abs_difference(vertices[u].data(), vertices[v].data(), d));
            }
        }
    } else {
        for (std::size_t u = 0; u < n_vertices; ++u) {
            for (std::size_t i = 0; i < d; ++i) {
                const std::size_t v = u ^ (std::size_t{1} << i);
                sep = std::min(sep, k.max_abs_difference(vertices[u].data(), vertices[v].data(), d));
            }
        }
    }
    rep.min_vertex_separation = sep;

    rep.probe_centers = probe_centers;
    std::mt19937_64 rng(split_seed(seed, 1));
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    Vector c(d);
    for (std::size_t t = 0; t < probe_centers; ++t) {
        for (double& v : c) v = coord(rng);
        std::size_t inside = 0;
        for (std::size_t u = 0; u < n_vertices; ++u) {
            if (k.max_abs_difference(vertices[u].data(), c.data(), d) < 1.0) ++inside;
        }
        rep.max_vertices_in_ball = std::max(rep.max_vertices_in_ball, inside);
    }
    rep.lower_bound_ok = sep >= 2.0 && rep.max_vertices_in_ball <= 1;
    return rep;
}

std::pair<Vector, double> find_hole(const Dictionary& dict, const HoleSearch& search, std::uint64_t seed) {
    const LpSpace& space = dict.space();
    if (!space.is_smooth()) throw std::invalid_argument("find_hole: requires 1 < p < inf");
    if (search.restarts == 0 || search.steps == 0) throw std::invalid_argument("find_hole: empty search budget");
    const std::size_t d = space.dim();
    if (dict.size() == 0) {
        const PointSet x = sample_sphere(space, 1, seed);
        return {Vector(x[0].begin(), x[0].end()), 0.0};
    }
    const double q = space.dual_exponent();
    const auto& k = simd::active();
    const double* rows = dict.vectors().data();
    const std::size_t n = dict.size();

    const PointSet starts = sample_sphere(LpSpace(d, q), search.restarts, seed);
    Vector w(d);
    Vector best_w;
    double best = kInfinity;
    for (std::size_t r = 0; r < search.restarts; ++r) {
        std::copy(starts[r].begin(), starts[r].end(), w.begin());
        for (std::size_t t = 1;; ++t) {
            const simd::Extremum e = k.max_abs_dot(rows, n, w.data(), d);
            if (e.value < best) {
                best = e.value;
                best_w = w;
            }
            if (t > search.steps) break;
            const auto g = dict[e.index];
            const double s = k.dot(g.data(), w.data(), d) >= 0.0 ? 1.0 : -1.0;
            const double eta = 0.1 / std::sqrt(static_cast<double>(t));
            for (std::size_t i = 0; i < d; ++i) w[i] -= eta * s * g[i];
            const double wn = lq_norm(w, q);
            for (double& v : w) v /= wn;
        }
    }

    // x is the unit vector normed by best_w.
    Vector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = std::copysign(std::pow(std::fabs(best_w[i]), q - 1.0), best_w[i]);
    const double xn = norm(space, x);
    for (double& v : x) v /= xn;
    const DualVector f = norming_functional(space, x);
    return {std::move(x), k.max_abs_dot(rows, n, f.coords.data(), d).value};
}

MaximalityResult certify_maximality(const Dictionary& dict, double mu, std::size_t n, std::uint64_t seed,
                                    const HoleSearch& search) {
    if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("certify_maximality: mu must lie in (0, 1)");
    if (n == 0) throw std::invalid_argument("certify_maximality: n must be positive");
    MaximalityResult out{false, dict, 0, 0, 0, std::nullopt};
    AdmissionIndex index(dict);

    // Returns false when x cannot be admitted.
    const auto repair = [&](std::span<double> x) {
        if (!index.admissible(x, mu)) {
            out.unrepairable = Vector(x.begin(), x.end());
            return false;
        }
        canonical_sign(x);
        out.dictionary.append(x);
        index.add(x);
        ++out.augmentations;
        return true;
    };

    constexpr std::size_t kMaxSamples = std::size_t{1} << 32;
    std::uint64_t batch = 0;
    std::uint64_t round = 0;
    for (;;) {
        std::size_t clean = 0;
        while (clean < n) {
            PointSet pts = sample_sphere(dict.space(), kSampleBlock, split_seed(seed, batch++));
            for (std::size_t i = 0; i < pts.size() && clean < n; ++i) {
                ++out.samples_drawn;
                auto x = pts[i];
                if (index.forward(x).value > mu) {
                    ++clean;
                    continue;
                }
                if (!repair(x)) return out;
                clean = 0;
            }
            if (out.samples_drawn > kMaxSamples) throw std::runtime_error("certify_maximality: sample budget exhausted");
        }
        if (search.restarts == 0) break;
        auto [hole, value] = find_hole(out.dictionary, search, split_seed(~seed, round++));
        if (value > mu) break;
        ++out.search_counterexamples;
        if (!repair(hole)) return out;
    }
    out.passed = true;
    return out;
}

}  // namespace ballcover
