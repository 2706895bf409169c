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

// Empirical certification of coverings, the zero-sum coordinate selector,
// the uncovered-point witness for any d unit balls, the l_inf cube-vertex
// argument, and maximality certification of dictionaries.

#include "ballcover/ball_covering.hpp"
#include "ballcover/dictionary.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>

namespace ballcover {

/// Additive slack when judging closed balls.
inline constexpr double kCoverTolerance = 1e-12;

/// Nearest center: `value` is the distance, `index` the lowest index at it.
simd::Extremum nearest_center(const BallCovering& cov, std::span<const double> x);

/// radius - min_j ||x - c_j||_p; positive means strictly inside some ball.
double check_point(const BallCovering& cov, std::span<const double> x);

/// Whether a margin is acceptable for the covering: > 0 for open balls,
/// >= -kCoverTolerance for closed ones.
bool margin_passes(const BallCovering& cov, double margin);

struct CoverageReport {
    std::size_t samples_tested = 0;
    double worst_margin = 0.0;
    std::optional<Vector> failure_witness;  // first failing sample
    std::uint64_t seed = 0;
    std::chrono::nanoseconds elapsed{0};
    bool passed = false;
};

/// Checks n_ball uniform ball points (stream 0 of seed) and n_sphere sphere
/// points (stream 1). Throws std::invalid_argument if both counts are 0.
CoverageReport certify_sampling(const BallCovering& cov, std::size_t n_ball, std::size_t n_sphere,
                                std::uint64_t seed);

struct AdversarialResult {
    Vector point;             // unit sphere point with the largest min distance found
    double min_distance = 0;  // min_j ||point - c_j||
    double margin = 0;        // radius - min_distance
};

/// Projected subgradient ascent of x -> min_j ||x - c_j|| on the unit sphere,
/// from `restarts` random starts with `steps` steps of size 0.1/sqrt(t) each.
AdversarialResult adversarial_search(const BallCovering& cov, std::size_t restarts, std::size_t steps,
                                     std::uint64_t seed);

/// Smallest index k with y_k >= ||y||_2 / (2(N-1)). Requires N >= 2, y != 0
/// and |sum y| <= 1e-10 ||y||_2; throws std::invalid_argument otherwise.
std::size_t zero_sum_select(std::span<const double> y);

/// Outcome of the simplex-covering dichotomy for one point y of B_2.
struct SimplexDichotomy {
    bool coordinate_branch = false;  // some y_k > a/2 and ||y - x^k|| < 1
    std::size_t coordinate = 0;      // that k (0-based) when coordinate_branch
    double last_center_sq = 0.0;     // ||y - x^{d+1}||^2
    bool holds = false;              // coordinate_branch or last_center_sq <= 1 - 1/(4d) + 1e-12
};

SimplexDichotomy simplex_dichotomy(std::span<const double> y);

struct WitnessResult {
    Vector z;                                 // ||z||_p = 1
    double min_center_distance = 0.0;         // min_j ||z - x^j||_p
    double functional_gap = 0.0;              // |w(z - x^1)| >= 1, a lower bound on the distance to the affine hull
    std::optional<double> hull_distance;      // Euclidean distance to the affine hull (p = 2 only)
};

/// A unit vector at distance >= 1 from every point of the affine hull of
/// exactly d centers in l_p^d, so no d open unit balls cover the ball.
/// Requires 1 < p < inf; throws std::logic_error if the numeric result
/// misses the 1 - 1e-9 distance bound.
WitnessResult uncovered_witness(const LpSpace& space, const PointSet& centers);

struct LinfVertexReport {
    std::size_t dim = 0;
    std::size_t centers = 0;              // 2^d half-vertex centers
    std::size_t samples = 0;
    double worst_margin = 0.0;            // min over samples of 1 - min_j ||x - c_j||_inf
    bool covering_ok = false;             // worst_margin > 0
    double min_vertex_separation = 0.0;   // min over vertex pairs of ||u - v||_inf
    std::size_t probe_centers = 0;
    std::size_t max_vertices_in_ball = 0; // over probe centers, vertices at distance < 1
    bool lower_bound_ok = false;          // separation >= 2 and max_vertices_in_ball <= 1
};

inline constexpr std::size_t kMaxLinfDim = 20;

/// Both halves of N(d, l_inf) = 2^d at desk scale. Throws std::out_of_range
/// for d > kMaxLinfDim.
LinfVertexReport linf_vertex_check(std::size_t d, std::size_t samples, std::size_t probe_centers,
                                   std::uint64_t seed);

struct MaximalityResult {
    bool passed = false;
    Dictionary dictionary;            // possibly augmented
    std::size_t augmentations = 0;
    std::size_t samples_drawn = 0;
    std::size_t search_counterexamples = 0;  // counterexamples found by the descent phase
    std::optional<Vector> unrepairable;  // counterexample that is not two-sided admissible
};

/// Descent phase of certify_maximality: projected subgradient descent of
/// x -> max_g |F_x(g)| from `restarts` random starts, `steps` steps each.
/// Zero restarts disables it.
struct HoleSearch {
    std::size_t restarts = 256;
    std::size_t steps = 300;
};

/// Draws sphere points until n consecutive ones have max_g |F_x(g)| > mu,
/// then runs the descent phase; a pass requires both to find nothing. Each
/// counterexample is admitted (sign-canonicalized) and the count restarts; a
/// counterexample that is not two-sided admissible ends the run with
/// passed = false and `unrepairable` set.
MaximalityResult certify_maximality(const Dictionary& dict, double mu, std::size_t n, std::uint64_t seed,
                                    const HoleSearch& search = {});

/// Unit vector with the smallest max_g |F_x(g)| found by the descent phase,
/// and that value. Descends on w = F_x over the dual sphere, where the
/// objective is max_g |<w, g>|. Requires 1 < p < inf and restarts, steps > 0.
std::pair<Vector, double> find_hole(const Dictionary& dict, const HoleSearch& search, std::uint64_t seed);

}  // namespace ballcover
