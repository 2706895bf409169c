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

// Explicit coverings of the unit ball.
//
// Wherever the argument behind a construction yields a uniform non-strict
// bound, the covering is emitted with closed balls at exactly that radius.
// The simplex covering by unit balls has no uniform slack and stays open.
//
// Constructions whose argument only handles ||x|| >= 1/2 check at build time
// that radius >= 1/2 + (center norm), which covers the small-norm points
// trivially; violating parameter sets throw std::invalid_argument.

#include "ballcover/ball_covering.hpp"
#include "ballcover/dictionary.hpp"

#include <cstdint>
#include <optional>

namespace ballcover {

/// Centers e^j/(2d), j <= d, and -(1/(2d)) sum e^j; open unit balls in l_2^d.
MarginedCovering simplex_cover_unit(std::size_t d);

/// Same layout with a = 2/(5d+1); closed balls of radius sqrt(1 - a^2).
MarginedCovering simplex_cover_shrunk(std::size_t d);

/// Centers phi^j/(8d) for the Hadamard-derived equiangular frame in R^d;
/// closed balls of radius sqrt(1 - 1/(64 d^2)). Requires d+1 to be a
/// constructible Hadamard order (a power of two).
MarginedCovering etf_cover(std::size_t d);

/// +-mu g^j, closed radius sqrt(1 - mu^2). Requires p = 2 and
/// 0 < mu <= 1/sqrt(2). Coverage relies on the dictionary being maximal for
/// mu, which is certified separately (certify_maximality in verify.hpp).
BallCovering dictionary_cover_l2(const Dictionary& dict, double mu);

/// +-a g^j with a = solve_step_size(majorant, mu), closed radius 1 - mu a/2.
/// Requires 1 < p < inf and radius >= 1/2 + a.
BallCovering dictionary_cover_banach(const Dictionary& dict, double mu, const SmoothnessMajorant& majorant);

/// a = 1/(4 sqrt d); radius of the axis covering, max(1/2 + a, sqrt(1 - 3/(16d))).
double axis_cover_radius(std::size_t d);

/// +-a e^j in l_2^d, closed radius axis_cover_radius(d).
MarginedCovering axis_cover(std::size_t d);

/// mu = 1/(K d), a = solve_step_size(majorant, mu), radius 1 - a mu / 2.
struct BasisCoverParameters {
    double mu;
    double step;
    double radius;
};
BasisCoverParameters basis_cover_parameters(const LpSpace& space, double basis_constant,
                                            const SmoothnessMajorant& majorant);

/// +-a e^j in l_p^d (standard basis, pass K = 1 for the exact constant).
BallCovering basis_cover(const LpSpace& space, double basis_constant, const SmoothnessMajorant& majorant);

/// +-a psi^j for a caller-supplied unit-norm basis with declared constant K,
/// i.e. |x_j| <= K ||x|| for the coefficients of every x.
BallCovering basis_cover(const LpSpace& space, double basis_constant, const SmoothnessMajorant& majorant,
                         const PointSet& basis);

/// Maximum number of centers iterate_cover will produce.
inline constexpr std::size_t kMaxIteratedCenters = 10'000'000;

/// Centers c_{i1} + r c_{i2} + ... + r^{m-1} c_{im}, radius r^m (r^k by
/// repeated multiplication). Requires r < 1 and N^m <= kMaxIteratedCenters.
/// With dedup, centers equal within 1e-12 per coordinate are merged.
BallCovering iterate_cover(const BallCovering& cov, unsigned m, bool dedup = false);

/// Powers of two tried by banach_simplex_search, largest first.
inline constexpr int kSimplexSearchMinExponent = 1;
inline constexpr int kSimplexSearchMaxExponent = 20;

struct SimplexSearchResult {
    std::optional<double> step;            // largest passing a, if any
    std::optional<BallCovering> covering;  // its covering by open unit balls
    int candidates_tried = 0;
};

/// Centers a e^j and -a sum e^j with open unit balls in l_p^d, for a in
/// {1/2, 1/4, ..., 2^-20}; returns the first a whose covering passes sampled
/// certification on `certify_samples` sphere plus `certify_samples` ball
/// points. Requires 1 < p < inf. The existence argument gives no explicit a,
/// so the majorant only labels the provenance.
SimplexSearchResult banach_simplex_search(const LpSpace& space, const SmoothnessMajorant& majorant,
                                          std::size_t certify_samples, std::uint64_t seed);

/// Simplex centers a e^j, j <= d, and -a sum e^j at the given radius.
BallCovering simplex_layout(const LpSpace& space, double a, double radius, bool closed);

}  // namespace ballcover
