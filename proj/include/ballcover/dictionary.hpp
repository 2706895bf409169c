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

// Unit-norm dictionaries, their (Banach) coherence, the coherence matrix
// C = W^T Phi, and greedy maximal mu-coherent dictionaries.

#include "ballcover/frames.hpp"
#include "ballcover/lp_space.hpp"
#include "ballcover/simd.hpp"

#include <cstdint>

namespace ballcover {

inline constexpr double kUnitNormTolerance = 1e-12;
inline constexpr double kDuplicateDistance = 1e-9;

class Dictionary {
public:
    explicit Dictionary(LpSpace space) : space_(space), vectors_(space.dim()) {}

    /// Throws std::invalid_argument if a vector is not unit norm (1e-12),
    /// has the wrong dimension, or duplicates another (distance < 1e-9).
    Dictionary(LpSpace space, PointSet vectors);

    const LpSpace& space() const noexcept { return space_; }
    const PointSet& vectors() const noexcept { return vectors_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    std::span<const double> operator[](std::size_t j) const { return vectors_[j]; }

    /// Same checks as the constructor, for one vector.
    void append(std::span<const double> g);

    /// Rows w^j = F_{g^j}. Requires 1 < p < inf.
    PointSet dual_vectors() const;

    /// Candidates drawn by the greedy builder (0 when not built greedily).
    std::size_t admission_trials = 0;

private:
    LpSpace space_;
    PointSet vectors_;
};

Dictionary dictionary_from_frame(const TightFrame& frame);

/// max_{k != l} |<g^k, g^l>|. Requires p = 2 and N >= 2.
double coherence_euclidean(const Dictionary& dict);

/// max over ordered pairs g != h of |F_g(h)|. Requires 1 < p < inf and N >= 2.
double coherence_banach(const Dictionary& dict);

/// coherence_euclidean for p = 2, coherence_banach otherwise.
double coherence(const Dictionary& dict);

/// c_{i,j} = F_{g^i}(g^j), row-major N x N.
struct CoherenceMatrix {
    std::size_t n = 0;
    std::vector<double> entries;

    double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

CoherenceMatrix coherence_matrix(const Dictionary& dict);

/// Descending singular values.
std::vector<double> singular_values(const CoherenceMatrix& c);

/// Count of singular values above rel_tol * sigma_max.
std::size_t numeric_rank(const CoherenceMatrix& c, double rel_tol = 1e-9);

/// Incremental view of a dictionary for admission tests. forward(x) is
/// max_g |F_x(g)|, the quantity coverings need to exceed mu; backward(x) is
/// max_g |F_g(x)|. Both coincide for p = 2.
class AdmissionIndex {
public:
    explicit AdmissionIndex(const LpSpace& space);
    explicit AdmissionIndex(const Dictionary& dict);

    simd::Extremum forward(std::span<const double> x) const;
    simd::Extremum backward(std::span<const double> x) const;
    /// Two-sided: forward and backward both <= mu.
    bool admissible(std::span<const double> x, double mu) const;
    void add(std::span<const double> g);
    std::size_t size() const noexcept { return vectors_.size(); }

private:
    LpSpace space_;
    PointSet vectors_;
    PointSet duals_;
};

/// Flips x so its first nonzero coordinate is positive.
void canonical_sign(std::span<double> x);

inline constexpr std::size_t kDefaultSaturationTrials = 2000;

/// Random-admission construction: sphere candidates (sign-canonicalized) are
/// admitted when two-sided admissible; stops after `saturation_trials`
/// consecutive rejections. Requires mu in (0, 1) and 1 < p < inf.
Dictionary greedy_maximal_dictionary(const LpSpace& space, double mu, std::uint64_t seed,
                                     std::size_t saturation_trials = kDefaultSaturationTrials);

}  // namespace ballcover
