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

#include "ballcover/dictionary.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace ballcover {
namespace {

void require_smooth(const LpSpace& space, const char* what) {
    if (space.is_infinite()) {
        throw std::invalid_argument(std::string(what) + ": requires 1 < p < inf");
    }
}

void require_pairs(const Dictionary& dict, const char* what) {
    if (dict.size() < 2) throw std::invalid_argument(std::string(what) + ": needs at least two vectors");
}

}  // namespace

Dictionary::Dictionary(LpSpace space, PointSet vectors) : space_(space), vectors_(space.dim()) {
    if (vectors.dim() != space.dim() && !vectors.empty()) {
        throw std::invalid_argument("Dictionary: vector dimension does not match the space");
    }
    vectors_.reserve(vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) append(vectors[j]);
}

void Dictionary::append(std::span<const double> g) {
    space_.require_dim(g);
    const double n = norm(space_, g);
    if (std::fabs(n - 1.0) > kUnitNormTolerance) {
        throw std::invalid_argument("Dictionary: vector " + std::to_string(size()) +
                                    " is not unit norm (norm = " + std::to_string(n) + ")");
    }
    for (std::size_t j = 0; j < size(); ++j) {
        if (distance(space_, vectors_[j], g) < kDuplicateDistance) {
            throw std::invalid_argument("Dictionary: vector duplicates entry " + std::to_string(j));
        }
    }
    vectors_.push_back(g);
}

PointSet Dictionary::dual_vectors() const {
    require_smooth(space_, "dual_vectors");
    PointSet w(space_.dim());
    w.reserve(size());
    for (std::size_t j = 0; j < size(); ++j) w.push_back(norming_functional(space_, vectors_[j]).coords);
    return w;
}

Dictionary dictionary_from_frame(const TightFrame& frame) {
    return Dictionary(LpSpace::euclidean(frame.dim), frame.vectors);
}

double coherence_euclidean(const Dictionary& dict) {
    if (!dict.space().is_euclidean()) throw std::invalid_argument("coherence_euclidean: requires p = 2");
    require_pairs(dict, "coherence_euclidean");
    const auto& k = simd::active();
    const PointSet& v = dict.vectors();
    const std::size_t d = v.dim();
    double worst = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        worst = std::max(worst, k.max_abs_dot(v.data(), i, v[i].data(), d).value);
    }
    return worst;
}

double coherence_banach(const Dictionary& dict) {
    require_smooth(dict.space(), "coherence_banach");
    require_pairs(dict, "coherence_banach");
    const PointSet w = dict.dual_vectors();
    const auto& k = simd::active();
    const PointSet& v = dict.vectors();
    const std::size_t d = v.dim();
    double worst = 0.0;
    // |F_{g^i}(g^j)| over j < i and j > i: both halves of row i.
    for (std::size_t i = 0; i < v.size(); ++i) {
        worst = std::max(worst, k.max_abs_dot(v.data(), i, w[i].data(), d).value);
        const std::size_t rest = v.size() - i - 1;
        if (rest > 0) worst = std::max(worst, k.max_abs_dot(v[i + 1].data(), rest, w[i].data(), d).value);
    }
    return worst;
}

double coherence(const Dictionary& dict) {
    return dict.space().is_euclidean() ? coherence_euclidean(dict) : coherence_banach(dict);
}

CoherenceMatrix coherence_matrix(const Dictionary& dict) {
    require_smooth(dict.space(), "coherence_matrix");
    const PointSet w = dict.dual_vectors();
    const std::size_t n = dict.size();
    CoherenceMatrix c{n, std::vector<double>(n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) c.entries[i * n + j] = simd::dot(w[i], dict[j]);
    }
    return c;
}

std::vector<double> singular_values(const CoherenceMatrix& c) {
    if (c.n == 0) return {};
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        c.entries.data(), static_cast<Eigen::Index>(c.n), static_cast<Eigen::Index>(c.n));
    const Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

std::size_t numeric_rank(const CoherenceMatrix& c, double rel_tol) {
    const std::vector<double> s = singular_values(c);
    if (s.empty() || s.front() == 0.0) return 0;
    std::size_t r = 0;
    for (double v : s) r += v > rel_tol * s.front() ? 1 : 0;
    return r;
}

AdmissionIndex::AdmissionIndex(const LpSpace& space)
    : space_(space), vectors_(space.dim()), duals_(space.dim()) {
    require_smooth(space, "AdmissionIndex");
}

AdmissionIndex::AdmissionIndex(const Dictionary& dict) : AdmissionIndex(dict.space()) {
    for (std::size_t j = 0; j < dict.size(); ++j) add(dict[j]);
}

simd::Extremum AdmissionIndex::forward(std::span<const double> x) const {
    if (vectors_.empty()) return {0.0, 0};
    const std::size_t d = space_.dim();
    if (space_.is_euclidean()) {
        const double nx = norm(space_, x);
        auto e = simd::active().max_abs_dot(vectors_.data(), vectors_.size(), x.data(), d);
        e.value /= nx;
        return e;
    }
    const DualVector fx = norming_functional(space_, x);
    return simd::active().max_abs_dot(vectors_.data(), vectors_.size(), fx.coords.data(), d);
}

simd::Extremum AdmissionIndex::backward(std::span<const double> x) const {
    if (duals_.empty()) return {0.0, 0};
    return simd::active().max_abs_dot(duals_.data(), duals_.size(), x.data(), space_.dim());
}

bool AdmissionIndex::admissible(std::span<const double> x, double mu) const {
    if (forward(x).value > mu) return false;
    return space_.is_euclidean() || backward(x).value <= mu;
}

void AdmissionIndex::add(std::span<const double> g) {
    vectors_.push_back(g);
    duals_.push_back(norming_functional(space_, g).coords);
}

void canonical_sign(std::span<double> x) {
    for (double v : x) {
        if (v == 0.0) continue;
        if (v < 0.0) {
            for (double& t : x) t = -t;
        }
        return;
    }
}

Dictionary greedy_maximal_dictionary(const LpSpace& space, double mu, std::uint64_t seed,
                                     std::size_t saturation_trials) {
    if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("greedy_maximal_dictionary: mu must lie in (0, 1)");
    require_smooth(space, "greedy_maximal_dictionary");
    if (saturation_trials == 0) throw std::invalid_argument("greedy_maximal_dictionary: saturation_trials must be positive");

    // Coherence <= mu < 1 already keeps candidates away from existing vectors,
    // so Dictionary::append's duplicate check never fires here.
    Dictionary dict(space);
    AdmissionIndex index(space);
    std::size_t rejected_in_a_row = 0;
    std::size_t trials = 0;
    constexpr std::size_t kMaxTrials = std::size_t{1} << 30;
    for (std::uint64_t batch = 0; rejected_in_a_row < saturation_trials; ++batch) {
        PointSet candidates = sample_sphere(space, kSampleBlock, split_seed(seed, batch));
        for (std::size_t i = 0; i < candidates.size() && rejected_in_a_row < saturation_trials; ++i) {
            auto x = candidates[i];
            canonical_sign(x);
            ++trials;
            if (index.admissible(x, mu)) {
                dict.append(x);
                index.add(x);
                rejected_in_a_row = 0;
            } else {
                ++rejected_in_a_row;
            }
        }
        if (trials > kMaxTrials) throw std::runtime_error("greedy_maximal_dictionary: trial budget exhausted");
    }
    dict.admission_trials = trials;
    return dict;
}

}  // namespace ballcover
