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

// Reference kernels. Plain loops, no reassociation; these define the
// semantics the vectorized variants are tested against.

#include "ballcover/simd.hpp"

#include <bit>
#include <cmath>
#include <limits>

namespace ballcover::simd {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double squared_distance_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = a[i] - b[i];
        s += t * t;
    }
    return s;
}

double max_abs_difference_scalar(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
    return m;
}

Extremum nearest_squared_scalar(const double* rows, std::size_t n_rows, const double* x,
                                std::size_t dim) {
    Extremum best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t j = 0; j < n_rows; ++j) {
        const double v = squared_distance_scalar(rows + j * dim, x, dim);
        if (v < best.value) best = {v, j};
    }
    return best;
}

Extremum nearest_chebyshev_scalar(const double* rows, std::size_t n_rows, const double* x,
                                  std::size_t dim) {
    Extremum best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t j = 0; j < n_rows; ++j) {
        const double v = max_abs_difference_scalar(rows + j * dim, x, dim);
        if (v < best.value) best = {v, j};
    }
    return best;
}

Extremum max_abs_dot_scalar(const double* rows, std::size_t n_rows, const double* x,
                            std::size_t dim) {
    Extremum best{-1.0, 0};
    for (std::size_t j = 0; j < n_rows; ++j) {
        const double v = std::fabs(dot_scalar(rows + j * dim, x, dim));
        if (v > best.value) best = {v, j};
    }
    if (n_rows == 0) best.value = 0.0;
    return best;
}

std::uint64_t xor_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n_words) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < n_words; ++k) s += static_cast<std::uint64_t>(std::popcount(a[k] ^ b[k]));
    return s;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        Isa::scalar,
        dot_scalar,
        squared_distance_scalar,
        max_abs_difference_scalar,
        nearest_squared_scalar,
        nearest_chebyshev_scalar,
        max_abs_dot_scalar,
        xor_popcount_scalar,
    };
    return table;
}

}  // namespace ballcover::simd
