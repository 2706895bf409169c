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

// AVX2 + FMA kernels. This file must be compiled with -mavx2 -mfma -mpopcnt;
// it is only entered after a runtime CPU check in dispatch.cpp.

#include "ballcover/simd.hpp"

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace ballcover::simd {
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmax(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d m = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        i += 4;
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double squared_distance_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d t0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        const __m256d t1 = _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
        acc0 = _mm256_fmadd_pd(t0, t0, acc0);
        acc1 = _mm256_fmadd_pd(t1, t1, acc1);
    }
    if (i + 4 <= n) {
        const __m256d t0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc0 = _mm256_fmadd_pd(t0, t0, acc0);
        i += 4;
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        const double t = a[i] - b[i];
        s += t * t;
    }
    return s;
}

double max_abs_difference_avx2(const double* a, const double* b, std::size_t n) {
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        m = _mm256_max_pd(m, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i))));
    }
    double r = hmax(m);
    for (; i < n; ++i) r = std::fmax(r, std::fabs(a[i] - b[i]));
    return r;
}

// Small dimensions: four rows per step, one lane per row, rows gathered
// coordinate by coordinate. Per-row accumulation stays sequential in k.
template <class Reduce>
Extremum rows_by_four(const double* rows, std::size_t n_rows, const double* x, std::size_t dim,
                      Reduce reduce, bool minimize) {
    Extremum best{minimize ? std::numeric_limits<double>::infinity() : -1.0, 0};
    std::size_t j = 0;
    const __m256i stride = _mm256_set_epi64x(3 * static_cast<long long>(dim),
                                             2 * static_cast<long long>(dim),
                                             static_cast<long long>(dim), 0);
    alignas(32) double lanes[4];
    for (; j + 4 <= n_rows; j += 4) {
        const double* base = rows + j * dim;
        __m256d acc = reduce.init();
        for (std::size_t k = 0; k < dim; ++k) {
            const __m256d r = _mm256_i64gather_pd(base + k, stride, 8);
            acc = reduce.step(acc, r, _mm256_set1_pd(x[k]));
        }
        _mm256_store_pd(lanes, reduce.finish(acc));
        for (int l = 0; l < 4; ++l) {
            const double v = lanes[l];
            if (minimize ? v < best.value : v > best.value) best = {v, j + static_cast<std::size_t>(l)};
        }
    }
    for (; j < n_rows; ++j) {
        const double v = reduce.single(rows + j * dim, x, dim);
        if (minimize ? v < best.value : v > best.value) best = {v, j};
    }
    return best;
}

struct SquaredReduce {
    __m256d init() const { return _mm256_setzero_pd(); }
    __m256d step(__m256d acc, __m256d r, __m256d xv) const {
        const __m256d t = _mm256_sub_pd(r, xv);
        return _mm256_fmadd_pd(t, t, acc);
    }
    __m256d finish(__m256d acc) const { return acc; }
    double single(const double* r, const double* x, std::size_t n) const {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s = std::fma(r[i] - x[i], r[i] - x[i], s);
        return s;
    }
};

struct ChebyshevReduce {
    __m256d init() const { return _mm256_setzero_pd(); }
    __m256d step(__m256d acc, __m256d r, __m256d xv) const {
        return _mm256_max_pd(acc, abs_pd(_mm256_sub_pd(r, xv)));
    }
    __m256d finish(__m256d acc) const { return acc; }
    double single(const double* r, const double* x, std::size_t n) const {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(r[i] - x[i]));
        return m;
    }
};

struct AbsDotReduce {
    __m256d init() const { return _mm256_setzero_pd(); }
    __m256d step(__m256d acc, __m256d r, __m256d xv) const { return _mm256_fmadd_pd(r, xv, acc); }
    __m256d finish(__m256d acc) const { return abs_pd(acc); }
    double single(const double* r, const double* x, std::size_t n) const {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s = std::fma(r[i], x[i], s);
        return std::fabs(s);
    }
};

constexpr std::size_t kWideRow = 8;

Extremum nearest_squared_avx2(const double* rows, std::size_t n_rows, const double* x,
                              std::size_t dim) {
    if (dim < kWideRow) return rows_by_four(rows, n_rows, x, dim, SquaredReduce{}, true);
    Extremum best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t j = 0; j < n_rows; ++j) {
        const double v = squared_distance_avx2(rows + j * dim, x, dim);
        if (v < best.value) best = {v, j};
    }
    return best;
}

Extremum nearest_chebyshev_avx2(const double* rows, std::size_t n_rows, const double* x,
                                std::size_t dim) {
    if (dim < kWideRow) return rows_by_four(rows, n_rows, x, dim, ChebyshevReduce{}, true);
    Extremum best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t j = 0; j < n_rows; ++j) {
        const double v = max_abs_difference_avx2(rows + j * dim, x, dim);
        if (v < best.value) best = {v, j};
    }
    return best;
}

Extremum max_abs_dot_avx2(const double* rows, std::size_t n_rows, const double* x,
                          std::size_t dim) {
    if (n_rows == 0) return {0.0, 0};
    if (dim < kWideRow) return rows_by_four(rows, n_rows, x, dim, AbsDotReduce{}, false);
    Extremum best{-1.0, 0};
    for (std::size_t j = 0; j < n_rows; ++j) {
        const double v = std::fabs(dot_avx2(rows + j * dim, x, dim));
        if (v > best.value) best = {v, j};
    }
    return best;
}

std::uint64_t xor_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n_words) {
    std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    std::size_t k = 0;
    for (; k + 4 <= n_words; k += 4) {
        s0 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[k] ^ b[k]));
        s1 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[k + 1] ^ b[k + 1]));
        s2 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[k + 2] ^ b[k + 2]));
        s3 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[k + 3] ^ b[k + 3]));
    }
    for (; k < n_words; ++k) s0 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[k] ^ b[k]));
    return s0 + s1 + s2 + s3;
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{
        Isa::avx2,
        dot_avx2,
        squared_distance_avx2,
        max_abs_difference_avx2,
        nearest_squared_avx2,
        nearest_chebyshev_avx2,
        max_abs_dot_avx2,
        xor_popcount_avx2,
    };
    return &table;
}

}  // namespace ballcover::simd
