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

// Inner-loop kernels with a portable scalar reference and vectorized
// variants. The variant is picked once at startup from the CPU feature set;
// BALLCOVER_SIMD=scalar|avx2 in the environment overrides the choice.
//
// All kernels operate on row-major blocks: `rows` holds n_rows vectors of
// length `dim` back to back.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ballcover::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

// Best value over a block of rows and the (lowest) row index attaining it.
struct Extremum {
    double value = 0.0;
    std::size_t index = 0;
};

struct KernelTable {
    Isa isa;
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*squared_distance)(const double* a, const double* b, std::size_t n);
    double (*max_abs_difference)(const double* a, const double* b, std::size_t n);
    // min_j ||x - row_j||_2^2
    Extremum (*nearest_squared)(const double* rows, std::size_t n_rows, const double* x,
                                std::size_t dim);
    // min_j ||x - row_j||_inf
    Extremum (*nearest_chebyshev)(const double* rows, std::size_t n_rows, const double* x,
                                  std::size_t dim);
    // max_j |<row_j, x>|
    Extremum (*max_abs_dot)(const double* rows, std::size_t n_rows, const double* x,
                            std::size_t dim);
    // sum_k popcount(a_k ^ b_k)
    std::uint64_t (*xor_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n_words);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in.
const KernelTable* avx2_kernels();

bool isa_supported(Isa isa);

// Throws std::invalid_argument when the variant is unavailable on this CPU/build.
const KernelTable& kernels_for(Isa isa);

// The table selected at runtime.
const KernelTable& active();

// Test hook; throws when `isa` is unsupported.
void force_isa(Isa isa);

// Span conveniences over active().

inline double dot(std::span<const double> a, std::span<const double> b) {
    return active().dot(a.data(), b.data(), a.size());
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    return active().squared_distance(a.data(), b.data(), a.size());
}

inline double max_abs_difference(std::span<const double> a, std::span<const double> b) {
    return active().max_abs_difference(a.data(), b.data(), a.size());
}

}  // namespace ballcover::simd
