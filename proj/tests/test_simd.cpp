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


#include "ballcover/simd.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace ballcover;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<double> v(n);
    for (double& x : v) x = g(rng);
    return v;
}

// Relative agreement for reductions whose summation order differs.
void check_close(double a, double b, double scale) { CHECK(std::fabs(a - b) <= 1e-13 * std::max(1.0, scale)); }

}  // namespace

TEST_CASE("scalar kernel reference values") {
    const auto& k = simd::scalar_kernels();
    const std::vector<double> a{1, 2, 3};
    const std::vector<double> b{4, -5, 6};
    CHECK(k.dot(a.data(), b.data(), 3) == 12.0);
    CHECK(k.squared_distance(a.data(), b.data(), 3) == 9.0 + 49.0 + 9.0);
    CHECK(k.max_abs_difference(a.data(), b.data(), 3) == 7.0);

    const std::vector<double> rows{0, 0, 1, 1, 1, 1};  // three points in R^2, rows 1 and 2 tie
    const std::vector<double> x{1, 1};
    const auto near = k.nearest_squared(rows.data(), 3, x.data(), 2);
    CHECK(near.value == 0.0);
    CHECK(near.index == 1);
    const auto cheb = k.nearest_chebyshev(rows.data(), 3, x.data(), 2);
    CHECK(cheb.index == 1);
    const auto dotmax = k.max_abs_dot(rows.data(), 3, x.data(), 2);
    CHECK(dotmax.value == 2.0);
    CHECK(dotmax.index == 1);

    const std::vector<std::uint64_t> u{0xFFu, 0x0u};
    const std::vector<std::uint64_t> v{0x0Fu, 0x1u};
    CHECK(k.xor_popcount(u.data(), v.data(), 2) == 5);
}

TEST_CASE("every supported variant matches the scalar reference") {
    const auto& ref = simd::scalar_kernels();
    for (simd::Isa isa : {simd::Isa::scalar, simd::Isa::avx2}) {
        if (!simd::isa_supported(isa)) continue;
        const auto& k = simd::kernels_for(isa);
        CAPTURE(simd::isa_name(isa));
        std::mt19937_64 rng(17);
        for (std::size_t dim : {1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 65}) {
            for (std::size_t n_rows : {1, 2, 3, 4, 5, 7, 8, 33}) {
                const auto rows = random_vector(rng, dim * n_rows);
                const auto x = random_vector(rng, dim);
                const auto y = random_vector(rng, dim);
                check_close(k.dot(x.data(), y.data(), dim), ref.dot(x.data(), y.data(), dim), dim);
                check_close(k.squared_distance(x.data(), y.data(), dim), ref.squared_distance(x.data(), y.data(), dim),
                            dim);
                CHECK(k.max_abs_difference(x.data(), y.data(), dim) == ref.max_abs_difference(x.data(), y.data(), dim));

                const auto a = k.nearest_squared(rows.data(), n_rows, x.data(), dim);
                const auto b = ref.nearest_squared(rows.data(), n_rows, x.data(), dim);
                check_close(a.value, b.value, dim);
                CHECK(a.index == b.index);
                const auto c = k.nearest_chebyshev(rows.data(), n_rows, x.data(), dim);
                const auto e = ref.nearest_chebyshev(rows.data(), n_rows, x.data(), dim);
                CHECK(c.value == e.value);
                CHECK(c.index == e.index);
                const auto f = k.max_abs_dot(rows.data(), n_rows, x.data(), dim);
                const auto g = ref.max_abs_dot(rows.data(), n_rows, x.data(), dim);
                check_close(f.value, g.value, dim);
                CHECK(f.index == g.index);
            }
        }
        for (std::size_t words : {0, 1, 3, 4, 5, 17, 64}) {
            std::vector<std::uint64_t> u(words), v(words);
            for (auto& w : u) w = rng();
            for (auto& w : v) w = rng();
            CHECK(k.xor_popcount(u.data(), v.data(), words) == ref.xor_popcount(u.data(), v.data(), words));
        }
    }
}

TEST_CASE("ties resolve to the lowest index in every variant") {
    for (simd::Isa isa : {simd::Isa::scalar, simd::Isa::avx2}) {
        if (!simd::isa_supported(isa)) continue;
        const auto& k = simd::kernels_for(isa);
        for (std::size_t dim : {1, 3, 8, 12}) {
            std::vector<double> rows(9 * dim, 0.0);
            for (std::size_t j = 0; j < 9; ++j) rows[j * dim] = j % 3 == 2 ? 1.0 : 5.0;
            std::vector<double> x(dim, 0.0);
            x[0] = 1.0;
            CHECK(k.nearest_squared(rows.data(), 9, x.data(), dim).index == 2);
            CHECK(k.nearest_chebyshev(rows.data(), 9, x.data(), dim).index == 2);
            CHECK(k.max_abs_dot(rows.data(), 9, x.data(), dim).index == 0);
        }
    }
}

TEST_CASE("dispatch") {
    CHECK(simd::isa_supported(simd::Isa::scalar));
    CHECK(simd::isa_name(simd::Isa::scalar) == "scalar");
    const simd::Isa before = simd::active().isa;
    simd::force_isa(simd::Isa::scalar);
    CHECK(simd::active().isa == simd::Isa::scalar);
    if (simd::isa_supported(simd::Isa::avx2)) {
        simd::force_isa(simd::Isa::avx2);
        CHECK(simd::active().isa == simd::Isa::avx2);
    } else {
        CHECK_THROWS(simd::kernels_for(simd::Isa::avx2));
    }
    simd::force_isa(before);
}
