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


#include "ballcover/frames.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ballcover;

namespace {

// Gram entries recomputed in long double straight from the column vectors.
long double worst_gram_error(const TightFrame& f) {
    const std::size_t n = f.vectors.size();
    const long double off = -1.0L / static_cast<long double>(f.dim);
    long double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long double s = 0;
            for (std::size_t k = 0; k < f.dim; ++k) s += static_cast<long double>(f.vectors[i][k]) * f.vectors[j][k];
            worst = std::max(worst, std::fabs(s - (i == j ? 1.0L : off)));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("order-2 frame is {+1, -1}") {
    const TightFrame f = etf_from_hadamard(sylvester(1));
    CHECK(f.dim == 1);
    REQUIRE(f.vectors.size() == 2);
    CHECK(f.vectors[0][0] * f.vectors[1][0] == doctest::Approx(-1.0));
}

TEST_CASE("frame Gram matrices") {
    for (unsigned k = 1; k <= 8; ++k) {
        const TightFrame f = etf_from_hadamard(sylvester(k));
        const std::size_t m = std::size_t{1} << k;
        CHECK(f.dim == m - 1);
        CHECK(f.vectors.size() == m);
        CHECK(worst_gram_error(f) <= 1e-12L);
        const std::vector<double> g = gram_matrix(f);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const double want = i == j ? 1.0 : -1.0 / static_cast<double>(f.dim);
                CHECK(std::fabs(g[i * m + j] - want) <= 1e-12);
            }
        }
    }
}

TEST_CASE("frame identities hold on random vectors") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (unsigned k = 1; k <= 8; ++k) {
        const TightFrame f = etf_from_hadamard(sylvester(k));
        for (int t = 0; t < 100; ++t) {
            std::vector<double> x(f.dim);
            for (double& v : x) v = g(rng);
            const FrameResiduals r = verify_frame_identities(f, x);
            CHECK(r.reconstruction <= 1e-10);
            CHECK(r.vanishing_sum <= 1e-10);
            CHECK(r.parseval <= 1e-10);
        }
    }
}

TEST_CASE("frame identity examples") {
    const TightFrame f = etf_from_hadamard(sylvester(2));
    CHECK(verify_frame_identities(f, std::vector<double>{1, 0, 0}).worst() <= 1e-10);
    const FrameResiduals zero = verify_frame_identities(f, std::vector<double>{0, 0, 0});
    CHECK(zero.reconstruction == 0.0);
    CHECK(zero.parseval == 0.0);
    CHECK(zero.vanishing_sum <= 1e-12);
    CHECK_THROWS_AS(verify_frame_identities(f, std::vector<double>{1, 0}), std::invalid_argument);

    TightFrame broken = f;
    for (double& v : broken.vectors[0]) v *= 1.1;
    const FrameResiduals r = verify_frame_identities(broken, std::vector<double>{0.3, -0.2, 0.9});
    CHECK(r.reconstruction > 1e-3);
}

TEST_CASE("frames need a normalized Hadamard matrix") {
    std::vector<std::int8_t> e = sylvester(2).entries();
    for (std::size_t r = 0; r < 4; ++r) e[r * 4 + 2] = static_cast<std::int8_t>(-e[r * 4 + 2]);
    const HadamardMatrix h(4, e);
    CHECK_THROWS_AS(etf_from_hadamard(h), std::invalid_argument);
    CHECK_NOTHROW(etf_from_hadamard(normalize_first_row(h)));
    CHECK_THROWS_AS(etf_from_hadamard(sylvester(0)), std::invalid_argument);
}
