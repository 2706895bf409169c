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


#include "ballcover/hadamard.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ballcover;

namespace {

std::vector<int> as_ints(const HadamardMatrix& h) { return {h.entries().begin(), h.entries().end()}; }

bool gram_is_scaled_identity(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    const auto g = oracle::integer_gram(n, as_ints(h));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (g[i * n + j] != (i == j ? static_cast<std::int64_t>(n) : 0)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("small sylvester matrices") {
    CHECK(as_ints(sylvester(0)) == std::vector<int>{1});
    CHECK(as_ints(sylvester(1)) == std::vector<int>{1, 1, 1, -1});
    const HadamardMatrix h8 = sylvester(3);
    CHECK(h8.order() == 8);
    CHECK(gram_is_scaled_identity(h8));
    CHECK(h8.first_row_all_ones());
}

TEST_CASE("sylvester matrices are Hadamard up to k = 12") {
    for (unsigned k = 0; k <= 12; ++k) {
        const HadamardMatrix h = sylvester(k);
        CHECK(h.order() == (std::size_t{1} << k));
        CHECK(h.first_row_all_ones());
        if (k <= 9) {
            CHECK(verify_hadamard(h.order(), as_ints(h)));
        } else {
            // full check is cubic; sample row pairs instead
            std::mt19937_64 rng(k);
            const std::size_t n = h.order();
            bool ok = true;
            for (int t = 0; t < 200 && ok; ++t) {
                const std::size_t a = rng() % n;
                const std::size_t b = rng() % n;
                long long s = 0;
                for (std::size_t c = 0; c < n; ++c) s += h(a, c) * h(b, c);
                ok = s == (a == b ? static_cast<long long>(n) : 0);
            }
            CHECK(ok);
            CHECK(kronecker(sylvester(1), sylvester(k - 1)) == h);
        }
        if (k <= 7) CHECK(gram_is_scaled_identity(h));
    }
    CHECK_THROWS_AS(sylvester(kMaxSylvesterPower + 1), std::out_of_range);
}

TEST_CASE("kronecker products") {
    CHECK(kronecker(sylvester(1), sylvester(1)) == sylvester(2));
    CHECK(kronecker(sylvester(0), sylvester(3)) == sylvester(3));
    const HadamardMatrix h = kronecker(sylvester(1), sylvester(2));
    CHECK(h.order() == 8);
    CHECK(gram_is_scaled_identity(h));
    for (unsigned a = 0; a <= 4; ++a) {
        for (unsigned b = 0; b <= 4; ++b) {
            const HadamardMatrix kab = kronecker(sylvester(a), sylvester(b));
            CHECK(kab.order() == (std::size_t{1} << (a + b)));
            CHECK(verify_hadamard(kab.order(), as_ints(kab)));
        }
    }
    CHECK_THROWS_AS(kronecker(sylvester(8), sylvester(7)), std::out_of_range);
}

TEST_CASE("first-row normalization") {
    CHECK(normalize_first_row(sylvester(2)) == sylvester(2));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::int8_t> e = sylvester(3).entries();
        for (std::size_t c = 0; c < 8; ++c) {
            if (rng() & 1U) {
                for (std::size_t r = 0; r < 8; ++r) e[r * 8 + c] = static_cast<std::int8_t>(-e[r * 8 + c]);
            }
        }
        const HadamardMatrix flipped(8, e);
        const HadamardMatrix n = normalize_first_row(flipped);
        CHECK(n.first_row_all_ones());
        CHECK(gram_is_scaled_identity(n));
    }

    std::vector<std::int8_t> one = sylvester(2).entries();
    for (std::size_t r = 0; r < 4; ++r) one[r * 4 + 1] = static_cast<std::int8_t>(-one[r * 4 + 1]);
    CHECK(normalize_first_row(HadamardMatrix(4, one)) == sylvester(2));
}

TEST_CASE("verify_hadamard rejects non-Hadamard input") {
    CHECK(verify_hadamard(4, as_ints(sylvester(2))));
    CHECK_FALSE(verify_hadamard(2, std::vector<int>{1, 1, 1, 1}));
    CHECK_FALSE(verify_hadamard(12, std::vector<int>(144, 1)));
    CHECK_FALSE(verify_hadamard(2, std::vector<int>{1, 2, 1, -1}));
    CHECK_FALSE(verify_hadamard(2, std::vector<int>{1, 0, 0, 1}));
    CHECK_THROWS_AS(verify_hadamard(3, std::vector<int>{1, 1, 1, 1}), std::invalid_argument);
    CHECK(verify_hadamard({{1, 1}, {1, -1}}));
    CHECK_FALSE(verify_hadamard({{1, 1}, {1, 1}}));
    CHECK_THROWS_AS(verify_hadamard({{1, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(HadamardMatrix(2, std::vector<std::int8_t>{1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("signed permutations preserve the Hadamard property") {
    std::mt19937_64 rng(9);
    const HadamardMatrix base = sylvester(4);
    const std::size_t n = base.order();
    for (int t = 0; t < 50; ++t) {
        std::vector<std::size_t> rp(n), cp(n);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        std::vector<int> rs(n), cs(n);
        for (int& s : rs) s = (rng() & 1U) ? 1 : -1;
        for (int& s : cs) s = (rng() & 1U) ? 1 : -1;
        std::vector<int> m(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = rs[i] * cs[j] * base(rp[i], cp[j]);
        }
        CHECK(verify_hadamard(n, m));
    }
}

TEST_CASE("order availability") {
    CHECK(hadamard_order_admissible(1));
    CHECK(hadamard_order_admissible(2));
    CHECK(hadamard_order_admissible(12));
    CHECK_FALSE(hadamard_order_admissible(7));
    CHECK_FALSE(hadamard_order_admissible(6));
    CHECK_FALSE(hadamard_order_admissible(0));
    CHECK(hadamard_order_available(16));
    CHECK_FALSE(hadamard_order_available(12));
    CHECK_FALSE(hadamard_order_available(2 * kMaxHadamardOrder));
    CHECK(hadamard_of_order(8) == sylvester(3));
    CHECK_THROWS_AS(hadamard_of_order(7), std::invalid_argument);
    CHECK_THROWS_AS(hadamard_of_order(12), std::invalid_argument);
}
