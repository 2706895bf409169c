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

#include "ballcover/simd.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ballcover {
namespace {

// Exact orthogonality check. Column j is packed into bits (1 for -1), so
// <h_i, h_j> = n - 2 * popcount(h_i xor h_j); orthogonal iff popcount = n/2.
template <class Entry>
bool columns_orthogonal(std::size_t n, const Entry* entries) {
    if (n == 1) return true;
    if (n % 2 != 0) return false;
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> packed(n * words, 0);
    for (std::size_t r = 0; r < n; ++r) {
        const Entry* row = entries + r * n;
        const std::uint64_t bit = std::uint64_t{1} << (r % 64);
        const std::size_t w = r / 64;
        for (std::size_t c = 0; c < n; ++c) {
            if (row[c] < 0) packed[c * words + w] |= bit;
        }
    }
    const auto& k = simd::active();
    const std::uint64_t half = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t* ci = packed.data() + i * words;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (k.xor_popcount(ci, packed.data() + j * words, words) != half) return false;
        }
    }
    return true;
}

template <class Entry>
bool entries_are_signs(std::span<const Entry> e) {
    return std::all_of(e.begin(), e.end(), [](Entry v) { return v == 1 || v == -1; });
}

}  // namespace

HadamardMatrix::HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries, Trusted)
    : order_(order), entries_(std::move(entries)) {}

HadamardMatrix::HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ == 0 || entries_.size() != order_ * order_) {
        throw std::invalid_argument("HadamardMatrix: entry count does not match order");
    }
    if (!entries_are_signs(std::span<const std::int8_t>(entries_)) ||
        !columns_orthogonal(order_, entries_.data())) {
        throw std::invalid_argument("HadamardMatrix: entries do not form a Hadamard matrix");
    }
}

bool HadamardMatrix::first_row_all_ones() const {
    return std::all_of(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(order_),
                       [](std::int8_t v) { return v == 1; });
}

HadamardMatrix sylvester(unsigned k) {
    if (k > kMaxSylvesterPower) {
        throw std::out_of_range("sylvester: k = " + std::to_string(k) + " exceeds the size guard " +
                                std::to_string(kMaxSylvesterPower));
    }
    std::vector<std::int8_t> h{1};
    std::size_t n = 1;
    for (unsigned step = 0; step < k; ++step) {
        const std::size_t m = 2 * n;
        std::vector<std::int8_t> next(m * m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::int8_t v = h[i * n + j];
                next[i * m + j] = v;
                next[i * m + j + n] = v;
                next[(i + n) * m + j] = v;
                next[(i + n) * m + j + n] = static_cast<std::int8_t>(-v);
            }
        }
        h = std::move(next);
        n = m;
    }
    return HadamardMatrix(n, std::move(h), HadamardMatrix::Trusted{});
}

HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b) {
    const std::size_t m = a.order();
    const std::size_t n = b.order();
    if (m > kMaxHadamardOrder / n) {
        throw std::out_of_range("kronecker: order " + std::to_string(m) + "*" + std::to_string(n) +
                                " exceeds the size guard");
    }
    const std::size_t mn = m * n;
    std::vector<std::int8_t> out(mn * mn);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const int aij = a(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                std::int8_t* dst = out.data() + (i * n + k) * mn + j * n;
                for (std::size_t l = 0; l < n; ++l) dst[l] = static_cast<std::int8_t>(aij * b(k, l));
            }
        }
    }
    // Orthogonality is inherited; the public constructor re-checks it anyway.
    return HadamardMatrix(mn, std::move(out));
}

HadamardMatrix normalize_first_row(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    std::vector<std::int8_t> e = h.entries();
    for (std::size_t c = 0; c < n; ++c) {
        if (e[c] > 0) continue;
        for (std::size_t r = 0; r < n; ++r) e[r * n + c] = static_cast<std::int8_t>(-e[r * n + c]);
    }
    return HadamardMatrix(n, std::move(e), HadamardMatrix::Trusted{});
}

bool verify_hadamard(std::size_t n, std::span<const int> entries) {
    if (n == 0 || entries.size() != n * n) {
        throw std::invalid_argument("verify_hadamard: matrix must be square and non-empty");
    }
    return entries_are_signs(entries) && columns_orthogonal(n, entries.data());
}

bool verify_hadamard(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    std::vector<int> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("verify_hadamard: matrix must be square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return verify_hadamard(n, flat);
}

bool hadamard_order_available(std::size_t order) {
    return order >= 1 && order <= kMaxHadamardOrder && std::has_single_bit(order);
}

bool hadamard_order_admissible(std::size_t order) {
    return order == 1 || order == 2 || (order > 0 && order % 4 == 0);
}

HadamardMatrix hadamard_of_order(std::size_t order) {
    if (!hadamard_order_admissible(order)) {
        throw std::invalid_argument("no Hadamard matrix of order " + std::to_string(order) +
                                    " exists (order must be 1, 2 or a multiple of 4)");
    }
    if (!hadamard_order_available(order)) {
        throw std::invalid_argument("order " + std::to_string(order) +
                                    " is not constructible here (Sylvester/Kronecker give powers of two up to " +
                                    std::to_string(kMaxHadamardOrder) + ")");
    }
    return sylvester(static_cast<unsigned>(std::countr_zero(order)));
}

}  // namespace ballcover
