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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ballcover {

/// Largest Sylvester exponent accepted; order 2^14 already needs 256 MiB.
inline constexpr unsigned kMaxSylvesterPower = 14;
inline constexpr std::size_t kMaxHadamardOrder = std::size_t{1} << kMaxSylvesterPower;

/// n x n matrix of +-1 with H^T H = n I, stored row-major. Every instance
/// has passed verify_hadamard.
class HadamardMatrix {
public:
    /// Throws std::invalid_argument unless the entries form a Hadamard matrix.
    HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries);

    std::size_t order() const noexcept { return order_; }
    int operator()(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }
    const std::vector<std::int8_t>& entries() const noexcept { return entries_; }
    bool first_row_all_ones() const;

    bool operator==(const HadamardMatrix&) const = default;

private:
    struct Trusted {};
    HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries, Trusted);

    friend HadamardMatrix sylvester(unsigned k);
    friend HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b);
    friend HadamardMatrix normalize_first_row(const HadamardMatrix& h);

    std::size_t order_;
    std::vector<std::int8_t> entries_;
};

/// H_1 = [1], H_{2n} = [[H_n, H_n], [H_n, -H_n]], order 2^k.
/// Throws std::out_of_range for k > kMaxSylvesterPower.
HadamardMatrix sylvester(unsigned k);

/// A (x) B, order m*n. Throws std::out_of_range past kMaxHadamardOrder.
HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b);

/// Negates every column whose first entry is -1.
HadamardMatrix normalize_first_row(const HadamardMatrix& h);

/// True iff every entry is +-1 and M^T M = n I exactly. Throws
/// std::invalid_argument when entries.size() != n*n.
bool verify_hadamard(std::size_t n, std::span<const int> entries);
bool verify_hadamard(const std::vector<std::vector<int>>& rows);

/// Orders this library can construct (powers of two up to kMaxHadamardOrder).
bool hadamard_order_available(std::size_t order);

/// Whether a Hadamard matrix of this order can exist at all: 1, 2 or 0 mod 4.
bool hadamard_order_admissible(std::size_t order);

/// Sylvester matrix of the requested order; throws std::invalid_argument when
/// the order is inadmissible or not constructible here.
HadamardMatrix hadamard_of_order(std::size_t order);

}  // namespace ballcover
