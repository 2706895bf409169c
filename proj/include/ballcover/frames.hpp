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

#include "ballcover/hadamard.hpp"
#include "ballcover/point_set.hpp"

namespace ballcover {

/// d+1 unit vectors in R^d with pairwise inner products -1/d. vectors[j] is
/// the j-th frame vector (a column of the frame matrix).
struct TightFrame {
    std::size_t dim = 0;
    PointSet vectors;
};

/// Drop the first row of H (all ones) and scale the columns by 1/sqrt(m-1).
/// Throws std::invalid_argument when the first row is not all ones or m < 2.
TightFrame etf_from_hadamard(const HadamardMatrix& h);

/// Row-major (d+1) x (d+1) Gram matrix.
std::vector<double> gram_matrix(const TightFrame& frame);

struct FrameResiduals {
    double reconstruction = 0.0;  // || x - d/(d+1) sum <x,phi_i> phi_i ||_2
    double vanishing_sum = 0.0;   // || sum phi_i ||_2
    double parseval = 0.0;        // | ||x||^2 - d/(d+1) sum <x,phi_i>^2 |

    double worst() const;
};

/// Throws std::invalid_argument when x.size() != frame.dim.
FrameResiduals verify_frame_identities(const TightFrame& frame, std::span<const double> x);

}  // namespace ballcover
