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

#include "ballcover/simd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ballcover {

TightFrame etf_from_hadamard(const HadamardMatrix& h) {
    const std::size_t m = h.order();
    if (m < 2) throw std::invalid_argument("etf_from_hadamard: order must be at least 2");
    if (!h.first_row_all_ones()) {
        throw std::invalid_argument("etf_from_hadamard: first row must be all ones (normalize it first)");
    }
    const std::size_t n = m - 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    TightFrame frame{n, PointSet(n, std::vector<double>(m * n))};
    for (std::size_t j = 0; j < m; ++j) {
        auto phi = frame.vectors[j];
        for (std::size_t i = 0; i < n; ++i) phi[i] = h(i + 1, j) * scale;
    }
    return frame;
}

std::vector<double> gram_matrix(const TightFrame& frame) {
    const std::size_t m = frame.vectors.size();
    std::vector<double> g(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const double v = simd::dot(frame.vectors[i], frame.vectors[j]);
            g[i * m + j] = v;
            g[j * m + i] = v;
        }
    }
    return g;
}

double FrameResiduals::worst() const { return std::max({reconstruction, vanishing_sum, parseval}); }

FrameResiduals verify_frame_identities(const TightFrame& frame, std::span<const double> x) {
    const std::size_t d = frame.dim;
    if (x.size() != d) throw std::invalid_argument("verify_frame_identities: dimension mismatch");
    const std::size_t m = frame.vectors.size();
    const double w = static_cast<double>(d) / static_cast<double>(m);

    Vector recon(d, 0.0);
    Vector total(d, 0.0);
    double energy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto phi = frame.vectors[i];
        const double c = simd::dot(x, phi);
        energy += c * c;
        for (std::size_t k = 0; k < d; ++k) {
            recon[k] += c * phi[k];
            total[k] += phi[k];
        }
    }
    FrameResiduals r;
    double err = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double e = x[k] - w * recon[k];
        err += e * e;
    }
    r.reconstruction = std::sqrt(err);
    r.vanishing_sum = std::sqrt(simd::dot(total, total));
    r.parseval = std::fabs(simd::dot(x, x) - w * energy);
    return r;
}

}  // namespace ballcover
