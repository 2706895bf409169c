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

#include "ballcover/lp_space.hpp"

#include <string>

namespace ballcover {

/// Equal-radius balls around `centers` in `space`, claimed to cover the
/// closed unit ball. `closed` selects B(c, r) over the open B°(c, r).
struct BallCovering {
    LpSpace space;
    PointSet centers;
    double radius = 1.0;
    bool closed = true;
    std::string provenance;

    std::size_t size() const noexcept { return centers.size(); }
};

enum class MarginKind { strict_open, uniform };

/// Proof-level slack of a construction. For `uniform`, `value` is the gap
/// 1 - r^2 (Euclidean) or 1 - r guaranteed on the binding set; for
/// `strict_open` coverage holds without a uniform gap and `value` is 0.
struct CoverMargin {
    MarginKind kind = MarginKind::uniform;
    double value = 0.0;
};

struct MarginedCovering {
    BallCovering covering;
    CoverMargin margin;
};

}  // namespace ballcover
