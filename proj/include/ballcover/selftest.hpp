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

#include <cstdint>
#include <string>

namespace ballcover {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct SelftestReport {
    std::string text;  // one line per check, no timings
    bool passed = false;
};

/// Deterministic margin suite across all constructions. Identical seeds give
/// byte-identical text.
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace ballcover
