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

// JSON interchange for spaces, point sets, coverings, dictionaries and
// reports. p is written as a number or the string "inf". Doubles use the
// shortest representation that parses back to the same value.

#include "ballcover/ball_covering.hpp"
#include "ballcover/dictionary.hpp"
#include "ballcover/hadamard.hpp"
#include "ballcover/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace ballcover {

using Json = nlohmann::ordered_json;

Json space_to_json(const LpSpace& space);
/// Throws std::invalid_argument for a malformed object.
LpSpace space_from_json(const Json& j);

Json points_to_json(const PointSet& points);
/// Array of equal-length numeric arrays. Throws std::invalid_argument
/// otherwise, or when expected_dim is nonzero and differs.
PointSet points_from_json(const Json& j, std::size_t expected_dim = 0);

/// {"space", "centers", "radius", "closed", "provenance"} plus "seed" when given.
Json covering_to_json(const BallCovering& cov, std::optional<std::uint64_t> seed = std::nullopt);
BallCovering covering_from_json(const Json& j);

struct DictionaryFile {
    Dictionary dictionary;
    std::optional<double> mu;
    std::optional<std::uint64_t> seed;
};

Json dictionary_to_json(const Dictionary& dict, std::optional<double> mu = std::nullopt,
                        std::optional<std::uint64_t> seed = std::nullopt);
DictionaryFile dictionary_from_json(const Json& j);

/// Elapsed time is written only when include_timing is set, so reports are
/// byte-stable across runs by default.
Json report_to_json(const CoverageReport& rep, bool include_timing = false);
Json adversarial_to_json(const AdversarialResult& res);
Json hadamard_to_json(const HadamardMatrix& h);

/// Either {"centers": [...]} or a bare array of points.
PointSet centers_from_json(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

/// Throws std::runtime_error when the file cannot be opened or parsed.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ballcover
