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

#include <iostream>

namespace ballcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Environment variable that overrides the default seed.
inline constexpr const char* kSeedEnv = "BALLCOVER_SEED";

/// Parses argv (argv[0] is the program name) and runs the subcommand.
/// Returns 0 on success, 2 when a verification fails, 1 on usage or
/// internal errors.
int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace ballcover::cli
