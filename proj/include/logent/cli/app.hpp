// Copyright 2026 The logent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "logent/verify.hpp"

namespace logent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitDimension = 4;
inline constexpr int kExitVerify = 5;
inline constexpr int kExitOrthogonal = 6;

std::string_view tool_version();

/// FNV-1a 64-bit hash, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

nlohmann::json proposition_result_json(const PropositionResult& result);

/// Runs one subcommand. `args` excludes the program name. Exactly one JSON
/// document goes to `out` on success (and for verify runs with unexpected
/// results); human-readable messages go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logent::cli
