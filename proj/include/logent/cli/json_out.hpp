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

#include "json.hpp"

namespace logent::cli {

/// Shortest form that still carries 17 significant digits; NaN and infinities
/// become null.
std::string format_double(double x);

/// Pretty-prints `value` with two-space indentation. Object keys come out in
/// lexicographic order, floating-point numbers through format_double.
void write_json(std::ostream& out, const nlohmann::json& value);
std::string to_json_string(const nlohmann::json& value);

}  // namespace logent::cli
