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

#include <stdexcept>
#include <string>

namespace logent {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Operands whose shapes do not line up (matrix dims, PVM vs state, factor
// dims vs matrix size).
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& message) : Error(message) {}
};

// Inputs that have the right shape but violate a domain invariant:
// non-Hermitian, not PSD, wrong trace, non-unitary, incomplete PVM, ...
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error(message) {}
};

// Pre- and post-selected states with (numerically) zero overlap.
class OrthogonalSelection : public Error {
 public:
  explicit OrthogonalSelection(const std::string& message) : Error(message) {}
};

}  // namespace logent
