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

// Counter-based random stream.
//
// A stream is identified by a key derived from (seed, ids...). The k-th draw of
// a stream is a pure function of (key, k), so any batch of trials can be
// evaluated on any thread and still see exactly the numbers a sequential run
// would. Distributions are implemented here rather than taken from <random>
// because the standard distributions are not specified bit-for-bit across
// library implementations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <vector>

namespace logent {

namespace detail {

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::initializer_list<std::uint64_t> ids = {})
      : key_(detail::mix64(seed + 0x9E3779B97F4A7C15ULL)) {
    for (auto id : ids) key_ = detail::mix64(key_ ^ detail::mix64(id + 0x632BE59BD9B4E019ULL));
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Draw number `index` of this stream, without advancing it.
  result_type at(std::uint64_t index) const {
    return detail::mix64(detail::mix64(index ^ key_) + key_);
  }

  result_type operator()() { return at(counter_++); }

  std::uint64_t counter() const { return counter_; }
  std::uint64_t key() const { return key_; }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>((*this)()) * n) >> 64);
  }

  /// Standard normal via Box-Muller; the second variate is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
  }

  /// Complex Gaussian with independent N(0,1) real and imaginary parts.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  double exponential() { return -std::log(1.0 - uniform()); }

  /// Symmetric Dirichlet(1) sample of length k (uniform on the simplex).
  std::vector<double> dirichlet(std::size_t k) {
    std::vector<double> w(k);
    double total = 0.0;
    for (auto& x : w) {
      x = exponential();
      total += x;
    }
    for (auto& x : w) x /= total;
    return w;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace logent
