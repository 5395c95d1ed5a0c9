// Copyright 2026 The lores-ocr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LORES_RNG_HPP_
#define LORES_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace lores {

/// Seedable generator with a pinned draw sequence.  The integer stream is
/// mt19937_64 (bit-exact by the standard); uniforms take the top 53 bits;
/// normals use Box-Muller with no caching, so each normal consumes exactly
/// two uniforms.  Consumers document their draw order against this contract
/// (degrade: rotation coin, rotation angle, then noise row-major).
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal draw (mean 0, std 1).
  double next_normal() {
    // 1 - u maps [0,1) onto (0,1] so the log argument is never zero.
    double u1 = 1.0 - next_uniform();
    double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lores

#endif  // LORES_RNG_HPP_
