// Copyright 2026 The isolab developers
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

#ifndef ISOLAB_RNG_HPP
#define ISOLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace isolab {

/// Deterministic random stream. Normal deviates use an explicit
/// Box-Muller transform instead of std::normal_distribution, whose
/// output is implementation-defined; fixed seeds must reproduce
/// byte-identical reports across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return std::generate_canonical<double, 53>(gen_); }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal deviate.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925287 * u2);
  }

  std::uint64_t integer() { return gen_(); }

  /// Independent child stream keyed on (seed, stream_index). Handing one
  /// stream per trial or per chunk keeps parallel schedules from
  /// reordering the draws.
  Rng spawn(std::uint64_t stream_index) const {
    // splitmix64 over the pair
    std::uint64_t z = seed_ ^ (stream_index + 0x9e3779b97f4a7c15ULL +
                               (seed_ << 6) + (seed_ >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace isolab

#endif  // ISOLAB_RNG_HPP
