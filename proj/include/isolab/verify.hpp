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

#ifndef ISOLAB_VERIFY_HPP
#define ISOLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "isolab/channels.hpp"

namespace isolab {

/// Random valid state with the requested residual symmetry, in general
/// position (axes conjugated by a Haar rotation, coefficient gaps large
/// enough to stay away from class boundaries).
DensityMatrix4 random_state_of_class(SubgroupClass cls, Rng& rng);

/// Random single-qubit channel with a known isotropy class, drawn from
/// the standard families (depolarizing, rotations, measurements,
/// dephasings, preparations).
QubitChannelPTM random_channel(Rng& rng, const Vec3& axis);

struct LemmaCheck {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst_residual = 0.0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int n_trials = 0;
  std::vector<LemmaCheck> lemmas;
  bool all_pass = true;
};

/// Cross-module property suite: the composition/tensor/mixing/
/// conjugation bounds, monotonicity under symmetric operations, the
/// zero-distance mixtures, projector optimality and the normalizer
/// invariance/violation witnesses. Deterministic for a fixed seed
/// regardless of thread count.
VerifyReport verify_lemmas(std::uint64_t seed, int n_trials, int threads = 0);

}  // namespace isolab

#endif  // ISOLAB_VERIFY_HPP
