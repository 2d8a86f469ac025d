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

#ifndef ISOLAB_TESTS_SUPPORT_HPP
#define ISOLAB_TESTS_SUPPORT_HPP

#include "isolab/su2.hpp"

namespace isolab::testing {

/// Brute-force continuous-stabilizer dimension, independent of the
/// linear-kernel route: Haar-sample group elements, locally minimize the
/// action residual, keep converged stabilizer elements near the
/// identity and rank their rotation vectors.
int brute_force_stabilizer_dim(const PauliForm& pf, int n_samples,
                               std::uint64_t seed);

/// Finite-difference rank of the infinitesimal action at the identity;
/// a second independent construction of the stabilizer codimension.
int action_derivative_rank(const PauliForm& pf, double tol = 1e-6);

/// Twirl at the 4x4 matrix level through explicit U x U conjugation;
/// independent of the PauliForm action path.
Mat4c matrix_twirl(const QuadratureRule& rule, const Mat4c& rho);

}  // namespace isolab::testing

#endif  // ISOLAB_TESTS_SUPPORT_HPP
