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

#ifndef ISOLAB_PROJECTORS_HPP
#define ISOLAB_PROJECTORS_HPP

#include "isolab/su2.hpp"

namespace isolab {

/// Weighted average sum_k w_k act(h_k, pf) over the rule's nodes. Exact
/// for the finite subgroups and quadrature-exact for circle components
/// with n_circle >= 5. Throws MismatchedRuleError if the rule was built
/// for a different descriptor.
PauliForm twirl_numeric(const SubgroupDescriptor& H, const PauliForm& pf,
                        const QuadratureRule& rule);

/// Closed-form subgroup average:
///   Z2    identity map
///   Z4(r) a,b -> (r.a) r; T -> r r^T component + perpendicular block
///   U1(r) Bloch as Z4; perpendicular block keeps its rotation-invariant
///         symmetric trace and antisymmetric parts
///   K2    a,b -> 0; T -> diagonal in the frame
///   Kinf  a,b -> 0; T -> diagonal in the frame with the two entries
///         perpendicular to the axis averaged
///   SU2   a,b -> 0; T -> (tr T / 3) I (commutant projection)
PauliForm project(const SubgroupDescriptor& H, const PauliForm& pf);

/// Matrix-level projection of a state.
DensityMatrix4 project(const SubgroupDescriptor& H, const DensityMatrix4& rho);

/// trace_distance(rho, P_H(rho)); zero iff H is contained in Iso(rho)
/// within tolerance.
double fixed_point_residual(const SubgroupDescriptor& H, const PauliForm& pf);
double fixed_point_residual(const SubgroupDescriptor& H, const DensityMatrix4& rho);

/// Monte Carlo Haar twirl over all of SU(2); the independent oracle for
/// the commutant-projection SU2 route. Deterministic for a fixed seed
/// regardless of thread count (per-chunk streams).
PauliForm twirl_monte_carlo(const PauliForm& pf, int n_samples,
                            std::uint64_t seed, int threads = 0);

}  // namespace isolab

#endif  // ISOLAB_PROJECTORS_HPP
