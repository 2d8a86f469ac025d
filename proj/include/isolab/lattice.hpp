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

#ifndef ISOLAB_LATTICE_HPP
#define ISOLAB_LATTICE_HPP

#include <string>

#include "isolab/projectors.hpp"

namespace isolab {

/// The observed two-qubit isotropy lattice. Hasse edges:
/// Z2 -> Z4, Z4 -> U1, Z4 -> K2, U1 -> Kinf, K2 -> Kinf, Kinf -> SU2.

/// Class-level comparability on the Hasse diagram (c1 below-or-equal c2).
bool class_leq(SubgroupClass c1, SubgroupClass c2);

/// Least upper bound at isomorphism-class level. The parametrized join
/// is not exposed: two subgroups with skew axes generate groups outside
/// the observed set.
SubgroupClass join_class(SubgroupClass c1, SubgroupClass c2);

/// Parametrized inclusion: every generator of H1 lies in H2 (classes
/// comparable and axes/frames compatible within axis_tol).
bool leq(const SubgroupDescriptor& H1, const SubgroupDescriptor& H2,
         double axis_tol = 1e-8);

/// Descriptor of the intersection H1 and H2, computed case-analytically;
/// Z2 is the universal floor.
SubgroupDescriptor meet(const SubgroupDescriptor& H1,
                        const SubgroupDescriptor& H2, double axis_tol = 1e-8);

/// Whether pf lies in C-hat(H) (isotropy at least H):
/// fixed_point_residual(H, pf) <= tol.
bool in_hat_C(const PauliForm& pf, const SubgroupDescriptor& H, double tol);

/// Hasse diagram in DOT format, for documentation.
std::string hasse_dot();

}  // namespace isolab

#endif  // ISOLAB_LATTICE_HPP
