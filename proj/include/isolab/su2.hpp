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

#ifndef ISOLAB_SU2_HPP
#define ISOLAB_SU2_HPP

#include <string>
#include <vector>

#include "isolab/pauli.hpp"

namespace isolab {

/// SU(2) element as a unit quaternion (w, v): U = w 1 + i v.sigma, so
/// U = exp(i phi r.sigma) has w = cos phi, v = sin phi r. Composition is
/// chosen to match matrix multiplication, U(g * h) = U(g) U(h).
struct GroupElement {
  double w = 1.0;
  Vec3 v = Vec3::Zero();

  static GroupElement identity() { return {}; }
  static GroupElement minus_identity() { return {-1.0, Vec3::Zero()}; }
  /// exp(i phi r.sigma) for unit r.
  static GroupElement from_axis_angle(const Vec3& r, double phi);
  /// i r.sigma (the pi element about r).
  static GroupElement pi_flip(const Vec3& r) { return {0.0, r.normalized()}; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const { return {w, -v}; }
  double norm() const { return std::sqrt(w * w + v.squaredNorm()); }
  GroupElement normalized() const;

  /// 2x2 unitary w 1 + i v.sigma.
  Mat2c matrix() const;
  /// Geodesic angle to +-identity (double cover folded out), in [0, pi/2].
  double angle_from_identity() const;
};

/// Adjoint SO(3) action: U (u.sigma) U^dag = (R u).sigma.
Mat3 rotation_of(const GroupElement& g);

/// One of the two SU(2) preimages of a rotation matrix.
GroupElement group_element_from_rotation(const Mat3& r);

/// Collective action on the coefficient triple: a -> Ra, b -> Rb,
/// T -> R T R^T.
PauliForm act(const GroupElement& g, const PauliForm& pf);
/// Same action by explicit conjugation with U(g) x U(g); test oracle and
/// matrix-level path.
Mat4c act_matrix(const GroupElement& g, const Mat4c& rho);

enum class SubgroupClass { Z2, Z4, U1, K2, Kinf, SU2 };

std::string to_string(SubgroupClass c);
SubgroupClass subgroup_class_from_string(const std::string& s);

/// Parametrized residual-symmetry subgroup:
///   Z2           {+-1}                        no parameters
///   Z4(axis)     {+-1, +-i axis.sigma}
///   U1(axis)     {exp(i theta axis.sigma)}
///   K2(frame)    {+-1, +-i r_k.sigma} for the three frame columns r_k
///   Kinf(axis,p) {(i p.sigma)^alpha exp(i theta axis.sigma)}, p _|_ axis
///   SU2          the whole group
struct SubgroupDescriptor {
  SubgroupClass cls = SubgroupClass::Z2;
  Vec3 axis = Vec3::UnitZ();   // Z4, U1, Kinf
  Vec3 pi_axis = Vec3::UnitX(); // Kinf coset representative
  Mat3 frame = Mat3::Identity(); // K2 columns

  static SubgroupDescriptor z2();
  static SubgroupDescriptor z4(const Vec3& axis);
  static SubgroupDescriptor u1(const Vec3& axis);
  static SubgroupDescriptor k2(const Mat3& frame);
  static SubgroupDescriptor kinf(const Vec3& axis);
  static SubgroupDescriptor kinf(const Vec3& axis, const Vec3& pi_axis);
  static SubgroupDescriptor su2();

  /// Equality modulo gauge: Kinf pi-axes modulo rotation about the axis,
  /// K2 frames modulo the 24 signed axis permutations, axes modulo sign.
  bool same_subgroup(const SubgroupDescriptor& o, double tol = 1e-8) const;
};

/// Nodes and weights realizing the invariant mean over a subgroup.
struct QuadratureRule {
  std::vector<GroupElement> nodes;
  std::vector<double> weights;
  SubgroupDescriptor source;
};

/// Exact finite sums for Z2/Z4/K2; n_circle-point trapezoid on each
/// circle component for U1/Kinf (exact for the degree-4 harmonics of the
/// adjoint action once n_circle >= 5); for SU2 a product of the
/// sin^2-weighted circle rule with the 12 icosahedral directions (a
/// spherical 5-design, so the degree-4 angular integrands are exact).
QuadratureRule subgroup_quadrature(const SubgroupDescriptor& H, int n_circle = 16);

/// Test oracle: whether g satisfies the defining relations of H.
bool contains_element(const SubgroupDescriptor& H, const GroupElement& g,
                      double tol = 1e-9);

/// i.i.d. Haar-uniform elements (normalized 4D Gaussians).
std::vector<GroupElement> haar_sample(Rng& rng, int n);
GroupElement haar_element(Rng& rng);

}  // namespace isolab

#endif  // ISOLAB_SU2_HPP
