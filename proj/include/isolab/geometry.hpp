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

#ifndef ISOLAB_GEOMETRY_HPP
#define ISOLAB_GEOMETRY_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace isolab {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Cross-product matrix: skew(w) * v == w x v.
inline Mat3 skew(const Vec3& w) {
  Mat3 m;
  m << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
  return m;
}

/// Rotation by pi about the unit axis u: 2 u u^T - I.
inline Mat3 pi_rotation(const Vec3& u) {
  return 2.0 * u * u.transpose() - Mat3::Identity();
}

/// Rotation about unit axis by angle (Rodrigues).
inline Mat3 axis_angle_rotation(const Vec3& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

/// Deterministic unit vector orthogonal to k: Gram-Schmidt against the
/// coordinate axis least aligned with k.
inline Vec3 orthogonal_unit(const Vec3& k) {
  int m = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(k[i]) < std::abs(k[m])) m = i;
  Vec3 e = Vec3::Zero();
  e[m] = 1.0;
  return (e - k.dot(e) * k).normalized();
}

/// Right-handed orthonormal frame with first column k.
inline Mat3 complete_frame(const Vec3& k) {
  Mat3 f;
  f.col(0) = k.normalized();
  f.col(1) = orthogonal_unit(f.col(0));
  f.col(2) = f.col(0).cross(f.col(1));
  return f;
}

/// Axes of a geodesic subdivision of the icosahedron with the given
/// frequency; frequency 9 yields the 812-vertex sphere used to seed the
/// axis searches.
std::vector<Vec3> icosphere_vertices(int frequency);

/// The 24 proper rotations of the octahedron (signed permutation
/// matrices with determinant +1).
std::vector<Mat3> octahedral_rotations();

/// Derivative-free Nelder-Mead minimizer, deterministic for a fixed
/// start. Returns the best point found.
struct NelderMeadResult {
  Eigen::VectorXd x;
  double value;
};
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& start, double step,
                             int max_iter);

}  // namespace isolab

#endif  // ISOLAB_GEOMETRY_HPP
