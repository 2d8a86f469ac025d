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

#ifndef ISOLAB_PAULI_HPP
#define ISOLAB_PAULI_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "isolab/geometry.hpp"
#include "isolab/rng.hpp"

namespace isolab {

using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using cplx = std::complex<double>;

namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double trace_one = 1e-12;
inline constexpr double psd_floor = -1e-10;    // boundary states pass round-off
inline constexpr double entropy_floor = 1e-14; // eigenvalues below count as 0
}  // namespace tol

/// sigma_x, sigma_y, sigma_z (index 0..2) and the 2x2 identity (index 3).
const Mat2c& pauli(int i);
Mat4c kron(const Mat2c& a, const Mat2c& b);
const Mat4c& swap_gate();

/// Two-qubit density matrix: Hermitian, unit trace, PSD within tolerance.
class DensityMatrix4 {
 public:
  /// Validates the invariants; throws InvalidStateError on violation.
  explicit DensityMatrix4(const Mat4c& m);

  const Mat4c& matrix() const { return m_; }
  double min_eigenvalue() const;

 private:
  Mat4c m_;
};

/// Bloch/correlation coefficients of a two-qubit operator:
///   rho = 1/4 (1x1 + a.sigma x 1 + 1 x b.sigma + sum_ij T_ij sigma_i x sigma_j).
/// Plain data; state validity is only checked when composing back to a
/// matrix, so the same triple also carries channel (t, 0, Lambda) embeds.
struct PauliForm {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Mat3 T = Mat3::Zero();

  /// max-abs coefficient distance; the classifier's working metric.
  double coeff_distance(const PauliForm& o) const;
  /// largest coefficient magnitude; scale for relative tolerances.
  double coeff_norm() const;
};

/// Real-SVD normal form T = C diag(tau) D^T with C, D in SO(3); signs are
/// absorbed into tau and a, b are rotated into the two frames.
struct CanonicalForm {
  Vec3 taus = Vec3::Zero();
  Mat3 c_basis = Mat3::Identity();
  Mat3 d_basis = Mat3::Identity();
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
};

PauliForm decompose(const DensityMatrix4& rho);
DensityMatrix4 compose(const PauliForm& pf);

/// Hermitian (generally non-PSD) matrix with the given coefficients;
/// used by metrics and by the twirl oracles on operator space.
Mat4c hermitian_from_coeffs(double unit_coeff, const PauliForm& pf);

CanonicalForm canonical_form(const PauliForm& pf);

/// If T is diagonalized by a shared frame (c_i = +-d_i) and a = b = 0,
/// returns the signed Bell-tetrahedron coordinates, else nullopt.
std::optional<Vec3> bell_diagonal_coords(const PauliForm& pf, double tol = 1e-10);

double trace_distance(const DensityMatrix4& rho, const DensityMatrix4& sigma);
double trace_distance(const PauliForm& x, const PauliForm& y);

/// S(rho||sigma) in nats; +infinity when supp(rho) is not contained in
/// supp(sigma).
double relative_entropy(const DensityMatrix4& rho, const DensityMatrix4& sigma);

/// Full-rank random state from the Ginibre ensemble G G^dag / tr.
DensityMatrix4 random_state(Rng& rng);

/// Bell states and friends.
DensityMatrix4 bell_phi_plus();
DensityMatrix4 bell_phi_minus();
DensityMatrix4 bell_psi_plus();
DensityMatrix4 bell_psi_minus();
DensityMatrix4 maximally_mixed();
/// T-state 1/4 (1x1 + sum_i tau_i sigma_i x sigma_i).
DensityMatrix4 t_state(const Vec3& taus);
PauliForm t_state_form(const Vec3& taus);

/// Eigenvalues of a T-state difference in the Bell basis; closed form
/// used as an independent oracle for trace distances between T-states.
Eigen::Vector4d bell_basis_eigenvalues(const Vec3& taus);

}  // namespace isolab

#endif  // ISOLAB_PAULI_HPP
