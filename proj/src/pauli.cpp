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

#include "isolab/pauli.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "isolab/errors.hpp"

namespace isolab {

namespace {
const cplx kI(0.0, 1.0);

Mat2c make_pauli(int i) {
  Mat2c m;
  switch (i) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, -kI, kI, 0; break;
    case 2: m << 1, 0, 0, -1; break;
    default: m = Mat2c::Identity(); break;
  }
  return m;
}
}  // namespace

const Mat2c& pauli(int i) {
  static const Mat2c sx = make_pauli(0), sy = make_pauli(1), sz = make_pauli(2),
                     id = make_pauli(3);
  switch (i) {
    case 0: return sx;
    case 1: return sy;
    case 2: return sz;
    default: return id;
  }
}

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

const Mat4c& swap_gate() {
  static const Mat4c s = [] {
    Mat4c m = Mat4c::Zero();
    m(0, 0) = m(3, 3) = 1;
    m(1, 2) = m(2, 1) = 1;
    return m;
  }();
  return s;
}

namespace {
// Cached two-qubit Pauli products; index 3 is the identity.
struct PauliBasis {
  Mat4c a[3];     // sigma_i x 1
  Mat4c b[3];     // 1 x sigma_j
  Mat4c t[3][3];  // sigma_i x sigma_j
  PauliBasis() {
    for (int i = 0; i < 3; ++i) {
      a[i] = kron(pauli(i), pauli(3));
      b[i] = kron(pauli(3), pauli(i));
      for (int j = 0; j < 3; ++j) t[i][j] = kron(pauli(i), pauli(j));
    }
  }
};
const PauliBasis& basis() {
  static const PauliBasis p;
  return p;
}
}  // namespace

DensityMatrix4::DensityMatrix4(const Mat4c& m) : m_(m) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermitian)
    throw InvalidStateError("matrix is not Hermitian (max |M - M^dag| = " +
                            std::to_string(herm) + ")");
  const double tr_err = std::abs(m.trace() - cplx(1.0));
  if (tr_err > tol::trace_one)
    throw InvalidStateError("matrix trace differs from 1 by " +
                            std::to_string(tr_err));
  const double lmin = min_eigenvalue();
  if (lmin < tol::psd_floor)
    throw InvalidStateError("matrix has negative eigenvalue " +
                            std::to_string(lmin));
}

double DensityMatrix4::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double PauliForm::coeff_distance(const PauliForm& o) const {
  double d = (a - o.a).cwiseAbs().maxCoeff();
  d = std::max(d, (b - o.b).cwiseAbs().maxCoeff());
  d = std::max(d, (T - o.T).cwiseAbs().maxCoeff());
  return d;
}

double PauliForm::coeff_norm() const {
  return std::max({a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff(),
                   T.cwiseAbs().maxCoeff()});
}

PauliForm decompose(const DensityMatrix4& rho) {
  const Mat4c& m = rho.matrix();
  const PauliBasis& p = basis();
  PauliForm pf;
  for (int i = 0; i < 3; ++i) {
    pf.a[i] = m.cwiseProduct(p.a[i].transpose()).sum().real();
    pf.b[i] = m.cwiseProduct(p.b[i].transpose()).sum().real();
    for (int j = 0; j < 3; ++j)
      pf.T(i, j) = m.cwiseProduct(p.t[i][j].transpose()).sum().real();
  }
  return pf;
}

Mat4c hermitian_from_coeffs(double unit_coeff, const PauliForm& pf) {
  const PauliBasis& p = basis();
  Mat4c m = unit_coeff * Mat4c::Identity();
  for (int i = 0; i < 3; ++i) {
    if (pf.a[i] != 0.0) m += 0.25 * pf.a[i] * p.a[i];
    if (pf.b[i] != 0.0) m += 0.25 * pf.b[i] * p.b[i];
    for (int j = 0; j < 3; ++j)
      if (pf.T(i, j) != 0.0) m += 0.25 * pf.T(i, j) * p.t[i][j];
  }
  return m;
}

DensityMatrix4 compose(const PauliForm& pf) {
  Mat4c m = hermitian_from_coeffs(0.25, pf);
  // Symmetrize away round-off before validation.
  m = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Mat4c> es(m, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin < tol::psd_floor)
    throw NotAStateError("(a, b, T) lies outside the state set: eigenvalue " +
                         std::to_string(lmin));
  return DensityMatrix4(m);
}

CanonicalForm canonical_form(const PauliForm& pf) {
  CanonicalForm cf;
  if (pf.T.cwiseAbs().maxCoeff() == 0.0) {
    cf.a = pf.a;
    cf.b = pf.b;
    return cf;
  }
  Eigen::JacobiSVD<Mat3> svd(pf.T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 c = svd.matrixU();
  Mat3 d = svd.matrixV();
  Vec3 taus = svd.singularValues();

  // Deterministic column signs: make the largest-|.| entry of each c
  // column positive, flipping the paired d column to keep the product.
  for (int i = 0; i < 3; ++i) {
    int m = 0;
    for (int r = 1; r < 3; ++r)
      if (std::abs(c(r, i)) > std::abs(c(m, i))) m = r;
    if (c(m, i) < 0) {
      c.col(i) *= -1.0;
      d.col(i) *= -1.0;
    }
  }
  // Push any improper factor into the last (smallest-tau) column.
  if (c.determinant() < 0) {
    c.col(2) *= -1.0;
    taus[2] = -taus[2];
  }
  if (d.determinant() < 0) {
    d.col(2) *= -1.0;
    taus[2] = -taus[2];
  }
  cf.taus = taus;
  cf.c_basis = c;
  cf.d_basis = d;
  cf.a = c.transpose() * pf.a;
  cf.b = d.transpose() * pf.b;
  return cf;
}

std::optional<Vec3> bell_diagonal_coords(const PauliForm& pf, double tol) {
  if (pf.a.norm() > tol || pf.b.norm() > tol) return std::nullopt;
  const CanonicalForm cf = canonical_form(pf);
  Vec3 signed_taus;
  for (int i = 0; i < 3; ++i) {
    const double align = cf.c_basis.col(i).dot(cf.d_basis.col(i));
    if (std::abs(std::abs(align) - 1.0) > tol) return std::nullopt;
    signed_taus[i] = cf.taus[i] * (align > 0 ? 1.0 : -1.0);
  }
  return signed_taus;
}

double trace_distance(const DensityMatrix4& rho, const DensityMatrix4& sigma) {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(rho.matrix() - sigma.matrix(),
                                          Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const PauliForm& x, const PauliForm& y) {
  PauliForm d;
  d.a = x.a - y.a;
  d.b = x.b - y.b;
  d.T = x.T - y.T;
  Eigen::SelfAdjointEigenSolver<Mat4c> es(hermitian_from_coeffs(0.0, d),
                                          Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double relative_entropy(const DensityMatrix4& rho, const DensityMatrix4& sigma) {
  Eigen::SelfAdjointEigenSolver<Mat4c> er(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Mat4c> es(sigma.matrix());
  const auto p = er.eigenvalues();
  const auto q = es.eigenvalues();

  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    if (p[i] > tol::entropy_floor) s += p[i] * std::log(p[i]);

  for (int j = 0; j < 4; ++j) {
    double mass = 0.0;  // weight of rho along sigma's j-th eigenvector
    for (int i = 0; i < 4; ++i) {
      if (p[i] <= tol::entropy_floor) continue;
      const double overlap =
          std::norm(er.eigenvectors().col(i).dot(es.eigenvectors().col(j)));
      mass += p[i] * overlap;
    }
    if (q[j] > tol::entropy_floor) {
      s -= mass * std::log(q[j]);
    } else if (mass > 1e-12) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return std::max(0.0, s);
}

DensityMatrix4 random_state(Rng& rng) {
  Mat4c g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
  Mat4c m = g * g.adjoint();
  m /= m.trace();
  m = 0.5 * (m + m.adjoint().eval());
  return DensityMatrix4(m);
}

namespace {
DensityMatrix4 pure(const Eigen::Vector4cd& psi) {
  Eigen::Vector4cd v = psi.normalized();
  return DensityMatrix4(v * v.adjoint());
}
}  // namespace

DensityMatrix4 bell_phi_plus() {
  return pure(Eigen::Vector4cd(1, 0, 0, 1));
}
DensityMatrix4 bell_phi_minus() {
  return pure(Eigen::Vector4cd(1, 0, 0, -1));
}
DensityMatrix4 bell_psi_plus() {
  return pure(Eigen::Vector4cd(0, 1, 1, 0));
}
DensityMatrix4 bell_psi_minus() {
  return pure(Eigen::Vector4cd(0, 1, -1, 0));
}
DensityMatrix4 maximally_mixed() {
  return DensityMatrix4(0.25 * Mat4c::Identity());
}

PauliForm t_state_form(const Vec3& taus) {
  PauliForm pf;
  pf.T = taus.asDiagonal();
  return pf;
}

DensityMatrix4 t_state(const Vec3& taus) { return compose(t_state_form(taus)); }

Eigen::Vector4d bell_basis_eigenvalues(const Vec3& t) {
  // sigma_i x sigma_i is diagonal in the Bell basis; the four combinations
  // below are the eigenvalues of 1/4 sum_i tau_i sigma_i x sigma_i offset
  // by the 1/4 identity term.
  return 0.25 * Eigen::Vector4d(1 + t[0] - t[1] + t[2],   // phi+
                                1 - t[0] + t[1] + t[2],   // phi-
                                1 + t[0] + t[1] - t[2],   // psi+
                                1 - t[0] - t[1] - t[2]);  // psi-
}

}  // namespace isolab
