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

#ifndef ISOLAB_CHANNELS_HPP
#define ISOLAB_CHANNELS_HPP

#include <vector>

#include "isolab/isotropy.hpp"
#include "isolab/lattice.hpp"

namespace isolab {

/// Affine Bloch representation of a single-qubit CPTP map:
/// r -> Lambda r + t. Trace preservation is structural; complete
/// positivity is checked through the Choi matrix.
struct QubitChannelPTM {
  Mat3 lambda = Mat3::Identity();
  Vec3 t = Vec3::Zero();

  /// Choi matrix sum_ij |i><j| x E(|i><j|); PSD iff the channel is CP.
  Mat4c choi() const;
  double choi_min_eigenvalue() const;
  /// Action on a (possibly non-Hermitian) 2x2 operator by linearity.
  Mat2c apply(const Mat2c& x) const;

  /// Composition: this after other.
  QubitChannelPTM after(const QubitChannelPTM& other) const;
  QubitChannelPTM mix(const QubitChannelPTM& other, double p) const;
  /// Frame change U_g o E o U_{g^-1}: Lambda -> R Lambda R^T, t -> R t.
  QubitChannelPTM conjugated(const GroupElement& g) const;

  static QubitChannelPTM identity();
  static QubitChannelPTM depolarizing(double p);
  static QubitChannelPTM rotation(const Vec3& axis, double theta);
  static QubitChannelPTM measurement(const Vec3& axis);
  static QubitChannelPTM dephasing(const Vec3& axis, double p);
  static QubitChannelPTM preparation(const Vec3& axis, double p);
};

/// Lambda_ij = 1/2 tr(sigma_i E(sigma_j)), t_i = 1/2 tr(sigma_i E(1)).
/// Throws NotTracePreservingError if sum K^dag K differs from 1 beyond
/// 1e-10.
QubitChannelPTM ptm_from_kraus(const std::vector<Mat2c>& kraus);

/// Residual symmetry of the channel under conjugation; the stabilizer
/// equations {R t = t, R Lambda R^T = Lambda} are the state equations
/// for the embedded triple (a = t, b = 0, T = Lambda).
IsotropyReport channel_isotropy(const QubitChannelPTM& ch,
                                const ClassifyOptions& opt = {});

enum class GateVerdict { Allowed, RuledOut };

std::string to_string(GateVerdict v);

/// Necessity-only superselection gate: RuledOut iff Iso(sigma) is not
/// contained in Iso(E). Allowed does not imply the simulation exists.
GateVerdict simulation_gate(const IsotropyReport& sigma_report,
                            const IsotropyReport& channel_report);

/// Two-qubit channel commuting with the collective action; mixture of
/// identity, SWAP conjugation, exp(i theta SWAP) conjugation, the SU(2)
/// twirl and a partial twirl.
class SymmetricChannel {
 public:
  SymmetricChannel(const Eigen::Matrix<double, 5, 1>& weights, double theta,
                   double partial_fraction);

  Mat4c apply(const Mat4c& rho) const;
  PauliForm apply(const PauliForm& pf) const;
  /// Largest covariance violation over the given probe elements; the
  /// generator asserts this below 1e-10 at build time.
  double covariance_residual(const std::vector<GroupElement>& probes) const;

 private:
  Eigen::Matrix<double, 5, 1> w_;
  double theta_;
  double s_;
  Mat4c exp_swap_;
};

/// Random convex mixture of the symmetric generators; covariance is
/// verified against 10 random group elements at generation time.
SymmetricChannel random_symmetric_channel(Rng& rng);

/// Isotropic noise (1 - eps) E + eps D: Lambda and t shrink by 1 - eps.
QubitChannelPTM noisy_channel(const QubitChannelPTM& ch, double eps);

}  // namespace isolab

#endif  // ISOLAB_CHANNELS_HPP
