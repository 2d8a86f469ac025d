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

#include "isolab/channels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "isolab/errors.hpp"

namespace isolab {

Mat2c QubitChannelPTM::apply(const Mat2c& x) const {
  // x = c0/2 1 + 1/2 c.sigma with c0 = tr x, c_k = tr(sigma_k x).
  const cplx c0 = x.trace();
  Eigen::Vector3cd c;
  for (int k = 0; k < 3; ++k) c[k] = (pauli(k) * x).trace();
  Eigen::Vector3cd out_c = lambda.cast<cplx>() * c + c0 * t.cast<cplx>();
  Mat2c out = 0.5 * c0 * Mat2c::Identity();
  for (int k = 0; k < 3; ++k) out += 0.5 * out_c[k] * pauli(k);
  return out;
}

Mat4c QubitChannelPTM::choi() const {
  Mat4c c = Mat4c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mat2c e = Mat2c::Zero();
      e(i, j) = 1.0;
      c.block<2, 2>(2 * i, 2 * j) = apply(e);
    }
  return c;
}

double QubitChannelPTM::choi_min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(choi(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

QubitChannelPTM QubitChannelPTM::after(const QubitChannelPTM& other) const {
  QubitChannelPTM out;
  out.lambda = lambda * other.lambda;
  out.t = lambda * other.t + t;
  return out;
}

QubitChannelPTM QubitChannelPTM::mix(const QubitChannelPTM& other,
                                     double p) const {
  QubitChannelPTM out;
  out.lambda = p * lambda + (1.0 - p) * other.lambda;
  out.t = p * t + (1.0 - p) * other.t;
  return out;
}

QubitChannelPTM QubitChannelPTM::conjugated(const GroupElement& g) const {
  const Mat3 r = rotation_of(g);
  QubitChannelPTM out;
  out.lambda = r * lambda * r.transpose();
  out.t = r * t;
  return out;
}

QubitChannelPTM QubitChannelPTM::identity() { return {}; }

QubitChannelPTM QubitChannelPTM::depolarizing(double p) {
  QubitChannelPTM out;
  out.lambda = p * Mat3::Identity();
  return out;
}

QubitChannelPTM QubitChannelPTM::rotation(const Vec3& axis, double theta) {
  QubitChannelPTM out;
  out.lambda = rotation_of(GroupElement::from_axis_angle(axis, theta));
  return out;
}

QubitChannelPTM QubitChannelPTM::measurement(const Vec3& axis) {
  const Vec3 n = axis.normalized();
  QubitChannelPTM out;
  out.lambda = n * n.transpose();
  return out;
}

QubitChannelPTM QubitChannelPTM::dephasing(const Vec3& axis, double p) {
  return identity().mix(measurement(axis), p);
}

QubitChannelPTM QubitChannelPTM::preparation(const Vec3& axis, double p) {
  QubitChannelPTM out;
  out.lambda = Mat3::Zero();
  out.t = p * axis.normalized();
  return out;
}

QubitChannelPTM ptm_from_kraus(const std::vector<Mat2c>& kraus) {
  Mat2c sum = Mat2c::Zero();
  for (const Mat2c& k : kraus) sum += k.adjoint() * k;
  const double tp_err = (sum - Mat2c::Identity()).cwiseAbs().maxCoeff();
  if (tp_err > 1e-10)
    throw NotTracePreservingError(
        "Kraus operators violate trace preservation by " +
        std::to_string(tp_err));

  auto channel = [&kraus](const Mat2c& x) {
    Mat2c out = Mat2c::Zero();
    for (const Mat2c& k : kraus) out += k * x * k.adjoint();
    return out;
  };
  QubitChannelPTM out;
  const Mat2c e_id = channel(Mat2c::Identity());
  for (int i = 0; i < 3; ++i)
    out.t[i] = 0.5 * (pauli(i) * e_id).trace().real();
  for (int j = 0; j < 3; ++j) {
    const Mat2c ej = channel(pauli(j));
    for (int i = 0; i < 3; ++i)
      out.lambda(i, j) = 0.5 * (pauli(i) * ej).trace().real();
  }
  return out;
}

IsotropyReport channel_isotropy(const QubitChannelPTM& ch,
                                const ClassifyOptions& opt) {
  PauliForm embed;
  embed.a = ch.t;
  embed.b = Vec3::Zero();
  embed.T = ch.lambda;
  return classify(embed, opt);
}

std::string to_string(GateVerdict v) {
  return v == GateVerdict::Allowed ? "Allowed" : "RuledOut";
}

GateVerdict simulation_gate(const IsotropyReport& sigma_report,
                            const IsotropyReport& channel_report) {
  return leq(sigma_report.descriptor, channel_report.descriptor)
             ? GateVerdict::Allowed
             : GateVerdict::RuledOut;
}

SymmetricChannel::SymmetricChannel(const Eigen::Matrix<double, 5, 1>& weights,
                                   double theta, double partial_fraction)
    : w_(weights), theta_(theta), s_(partial_fraction) {
  w_ /= w_.sum();
  // exp(i theta SWAP) = cos(theta) 1 + i sin(theta) SWAP, since SWAP^2 = 1.
  exp_swap_ = std::cos(theta_) * Mat4c::Identity() +
              cplx(0.0, 1.0) * std::sin(theta_) * swap_gate();
}

namespace {
Mat4c su2_twirl_matrix(const Mat4c& rho) {
  // Commutant projection onto span{1, SWAP} preserving tr(.) and
  // tr(SWAP .).
  const cplx tr = rho.trace();
  const cplx sw = (swap_gate() * rho).trace();
  const cplx alpha = (2.0 * tr - sw) / 6.0;
  const cplx beta = (2.0 * sw - tr) / 6.0;
  return alpha * Mat4c::Identity() + beta * swap_gate();
}
}  // namespace

Mat4c SymmetricChannel::apply(const Mat4c& rho) const {
  const Mat4c& s = swap_gate();
  Mat4c out = w_[0] * rho;
  out += w_[1] * (s * rho * s);
  out += w_[2] * (exp_swap_ * rho * exp_swap_.adjoint());
  const Mat4c tw = su2_twirl_matrix(rho);
  out += w_[3] * tw;
  out += w_[4] * ((1.0 - s_) * rho + s_ * tw);
  return out;
}

PauliForm SymmetricChannel::apply(const PauliForm& pf) const {
  return decompose(DensityMatrix4(apply(compose(pf).matrix())));
}

double SymmetricChannel::covariance_residual(
    const std::vector<GroupElement>& probes) const {
  Rng probe_rng(0x5eedULL);
  std::vector<Mat4c> test_states;
  for (int i = 0; i < 3; ++i)
    test_states.push_back(random_state(probe_rng).matrix());
  double worst = 0.0;
  for (const GroupElement& g : probes) {
    for (const Mat4c& rho : test_states) {
      const Mat4c lhs = act_matrix(g, apply(act_matrix(g.inverse(), rho)));
      const Mat4c rhs = apply(rho);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

SymmetricChannel random_symmetric_channel(Rng& rng) {
  Eigen::Matrix<double, 5, 1> w;
  for (int i = 0; i < 5; ++i) w[i] = rng.uniform();
  const double theta = rng.uniform(0.0, 2.0 * M_PI);
  const double s = rng.uniform();
  SymmetricChannel ch(w, theta, s);
  std::vector<GroupElement> probes;
  for (int i = 0; i < 10; ++i) probes.push_back(haar_element(rng));
  const double res = ch.covariance_residual(probes);
  if (res > 1e-10)
    throw Error("generated symmetric channel violates covariance: " +
                std::to_string(res));
  return ch;
}

QubitChannelPTM noisy_channel(const QubitChannelPTM& ch, double eps) {
  if (eps < 0.0 || eps > 1.0)
    throw InvalidInputError("noise parameter must lie in [0, 1]");
  QubitChannelPTM out;
  out.lambda = (1.0 - eps) * ch.lambda;
  out.t = (1.0 - eps) * ch.t;
  return out;
}

}  // namespace isolab
