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

#include "support.hpp"

#include <omp.h>

#include <Eigen/SVD>
#include <vector>

namespace isolab::testing {

namespace {

// Smooth squared action residual; kink-free so the simplex refinement
// converges all the way down.
double action_residual_sq(const GroupElement& g, const PauliForm& pf) {
  const PauliForm moved = act(g, pf);
  return (moved.a - pf.a).squaredNorm() + (moved.b - pf.b).squaredNorm() +
         (moved.T - pf.T).squaredNorm();
}

GroupElement perturb(const GroupElement& g, const Vec3& delta) {
  const double n = delta.norm();
  if (n < 1e-300) return g;
  return (GroupElement::from_axis_angle(delta / n, n) * g).normalized();
}

}  // namespace

int brute_force_stabilizer_dim(const PauliForm& pf, int n_samples,
                               std::uint64_t seed) {
  const Rng root(seed);
  std::vector<Vec3> near_identity_logs;
  int n_threads = omp_get_max_threads();
  std::vector<std::vector<Vec3>> per_thread(n_threads);

#pragma omp parallel num_threads(n_threads)
  {
    const int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic, 64)
    for (int s = 0; s < n_samples; ++s) {
      Rng rng = root.spawn(s);
      GroupElement g = haar_element(rng);
      if (action_residual_sq(g, pf) > 1.0) continue;  // refinement cannot reach
      for (double step : {0.3, 0.05, 0.004}) {
        auto obj = [&](const Eigen::VectorXd& x) {
          return action_residual_sq(perturb(g, Vec3(x[0], x[1], x[2])), pf);
        };
        const auto r = nelder_mead(obj, Eigen::Vector3d::Zero(), step, 70);
        g = perturb(g, Vec3(r.x[0], r.x[1], r.x[2]));
      }
      if (action_residual_sq(g, pf) > 1e-18) continue;
      const double angle = g.angle_from_identity();
      if (angle > 1e-4 && angle < 0.7)
        per_thread[tid].push_back(angle * g.v.normalized());
    }
  }
  for (const auto& chunk : per_thread)
    near_identity_logs.insert(near_identity_logs.end(), chunk.begin(),
                              chunk.end());

  if (near_identity_logs.empty()) return 0;
  Eigen::MatrixXd m(near_identity_logs.size(), 3);
  for (std::size_t i = 0; i < near_identity_logs.size(); ++i)
    m.row(i) = near_identity_logs[i].transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > 0.05 * sv[0]) ++rank;
  // so(3) has no 2-dimensional subalgebra; rank 2 can only be a sampling
  // fluke of a 3-dimensional stabilizer.
  return rank == 2 ? 3 : rank;
}

int action_derivative_rank(const PauliForm& pf, double tol) {
  const double h = 1e-6;
  Eigen::Matrix<double, 15, 3> m;
  for (int j = 0; j < 3; ++j) {
    const GroupElement plus = GroupElement::from_axis_angle(Vec3::Unit(j), h);
    const GroupElement minus = GroupElement::from_axis_angle(Vec3::Unit(j), -h);
    const PauliForm fp = act(plus, pf);
    const PauliForm fm = act(minus, pf);
    m.block<3, 1>(0, j) = (fp.a - fm.a) / (2 * h);
    m.block<3, 1>(3, j) = (fp.b - fm.b) / (2 * h);
    const Mat3 dT = (fp.T - fm.T) / (2 * h);
    m.block<9, 1>(6, j) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(dT.data());
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 15, 3>> svd(m);
  const auto sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < 3; ++i)
    if (sv[i] > std::max(tol, 1e-6 * sv[0])) ++rank;
  return rank;
}

Mat4c matrix_twirl(const QuadratureRule& rule, const Mat4c& rho) {
  Mat4c acc = Mat4c::Zero();
  for (std::size_t k = 0; k < rule.nodes.size(); ++k)
    acc += rule.weights[k] * act_matrix(rule.nodes[k], rho);
  return acc;
}

}  // namespace isolab::testing
