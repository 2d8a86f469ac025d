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

#include "isolab/projectors.hpp"

#include "isolab/errors.hpp"
#include "isolab/threads.hpp"

namespace isolab {

PauliForm twirl_numeric(const SubgroupDescriptor& H, const PauliForm& pf,
                        const QuadratureRule& rule) {
  if (!rule.source.same_subgroup(H))
    throw MismatchedRuleError("quadrature rule was built for " +
                              to_string(rule.source.cls) + ", not for " +
                              to_string(H.cls) + " with these parameters");
  PauliForm acc;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const PauliForm g = act(rule.nodes[k], pf);
    acc.a += rule.weights[k] * g.a;
    acc.b += rule.weights[k] * g.b;
    acc.T += rule.weights[k] * g.T;
  }
  return acc;
}

namespace {

PauliForm project_z4(const Vec3& r, const PauliForm& pf) {
  PauliForm out;
  const Mat3 rr = r * r.transpose();
  const Mat3 q = Mat3::Identity() - rr;
  out.a = r.dot(pf.a) * r;
  out.b = r.dot(pf.b) * r;
  out.T = rr * pf.T * rr + q * pf.T * q;
  return out;
}

PauliForm project_u1(const Vec3& r, const PauliForm& pf) {
  PauliForm out;
  out.a = r.dot(pf.a) * r;
  out.b = r.dot(pf.b) * r;
  const Mat3 f = complete_frame(r);
  const Mat3 tp = f.transpose() * pf.T * f;  // frame coords, axis first
  Mat3 res = Mat3::Zero();
  res(0, 0) = tp(0, 0);
  const double sym = 0.5 * (tp(1, 1) + tp(2, 2));
  const double anti = 0.5 * (tp(1, 2) - tp(2, 1));
  res(1, 1) = res(2, 2) = sym;
  res(1, 2) = anti;
  res(2, 1) = -anti;
  out.T = f * res * f.transpose();
  return out;
}

PauliForm project_k2(const Mat3& frame, const PauliForm& pf) {
  PauliForm out;
  for (int i = 0; i < 3; ++i) {
    const Vec3 ri = frame.col(i);
    out.T += ri.dot(pf.T * ri) * ri * ri.transpose();
  }
  return out;
}

PauliForm project_kinf(const Vec3& k, const PauliForm& pf) {
  PauliForm out;
  const double on_axis = k.dot(pf.T * k);
  const double perp = 0.5 * (pf.T.trace() - on_axis);
  out.T = on_axis * k * k.transpose() +
          perp * (Mat3::Identity() - k * k.transpose());
  return out;
}

PauliForm project_su2(const PauliForm& pf) {
  PauliForm out;
  out.T = (pf.T.trace() / 3.0) * Mat3::Identity();
  return out;
}

}  // namespace

PauliForm project(const SubgroupDescriptor& H, const PauliForm& pf) {
  switch (H.cls) {
    case SubgroupClass::Z2: return pf;
    case SubgroupClass::Z4: return project_z4(H.axis, pf);
    case SubgroupClass::U1: return project_u1(H.axis, pf);
    case SubgroupClass::K2: return project_k2(H.frame, pf);
    case SubgroupClass::Kinf: return project_kinf(H.axis, pf);
    case SubgroupClass::SU2: return project_su2(pf);
  }
  return pf;
}

DensityMatrix4 project(const SubgroupDescriptor& H, const DensityMatrix4& rho) {
  return compose(project(H, decompose(rho)));
}

double fixed_point_residual(const SubgroupDescriptor& H, const PauliForm& pf) {
  return trace_distance(pf, project(H, pf));
}

double fixed_point_residual(const SubgroupDescriptor& H,
                            const DensityMatrix4& rho) {
  return fixed_point_residual(H, decompose(rho));
}

PauliForm twirl_monte_carlo(const PauliForm& pf, int n_samples,
                            std::uint64_t seed, int threads) {
  if (n_samples < 1)
    throw InvalidInputError("Monte Carlo twirl needs at least one sample");
  const Rng root(seed);
  const int chunk = 4096;
  const int n_chunks = (n_samples + chunk - 1) / chunk;
  std::vector<PauliForm> partial(n_chunks);

  threads = effective_threads(threads);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int c = 0; c < n_chunks; ++c) {
    Rng rng = root.spawn(c);
    const int lo = c * chunk;
    const int hi = std::min(n_samples, lo + chunk);
    PauliForm acc;
    for (int i = lo; i < hi; ++i) {
      const PauliForm g = act(haar_element(rng), pf);
      acc.a += g.a;
      acc.b += g.b;
      acc.T += g.T;
    }
    partial[c] = acc;
  }
  // Deterministic ordered reduction.
  PauliForm total;
  for (const PauliForm& p : partial) {
    total.a += p.a;
    total.b += p.b;
    total.T += p.T;
  }
  total.a /= n_samples;
  total.b /= n_samples;
  total.T /= n_samples;
  return total;
}

}  // namespace isolab
