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

#include "isolab/isotropy.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "isolab/errors.hpp"

namespace isolab {

std::string to_string(OrbitShape s) {
  switch (s) {
    case OrbitShape::Point: return "Point";
    case OrbitShape::Sphere2: return "Sphere2";
    case OrbitShape::SO3modDinf: return "SO3modDinf";
    case OrbitShape::SO3modD2: return "SO3modD2";
    case OrbitShape::SO3modC2: return "SO3modC2";
    case OrbitShape::SO3: return "SO3";
  }
  return "?";
}

OrbitShape shape_of(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::SU2: return OrbitShape::Point;
    case SubgroupClass::Kinf: return OrbitShape::SO3modDinf;
    case SubgroupClass::K2: return OrbitShape::SO3modD2;
    case SubgroupClass::U1: return OrbitShape::Sphere2;
    case SubgroupClass::Z4: return OrbitShape::SO3modC2;
    case SubgroupClass::Z2: return OrbitShape::SO3;
  }
  return OrbitShape::SO3;
}

int continuous_dim_of(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::SU2: return 3;
    case SubgroupClass::Kinf:
    case SubgroupClass::U1: return 1;
    default: return 0;
  }
}

StabilizerKernel continuous_stabilizer(const PauliForm& pf,
                                       const ClassifyOptions& opt) {
  Eigen::Matrix<double, 15, 3> m;
  m.block<3, 3>(0, 0) = skew(pf.a);
  m.block<3, 3>(3, 0) = skew(pf.b);
  for (int j = 0; j < 3; ++j) {
    const Mat3 comm = skew(Vec3::Unit(j)) * pf.T - pf.T * skew(Vec3::Unit(j));
    m.block<9, 1>(6, j) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(comm.data());
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 15, 3>> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  StabilizerKernel out;
  out.singular_values = svd.singularValues();
  const double threshold =
      std::max(opt.tol * out.singular_values[0], opt.tol_abs);
  for (int i = 0; i < 3; ++i) {
    const double s = out.singular_values[i];
    if (s < threshold) {
      ++out.dim;
      out.axes.push_back(svd.matrixV().col(i));
    }
    if (s >= threshold / 10.0 && s <= threshold * 10.0) out.ambiguous = true;
  }
  return out;
}

namespace {

double pi_action_residual(const Vec3& u, const PauliForm& pf) {
  const Mat3 r = pi_rotation(u);
  double res = (r * pf.a - pf.a).cwiseAbs().maxCoeff();
  res = std::max(res, (r * pf.b - pf.b).cwiseAbs().maxCoeff());
  res = std::max(res, (r * pf.T * r.transpose() - pf.T).cwiseAbs().maxCoeff());
  return res;
}

bool axis_seen(const std::vector<Vec3>& axes, const Vec3& u, double tol) {
  for (const Vec3& v : axes)
    if (std::min((u - v).norm(), (u + v).norm()) <= tol) return true;
  return false;
}

}  // namespace

PiAxes discrete_pi_axes(const PauliForm& pf, const ClassifyOptions& opt) {
  const double scale = pf.coeff_norm();
  const double threshold = std::max(opt.tol * scale, opt.tol_abs);

  // Candidate axes. The residual filter is the arbiter, so the candidate
  // set may be generous: the vee of the antisymmetric part (the only
  // possibility when T is not symmetric), eigenvectors of the symmetric
  // part, and the Bloch directions (which select the representative
  // inside a degenerate eigen-subspace).
  std::vector<Vec3> candidates;
  const Mat3 w_mat = pf.T - pf.T.transpose();
  const Vec3 w(w_mat(2, 1), w_mat(0, 2), w_mat(1, 0));
  if (w.norm() > threshold) candidates.push_back(w.normalized());

  const Mat3 t_sym = 0.5 * (pf.T + pf.T.transpose());
  Eigen::SelfAdjointEigenSolver<Mat3> es(t_sym);
  for (int i = 0; i < 3; ++i) candidates.push_back(es.eigenvectors().col(i));
  if (pf.a.norm() > threshold) candidates.push_back(pf.a.normalized());
  if (pf.b.norm() > threshold) candidates.push_back(pf.b.normalized());

  PiAxes out;
  for (const Vec3& u : candidates) {
    if (axis_seen(out.axes, u, 1e-3)) continue;
    const double res = pi_action_residual(u, pf);
    if (res <= threshold / 10.0) {
      out.axes.push_back(u);
      out.worst_accepted = std::max(out.worst_accepted, res);
    } else if (res <= threshold * 10.0) {
      out.ambiguous = true;
    }
  }
  return out;
}

namespace {

IsotropyReport make_report(const SubgroupDescriptor& d) {
  IsotropyReport rep;
  rep.descriptor = d;
  rep.shape = shape_of(d.cls);
  rep.continuous_dim = continuous_dim_of(d.cls);
  switch (d.cls) {
    case SubgroupClass::Z4:
    case SubgroupClass::U1:
      rep.pi_axes = {d.axis};
      break;
    case SubgroupClass::K2:
      rep.pi_axes = {d.frame.col(0), d.frame.col(1), d.frame.col(2)};
      break;
    case SubgroupClass::Kinf:
      // representative frame; the perpendicular pi axes form a circle
      rep.pi_axes = {d.axis, d.pi_axis, d.axis.cross(d.pi_axis)};
      break;
    default:
      break;
  }
  return rep;
}

Mat3 orthonormalized_frame(const Vec3& u1, const Vec3& u2) {
  Mat3 f;
  f.col(0) = u1.normalized();
  f.col(1) = (u2 - u2.dot(f.col(0)) * f.col(0)).normalized();
  f.col(2) = f.col(0).cross(f.col(1));
  return f;
}

}  // namespace

IsotropyReport classify(const PauliForm& pf, const ClassifyOptions& opt) {
  const double scale = pf.coeff_norm();
  const double threshold = std::max(opt.tol * scale, opt.tol_abs);

  const StabilizerKernel kern = continuous_stabilizer(pf, opt);
  if (kern.ambiguous)
    throw AmbiguousToleranceError(
        "stabilizer kernel singular value inside the tolerance band",
        kern.singular_values.minCoeff(), threshold);

  IsotropyReport rep;
  if (kern.dim == 3) {
    rep = make_report(SubgroupDescriptor::su2());
  } else if (kern.dim == 2) {
    // so(3) has no 2-dimensional subalgebra; this is a tolerance artifact.
    throw AmbiguousToleranceError("stabilizer kernel dimension 2 is not a"
                                  " subalgebra; tolerance artifact",
                                  kern.singular_values[1], threshold);
  } else if (kern.dim == 1) {
    const Vec3 k = kern.axes[0];
    // A pi axis perpendicular to the continuous axis upgrades U(1) to
    // Kinf; it exists iff the Kinf projector already fixes the state.
    const PauliForm proj = project(SubgroupDescriptor::kinf(k), pf);
    const double res = pf.coeff_distance(proj);
    if (res <= threshold / 10.0) {
      rep = make_report(SubgroupDescriptor::kinf(k));
      rep.residuals["kinf_projector"] = res;
    } else if (res <= threshold * 10.0) {
      throw AmbiguousToleranceError(
          "Kinf-vs-U1 residual inside the tolerance band", res, threshold);
    } else {
      rep = make_report(SubgroupDescriptor::u1(k));
      rep.residuals["kinf_projector"] = res;
    }
  } else {
    PiAxes axes = discrete_pi_axes(pf, opt);
    if (axes.ambiguous)
      throw AmbiguousToleranceError(
          "pi-axis action residual inside the tolerance band",
          axes.worst_accepted, threshold);
    if (axes.axes.size() == 2) {
      // Two clean pi axes force the third (their product is the pi
      // rotation about the cross axis); re-test it directly.
      const Vec3 u3 = axes.axes[0].cross(axes.axes[1]).normalized();
      const double res = pi_action_residual(u3, pf);
      if (res <= threshold / 10.0)
        axes.axes.push_back(u3);
      else
        throw AmbiguousToleranceError(
            "two pi axes accepted but their product is borderline", res,
            threshold);
    }
    if (axes.axes.size() == 3) {
      rep = make_report(SubgroupDescriptor::k2(
          orthonormalized_frame(axes.axes[0], axes.axes[1])));
    } else if (axes.axes.size() == 1) {
      rep = make_report(SubgroupDescriptor::z4(axes.axes[0]));
    } else if (axes.axes.empty()) {
      rep = make_report(SubgroupDescriptor::z2());
    } else {
      throw AmbiguousToleranceError("more than three pi axes accepted",
                                    axes.worst_accepted, threshold);
    }
    rep.residuals["pi_axis_action"] = axes.worst_accepted;
  }

  for (int i = 0; i < 3; ++i)
    rep.residuals["kernel_sigma_" + std::to_string(i)] =
        kern.singular_values[i];
  rep.residuals["fixed_point"] = fixed_point_residual(rep.descriptor, pf);
  return rep;
}

IsotropyReport classify(const DensityMatrix4& rho, const ClassifyOptions& opt) {
  return classify(decompose(rho), opt);
}

namespace {

double axis_objective(SubgroupClass cls, const Vec3& axis, const PauliForm& pf) {
  SubgroupDescriptor d;
  switch (cls) {
    case SubgroupClass::Z4: d = SubgroupDescriptor::z4(axis); break;
    case SubgroupClass::U1: d = SubgroupDescriptor::u1(axis); break;
    default: d = SubgroupDescriptor::kinf(axis); break;
  }
  return trace_distance(pf, project(d, pf));
}

double frame_objective(const Mat3& frame, const PauliForm& pf) {
  return trace_distance(pf, project(SubgroupDescriptor::k2(frame), pf));
}

double refine_axis(SubgroupClass cls, const PauliForm& pf, Vec3& axis) {
  double best = axis_objective(cls, axis, pf);
  for (double step : {0.2, 0.02}) {
    const Mat3 f = complete_frame(axis);
    auto obj = [&](const Eigen::VectorXd& x) {
      const Vec3 k = (axis + x[0] * f.col(1) + x[1] * f.col(2)).normalized();
      return axis_objective(cls, k, pf);
    };
    const auto r = nelder_mead(obj, Eigen::Vector2d::Zero(), step, 80);
    if (r.value < best) {
      axis = (axis + r.x[0] * f.col(1) + r.x[1] * f.col(2)).normalized();
      best = r.value;
    }
  }
  return best;
}

double refine_frame(const PauliForm& pf, Mat3& frame) {
  double best = frame_objective(frame, pf);
  for (double step : {0.2, 0.02}) {
    const Mat3 base = frame;
    auto obj = [&](const Eigen::VectorXd& x) {
      const Vec3 rv(x[0], x[1], x[2]);
      const double angle = rv.norm();
      const Mat3 rot = angle < 1e-14
                           ? Mat3::Identity()
                           : axis_angle_rotation(rv / angle, angle);
      return frame_objective(rot * base, pf);
    };
    const auto r = nelder_mead(obj, Eigen::Vector3d::Zero(), step, 120);
    if (r.value < best) {
      const Vec3 rv(r.x[0], r.x[1], r.x[2]);
      const double angle = rv.norm();
      if (angle >= 1e-14) frame = axis_angle_rotation(rv / angle, angle) * frame;
      best = r.value;
    }
  }
  return best;
}

}  // namespace

double class_min_residual(SubgroupClass cls, const PauliForm& pf,
                          SubgroupDescriptor* best_desc,
                          int seed_grid_frequency) {
  switch (cls) {
    case SubgroupClass::Z2: {
      if (best_desc) *best_desc = SubgroupDescriptor::z2();
      return 0.0;
    }
    case SubgroupClass::SU2: {
      if (best_desc) *best_desc = SubgroupDescriptor::su2();
      return trace_distance(pf, project(SubgroupDescriptor::su2(), pf));
    }
    case SubgroupClass::K2: {
      const CanonicalForm cf = canonical_form(pf);
      Eigen::SelfAdjointEigenSolver<Mat3> es(0.5 * (pf.T + pf.T.transpose()));
      std::vector<Mat3> seeds = {cf.c_basis, cf.d_basis, es.eigenvectors(),
                                 Mat3::Identity()};
      double best = std::numeric_limits<double>::infinity();
      Mat3 best_frame = Mat3::Identity();
      for (Mat3 f : seeds) {
        if (f.determinant() < 0) f.col(2) *= -1.0;
        const double r = refine_frame(pf, f);
        if (r < best) {
          best = r;
          best_frame = f;
        }
      }
      if (best_desc) *best_desc = SubgroupDescriptor::k2(best_frame);
      return best;
    }
    default: {
      // Axis classes: canonical frames, Bloch directions and the
      // icosphere grid seed a local search on S^2.
      const CanonicalForm cf = canonical_form(pf);
      std::vector<Vec3> seeds;
      for (int i = 0; i < 3; ++i) {
        seeds.push_back(cf.c_basis.col(i));
        seeds.push_back(cf.d_basis.col(i));
      }
      if (pf.a.norm() > 1e-14) seeds.push_back(pf.a.normalized());
      if (pf.b.norm() > 1e-14) seeds.push_back(pf.b.normalized());
      const std::vector<Vec3> grid = icosphere_vertices(seed_grid_frequency);
      seeds.insert(seeds.end(), grid.begin(), grid.end());

      // Rank all seeds, refine the few best.
      std::vector<std::pair<double, Vec3>> ranked;
      ranked.reserve(seeds.size());
      for (const Vec3& s : seeds) ranked.push_back({axis_objective(cls, s, pf), s});
      std::sort(ranked.begin(), ranked.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      const int n_refine = std::min<int>(3, static_cast<int>(ranked.size()));
      double best = ranked.front().first;
      Vec3 best_axis = ranked.front().second;
      for (int i = 0; i < n_refine; ++i) {
        Vec3 axis = ranked[i].second;
        const double r = refine_axis(cls, pf, axis);
        if (r < best) {
          best = r;
          best_axis = axis;
        }
      }
      if (best_desc) {
        switch (cls) {
          case SubgroupClass::Z4: *best_desc = SubgroupDescriptor::z4(best_axis); break;
          case SubgroupClass::U1: *best_desc = SubgroupDescriptor::u1(best_axis); break;
          default: *best_desc = SubgroupDescriptor::kinf(best_axis); break;
        }
      }
      return best;
    }
  }
}

IsotropyReport smoothed_classify(const PauliForm& pf, double eps,
                                 const ClassifyOptions& opt) {
  if (eps <= 0.0) return classify(pf, opt);

  static const SubgroupClass order[] = {SubgroupClass::SU2, SubgroupClass::Kinf,
                                        SubgroupClass::U1, SubgroupClass::K2,
                                        SubgroupClass::Z4, SubgroupClass::Z2};
  std::map<std::string, double> minima;
  for (SubgroupClass cls : order) {
    SubgroupDescriptor desc;
    const double r = class_min_residual(cls, pf, &desc);
    minima["min_residual_" + to_string(cls)] = r;
    if (r <= eps) {
      IsotropyReport rep = make_report(desc);
      rep.residuals = std::move(minima);
      rep.residuals["accepted_min_residual"] = r;
      return rep;
    }
  }
  // Unreachable: Z2 has residual zero.
  IsotropyReport rep = make_report(SubgroupDescriptor::z2());
  rep.residuals = std::move(minima);
  return rep;
}

}  // namespace isolab
