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

#include "isolab/su2.hpp"

#include <cmath>

#include "isolab/errors.hpp"

namespace isolab {

GroupElement GroupElement::from_axis_angle(const Vec3& r, double phi) {
  return {std::cos(phi), std::sin(phi) * r.normalized()};
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  // (w1 + i v1.s)(w2 + i v2.s) = (w1 w2 - v1.v2) + i (w1 v2 + w2 v1 - v1 x v2).s
  return {w * o.w - v.dot(o.v), w * o.v + o.w * v - v.cross(o.v)};
}

GroupElement GroupElement::normalized() const {
  const double n = norm();
  return {w / n, v / n};
}

Mat2c GroupElement::matrix() const {
  const cplx i(0.0, 1.0);
  Mat2c m = w * Mat2c::Identity();
  for (int k = 0; k < 3; ++k) m += i * v[k] * pauli(k);
  return m;
}

double GroupElement::angle_from_identity() const {
  return std::acos(std::min(1.0, std::abs(w)));
}

Mat3 rotation_of(const GroupElement& g) {
  const double w = g.w;
  const Vec3& v = g.v;
  return (w * w - v.squaredNorm()) * Mat3::Identity() +
         2.0 * v * v.transpose() - 2.0 * w * skew(v);
}

GroupElement group_element_from_rotation(const Mat3& r) {
  // Eigen's quaternion convention differs from ours by the sign of the
  // vector part (its adjoint action carries +2w [v]x, ours -2w [v]x).
  const Eigen::Quaterniond q(r);
  return {q.w(), Vec3(-q.x(), -q.y(), -q.z())};
}

PauliForm act(const GroupElement& g, const PauliForm& pf) {
  const Mat3 r = rotation_of(g);
  PauliForm out;
  out.a = r * pf.a;
  out.b = r * pf.b;
  out.T = r * pf.T * r.transpose();
  return out;
}

Mat4c act_matrix(const GroupElement& g, const Mat4c& rho) {
  const Mat4c u = kron(g.matrix(), g.matrix());
  return u * rho * u.adjoint();
}

std::string to_string(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::Z2: return "Z2";
    case SubgroupClass::Z4: return "Z4";
    case SubgroupClass::U1: return "U1";
    case SubgroupClass::K2: return "K2";
    case SubgroupClass::Kinf: return "Kinf";
    case SubgroupClass::SU2: return "SU2";
  }
  return "?";
}

SubgroupClass subgroup_class_from_string(const std::string& s) {
  if (s == "Z2") return SubgroupClass::Z2;
  if (s == "Z4") return SubgroupClass::Z4;
  if (s == "U1") return SubgroupClass::U1;
  if (s == "K2") return SubgroupClass::K2;
  if (s == "Kinf") return SubgroupClass::Kinf;
  if (s == "SU2") return SubgroupClass::SU2;
  throw InvalidInputError("unknown subgroup class '" + s + "'");
}

SubgroupDescriptor SubgroupDescriptor::z2() { return {}; }

SubgroupDescriptor SubgroupDescriptor::z4(const Vec3& axis) {
  SubgroupDescriptor d;
  d.cls = SubgroupClass::Z4;
  d.axis = axis.normalized();
  return d;
}

SubgroupDescriptor SubgroupDescriptor::u1(const Vec3& axis) {
  SubgroupDescriptor d;
  d.cls = SubgroupClass::U1;
  d.axis = axis.normalized();
  return d;
}

SubgroupDescriptor SubgroupDescriptor::k2(const Mat3& frame) {
  SubgroupDescriptor d;
  d.cls = SubgroupClass::K2;
  d.frame = frame;
  return d;
}

SubgroupDescriptor SubgroupDescriptor::kinf(const Vec3& axis) {
  return kinf(axis, orthogonal_unit(axis.normalized()));
}

SubgroupDescriptor SubgroupDescriptor::kinf(const Vec3& axis, const Vec3& pi_axis) {
  SubgroupDescriptor d;
  d.cls = SubgroupClass::Kinf;
  d.axis = axis.normalized();
  Vec3 p = pi_axis - pi_axis.dot(d.axis) * d.axis;
  d.pi_axis = p.norm() > 1e-12 ? Vec3(p.normalized())
                               : orthogonal_unit(d.axis);
  d.frame = Mat3::Identity();
  d.frame.col(0) = d.axis;
  d.frame.col(1) = d.pi_axis;
  d.frame.col(2) = d.axis.cross(d.pi_axis);
  return d;
}

SubgroupDescriptor SubgroupDescriptor::su2() {
  SubgroupDescriptor d;
  d.cls = SubgroupClass::SU2;
  return d;
}

namespace {
bool same_axis(const Vec3& u, const Vec3& v, double tol) {
  return std::min((u - v).norm(), (u + v).norm()) <= tol;
}
}  // namespace

bool SubgroupDescriptor::same_subgroup(const SubgroupDescriptor& o,
                                       double tol) const {
  if (cls != o.cls) return false;
  switch (cls) {
    case SubgroupClass::Z2:
    case SubgroupClass::SU2:
      return true;
    case SubgroupClass::Z4:
    case SubgroupClass::U1:
    case SubgroupClass::Kinf:
      // The Kinf pi-axis is pure gauge: any perpendicular axis names the
      // same subgroup.
      return same_axis(axis, o.axis, tol);
    case SubgroupClass::K2: {
      for (int i = 0; i < 3; ++i) {
        bool found = false;
        for (int j = 0; j < 3 && !found; ++j)
          found = same_axis(frame.col(i), o.frame.col(j), tol);
        if (!found) return false;
      }
      return true;
    }
  }
  return false;
}

QuadratureRule subgroup_quadrature(const SubgroupDescriptor& H, int n_circle) {
  QuadratureRule rule;
  rule.source = H;
  auto add = [&rule](const GroupElement& g, double w) {
    rule.nodes.push_back(g);
    rule.weights.push_back(w);
  };
  const bool has_circle = H.cls == SubgroupClass::U1 ||
                          H.cls == SubgroupClass::Kinf ||
                          H.cls == SubgroupClass::SU2;
  if (has_circle && n_circle < 5)
    throw InvalidInputError("n_circle must be >= 5 for circle components");

  switch (H.cls) {
    case SubgroupClass::Z2:
      add(GroupElement::identity(), 0.5);
      add(GroupElement::minus_identity(), 0.5);
      break;
    case SubgroupClass::Z4: {
      add(GroupElement::identity(), 0.25);
      add(GroupElement::pi_flip(H.axis), 0.25);
      add(GroupElement::minus_identity(), 0.25);
      add({0.0, -H.axis}, 0.25);
      break;
    }
    case SubgroupClass::K2: {
      add(GroupElement::identity(), 0.125);
      add(GroupElement::minus_identity(), 0.125);
      for (int i = 0; i < 3; ++i) {
        add(GroupElement::pi_flip(H.frame.col(i)), 0.125);
        add({0.0, -Vec3(H.frame.col(i))}, 0.125);
      }
      break;
    }
    case SubgroupClass::U1: {
      for (int k = 0; k < n_circle; ++k) {
        const double theta = 2.0 * M_PI * k / n_circle;
        add(GroupElement::from_axis_angle(H.axis, theta), 1.0 / n_circle);
      }
      break;
    }
    case SubgroupClass::Kinf: {
      const GroupElement flip = GroupElement::pi_flip(H.pi_axis);
      for (int k = 0; k < n_circle; ++k) {
        const double theta = 2.0 * M_PI * k / n_circle;
        const GroupElement rot = GroupElement::from_axis_angle(H.axis, theta);
        add(rot, 0.5 / n_circle);
        add(flip * rot, 0.5 / n_circle);
      }
      break;
    }
    case SubgroupClass::SU2: {
      // Haar = (2/pi) sin^2(phi) dphi x uniform directions. The trapezoid
      // handles the phi harmonics; the icosahedron handles the degree-4
      // direction dependence of the adjoint action.
      const std::vector<Vec3> dirs = icosphere_vertices(1);
      double wsum = 0.0;
      std::vector<double> wphi(n_circle);
      for (int k = 0; k < n_circle; ++k) {
        const double phi = 2.0 * M_PI * k / n_circle;
        wphi[k] = std::sin(phi) * std::sin(phi);
        wsum += wphi[k];
      }
      for (int k = 0; k < n_circle; ++k) {
        if (wphi[k] == 0.0) continue;
        const double phi = 2.0 * M_PI * k / n_circle;
        for (const Vec3& r : dirs)
          add(GroupElement::from_axis_angle(r, phi),
              wphi[k] / (wsum * dirs.size()));
      }
      break;
    }
  }
  return rule;
}

bool contains_element(const SubgroupDescriptor& H, const GroupElement& g,
                      double tol) {
  const GroupElement q = g.normalized();
  const double vn = q.v.norm();
  auto is_pm_one = [&] { return vn <= tol; };
  auto v_parallel = [&](const Vec3& axis) {
    return vn <= tol || q.v.cross(axis).norm() <= tol * vn + tol;
  };
  switch (H.cls) {
    case SubgroupClass::SU2:
      return true;
    case SubgroupClass::Z2:
      return is_pm_one();
    case SubgroupClass::Z4:
      return is_pm_one() || (std::abs(q.w) <= tol && v_parallel(H.axis));
    case SubgroupClass::U1:
      return v_parallel(H.axis);
    case SubgroupClass::K2: {
      if (is_pm_one()) return true;
      if (std::abs(q.w) > tol) return false;
      for (int i = 0; i < 3; ++i)
        if (v_parallel(H.frame.col(i))) return true;
      return false;
    }
    case SubgroupClass::Kinf:
      // Either on the U(1) circle about the axis, or a pi flip about a
      // perpendicular direction.
      if (v_parallel(H.axis)) return true;
      return std::abs(q.w) <= tol && std::abs(q.v.dot(H.axis)) <= tol;
  }
  return false;
}

GroupElement haar_element(Rng& rng) {
  GroupElement g{rng.normal(), Vec3(rng.normal(), rng.normal(), rng.normal())};
  return g.normalized();
}

std::vector<GroupElement> haar_sample(Rng& rng, int n) {
  std::vector<GroupElement> out;
  out.reserve(std::max(0, n));
  for (int i = 0; i < n; ++i) out.push_back(haar_element(rng));
  return out;
}

}  // namespace isolab
