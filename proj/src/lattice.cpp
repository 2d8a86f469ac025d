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

#include "isolab/lattice.hpp"

#include <array>

namespace isolab {

namespace {

int class_index(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::Z2: return 0;
    case SubgroupClass::Z4: return 1;
    case SubgroupClass::U1: return 2;
    case SubgroupClass::K2: return 3;
    case SubgroupClass::Kinf: return 4;
    case SubgroupClass::SU2: return 5;
  }
  return 0;
}

// leq_table[i][j]: class i is below-or-equal class j on the Hasse
// diagram (reflexive-transitive closure of the edge list).
constexpr bool kLeqTable[6][6] = {
    // Z2    Z4     U1     K2     Kinf   SU2
    {true, true, true, true, true, true},      // Z2
    {false, true, true, true, true, true},     // Z4
    {false, false, true, false, true, true},   // U1
    {false, false, false, true, true, true},   // K2
    {false, false, false, false, true, true},  // Kinf
    {false, false, false, false, false, true}, // SU2
};

bool same_axis(const Vec3& u, const Vec3& v, double tol) {
  return std::min((u - v).norm(), (u + v).norm()) <= tol;
}

bool axis_in_frame(const Vec3& u, const Mat3& frame, double tol) {
  for (int i = 0; i < 3; ++i)
    if (same_axis(u, frame.col(i), tol)) return true;
  return false;
}

bool axis_perpendicular(const Vec3& u, const Vec3& v, double tol) {
  return std::abs(u.dot(v)) <= tol;
}

}  // namespace

bool class_leq(SubgroupClass c1, SubgroupClass c2) {
  return kLeqTable[class_index(c1)][class_index(c2)];
}

SubgroupClass join_class(SubgroupClass c1, SubgroupClass c2) {
  static const SubgroupClass all[] = {SubgroupClass::Z2,  SubgroupClass::Z4,
                                      SubgroupClass::U1,  SubgroupClass::K2,
                                      SubgroupClass::Kinf, SubgroupClass::SU2};
  SubgroupClass best = SubgroupClass::SU2;
  for (SubgroupClass c : all)
    if (class_leq(c1, c) && class_leq(c2, c) && class_leq(c, best)) best = c;
  return best;
}

bool leq(const SubgroupDescriptor& H1, const SubgroupDescriptor& H2,
         double tol) {
  if (!class_leq(H1.cls, H2.cls)) return false;
  if (H1.cls == SubgroupClass::Z2 || H2.cls == SubgroupClass::SU2) return true;

  switch (H1.cls) {
    case SubgroupClass::Z4:
      switch (H2.cls) {
        case SubgroupClass::Z4:
        case SubgroupClass::U1:
          return same_axis(H1.axis, H2.axis, tol);
        case SubgroupClass::K2:
          return axis_in_frame(H1.axis, H2.frame, tol);
        case SubgroupClass::Kinf:
          // i r.sigma lies in Kinf(k) iff r is the axis or perpendicular
          // to it.
          return same_axis(H1.axis, H2.axis, tol) ||
                 axis_perpendicular(H1.axis, H2.axis, tol);
        default:
          return false;
      }
    case SubgroupClass::U1:
      // A circle fits in another circle (same axis) or in Kinf's circle.
      return (H2.cls == SubgroupClass::U1 || H2.cls == SubgroupClass::Kinf) &&
             same_axis(H1.axis, H2.axis, tol);
    case SubgroupClass::K2:
      if (H2.cls == SubgroupClass::K2) return H1.same_subgroup(H2, tol);
      if (H2.cls == SubgroupClass::Kinf) {
        // All eight elements land in Kinf iff one frame axis is the Kinf
        // axis (the other two are then automatically perpendicular).
        return axis_in_frame(H2.axis, H1.frame, tol);
      }
      return false;
    case SubgroupClass::Kinf:
      return H2.cls == SubgroupClass::Kinf && same_axis(H1.axis, H2.axis, tol);
    default:
      return false;
  }
}

SubgroupDescriptor meet(const SubgroupDescriptor& H1,
                        const SubgroupDescriptor& H2, double tol) {
  if (H1.cls == SubgroupClass::SU2) return H2;
  if (H2.cls == SubgroupClass::SU2) return H1;
  if (H1.cls == SubgroupClass::Z2 || H2.cls == SubgroupClass::Z2)
    return SubgroupDescriptor::z2();
  if (leq(H1, H2, tol)) return H1;
  if (leq(H2, H1, tol)) return H2;

  // Symmetric case analysis on incomparable pairs.
  const SubgroupDescriptor* a = &H1;
  const SubgroupDescriptor* b = &H2;
  if (class_index(a->cls) > class_index(b->cls)) std::swap(a, b);

  auto z4_or_z2 = [&](const Vec3& axis, bool cond) {
    return cond ? SubgroupDescriptor::z4(axis) : SubgroupDescriptor::z2();
  };

  switch (a->cls) {
    case SubgroupClass::Z4:
      switch (b->cls) {
        case SubgroupClass::Z4:
        case SubgroupClass::U1:
          return SubgroupDescriptor::z2();  // inclusion handled above
        case SubgroupClass::K2:
          return z4_or_z2(a->axis, axis_in_frame(a->axis, b->frame, tol));
        case SubgroupClass::Kinf:
          return z4_or_z2(a->axis,
                          same_axis(a->axis, b->axis, tol) ||
                              axis_perpendicular(a->axis, b->axis, tol));
        default:
          break;
      }
      break;
    case SubgroupClass::U1:
      switch (b->cls) {
        case SubgroupClass::U1:
          return SubgroupDescriptor::z2();
        case SubgroupClass::K2:
          // The circle contributes only its pi element.
          return z4_or_z2(a->axis, axis_in_frame(a->axis, b->frame, tol));
        case SubgroupClass::Kinf:
          // Same axis handled by inclusion; a perpendicular circle meets
          // the coset only in +-i axis.sigma.
          return z4_or_z2(a->axis, axis_perpendicular(a->axis, b->axis, tol));
        default:
          break;
      }
      break;
    case SubgroupClass::K2:
      switch (b->cls) {
        case SubgroupClass::K2: {
          for (int i = 0; i < 3; ++i)
            if (axis_in_frame(a->frame.col(i), b->frame, tol))
              return SubgroupDescriptor::z4(a->frame.col(i));
          return SubgroupDescriptor::z2();
        }
        case SubgroupClass::Kinf: {
          // Frame axes perpendicular to the Kinf axis survive as pi
          // flips (the parallel case is full inclusion, handled above).
          for (int i = 0; i < 3; ++i)
            if (axis_perpendicular(a->frame.col(i), b->axis, tol))
              return SubgroupDescriptor::z4(a->frame.col(i));
          return SubgroupDescriptor::z2();
        }
        default:
          break;
      }
      break;
    case SubgroupClass::Kinf: {
      if (b->cls == SubgroupClass::Kinf) {
        if (axis_perpendicular(a->axis, b->axis, tol)) {
          // Two perpendicular cylinder groups intersect in the K2 frame
          // spanned by the two axes and their cross product.
          Mat3 f;
          f.col(0) = a->axis;
          f.col(1) = (b->axis - b->axis.dot(a->axis) * a->axis).normalized();
          f.col(2) = f.col(0).cross(f.col(1));
          return SubgroupDescriptor::k2(f);
        }
        const Vec3 cross = a->axis.cross(b->axis);
        if (cross.norm() > tol)
          return SubgroupDescriptor::z4(cross.normalized());
        return SubgroupDescriptor::z2();
      }
      break;
    }
    default:
      break;
  }
  return SubgroupDescriptor::z2();
}

bool in_hat_C(const PauliForm& pf, const SubgroupDescriptor& H, double tol) {
  return fixed_point_residual(H, pf) <= tol;
}

std::string hasse_dot() {
  return "digraph isotropy_lattice {\n"
         "  rankdir=BT;\n"
         "  Z2 -> Z4;\n"
         "  Z4 -> U1;\n"
         "  Z4 -> K2;\n"
         "  U1 -> Kinf;\n"
         "  K2 -> Kinf;\n"
         "  Kinf -> SU2;\n"
         "}\n";
}

}  // namespace isolab
