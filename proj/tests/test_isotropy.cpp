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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "isolab/errors.hpp"
#include "isolab/isotropy.hpp"
#include "isolab/verify.hpp"
#include "support.hpp"

using namespace isolab;

namespace {

bool same_axis(const Vec3& u, const Vec3& v, double tol = 1e-8) {
  return std::min((u - v).norm(), (u + v).norm()) <= tol;
}

PauliForm misaligned_frames_state(Rng& rng) {
  const Mat3 c = rotation_of(haar_element(rng));
  const Mat3 d = rotation_of(haar_element(rng));
  PauliForm pf;
  pf.T = 0.45 * c.col(0) * d.col(0).transpose() +
         0.25 * c.col(1) * d.col(1).transpose() -
         0.10 * c.col(2) * d.col(2).transpose();
  return pf;
}

}  // namespace

TEST_CASE("continuous stabilizer kernel") {
  SUBCASE("fully symmetric state has dimension 3") {
    CHECK(continuous_stabilizer(PauliForm{}).dim == 3);
    CHECK(continuous_stabilizer(decompose(bell_psi_minus())).dim == 3);
  }
  SUBCASE("axially symmetric T-state has dimension 1 with the right axis") {
    PauliForm pf;
    pf.T = Vec3(0.3, 0.3, -0.2).asDiagonal();
    const StabilizerKernel k = continuous_stabilizer(pf);
    REQUIRE(k.dim == 1);
    CHECK(same_axis(k.axes[0], Vec3::UnitZ()));
  }
  SUBCASE("generic diagonal T has dimension 0") {
    PauliForm pf;
    pf.T = Vec3(0.5, 0.2, -0.1).asDiagonal();
    CHECK(continuous_stabilizer(pf).dim == 0);
  }
  SUBCASE("kernel dimension matches the finite-difference action rank") {
    Rng rng(1);
    for (SubgroupClass cls :
         {SubgroupClass::SU2, SubgroupClass::Kinf, SubgroupClass::K2,
          SubgroupClass::U1, SubgroupClass::Z4, SubgroupClass::Z2}) {
      for (int i = 0; i < 5; ++i) {
        const PauliForm pf = decompose(random_state_of_class(cls, rng));
        const StabilizerKernel k = continuous_stabilizer(pf);
        CHECK(k.dim == 3 - testing::action_derivative_rank(pf));
      }
    }
  }
}

TEST_CASE("discrete pi axes") {
  SUBCASE("distinct diagonal T yields the three coordinate axes") {
    PauliForm pf;
    pf.T = Vec3(0.5, 0.2, -0.3).asDiagonal();
    const PiAxes axes = discrete_pi_axes(pf);
    REQUIRE(axes.axes.size() == 3);
    for (int i = 0; i < 3; ++i) {
      bool found = false;
      for (const Vec3& u : axes.axes) found = found || same_axis(u, Vec3::Unit(i));
      CHECK(found);
    }
  }
  SUBCASE("aligned Bloch vectors break the frame down to one axis") {
    PauliForm pf;
    pf.T = Vec3(0.5, 0.2, -0.3).asDiagonal();
    pf.a = pf.b = Vec3(0, 0, 0.4);
    const PiAxes axes = discrete_pi_axes(pf);
    REQUIRE(axes.axes.size() == 1);
    CHECK(same_axis(axes.axes[0], Vec3::UnitZ()));
  }
  SUBCASE("misaligned frames admit no pi axis") {
    Rng rng(2);
    for (int i = 0; i < 20; ++i)
      CHECK(discrete_pi_axes(misaligned_frames_state(rng)).axes.empty());
  }
}

TEST_CASE("classify: Bell golden set") {
  SUBCASE("singlet is SU2 / Point") {
    const IsotropyReport rep = classify(decompose(bell_psi_minus()));
    CHECK(rep.descriptor.cls == SubgroupClass::SU2);
    CHECK(rep.shape == OrbitShape::Point);
    CHECK(rep.continuous_dim == 3);
    CHECK(rep.residuals.at("fixed_point") < 1e-10);
  }
  struct TripletCase {
    DensityMatrix4 rho;
    Vec3 axis;
  };
  const TripletCase cases[] = {
      {bell_phi_plus(), Vec3::UnitY()},
      {bell_phi_minus(), Vec3::UnitX()},
      {bell_psi_plus(), Vec3::UnitZ()},
  };
  for (const auto& c : cases) {
    const IsotropyReport rep = classify(decompose(c.rho));
    CHECK(rep.descriptor.cls == SubgroupClass::Kinf);
    CHECK(rep.shape == OrbitShape::SO3modDinf);
    CHECK(rep.continuous_dim == 1);
    CHECK(same_axis(rep.descriptor.axis, c.axis));
    CHECK(rep.residuals.at("fixed_point") < 1e-10);
  }
}

TEST_CASE("classify: representative states of each class") {
  SUBCASE("edge midpoints are Kinf about the matching axis") {
    for (int i = 0; i < 3; ++i) {
      PauliForm pf;
      pf.T = Vec3::Unit(i).asDiagonal();
      pf.T = Vec3::Unit(i) * Vec3::Unit(i).transpose();
      const IsotropyReport rep = classify(pf);
      CHECK(rep.descriptor.cls == SubgroupClass::Kinf);
      CHECK(same_axis(rep.descriptor.axis, Vec3::Unit(i)));
    }
  }
  SUBCASE("generic T-state is K2 with the coordinate frame") {
    const IsotropyReport rep = classify(t_state_form(Vec3(0.5, 0.2, -0.3)));
    CHECK(rep.descriptor.cls == SubgroupClass::K2);
    CHECK(rep.shape == OrbitShape::SO3modD2);
    CHECK(rep.descriptor.same_subgroup(SubgroupDescriptor::k2(Mat3::Identity())));
  }
  SUBCASE("equal perpendicular taus with twisted frames are U1") {
    Rng rng(3);
    const PauliForm pf = decompose(random_state_of_class(SubgroupClass::U1, rng));
    const IsotropyReport rep = classify(pf);
    CHECK(rep.descriptor.cls == SubgroupClass::U1);
    CHECK(rep.shape == OrbitShape::Sphere2);
  }
  SUBCASE("twisted frames with distinct taus are Z4") {
    Rng rng(4);
    const PauliForm pf = decompose(random_state_of_class(SubgroupClass::Z4, rng));
    const IsotropyReport rep = classify(pf);
    CHECK(rep.descriptor.cls == SubgroupClass::Z4);
    CHECK(rep.shape == OrbitShape::SO3modC2);
  }
  SUBCASE("fully misaligned frames are Z2") {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
      const IsotropyReport rep = classify(misaligned_frames_state(rng));
      CHECK(rep.descriptor.cls == SubgroupClass::Z2);
      CHECK(rep.shape == OrbitShape::SO3);
    }
  }
  SUBCASE("local Bloch vectors break Kinf down to Z4") {
    PauliForm pf;
    pf.T = Vec3(0.4, 0.4, -0.2).asDiagonal();
    pf.a = pf.b = Vec3(0.3, 0, 0);  // perpendicular to the U(1) axis z
    const IsotropyReport rep = classify(pf);
    CHECK(rep.descriptor.cls == SubgroupClass::Z4);
    CHECK(same_axis(rep.descriptor.axis, Vec3::UnitX()));
  }
  SUBCASE("aligned Bloch vectors keep U1 on the shared axis") {
    PauliForm pf;
    pf.T = Vec3(0.4, 0.4, -0.2).asDiagonal();
    pf.a = Vec3(0, 0, 0.5);
    pf.b = Vec3(0, 0, -0.2);
    const IsotropyReport rep = classify(pf);
    CHECK(rep.descriptor.cls == SubgroupClass::U1);
    CHECK(same_axis(rep.descriptor.axis, Vec3::UnitZ()));
  }
}

TEST_CASE("classify is covariant under the group action") {
  Rng rng(6);
  for (SubgroupClass cls :
       {SubgroupClass::SU2, SubgroupClass::Kinf, SubgroupClass::K2,
        SubgroupClass::U1, SubgroupClass::Z4, SubgroupClass::Z2}) {
    for (int i = 0; i < 10; ++i) {
      const PauliForm pf = decompose(random_state_of_class(cls, rng));
      const GroupElement g = haar_element(rng);
      const IsotropyReport before = classify(pf);
      const IsotropyReport after = classify(act(g, pf));
      REQUIRE(before.descriptor.cls == cls);
      REQUIRE(after.descriptor.cls == cls);
      const Mat3 r = rotation_of(g);
      switch (cls) {
        case SubgroupClass::Z4:
        case SubgroupClass::U1:
        case SubgroupClass::Kinf:
          CHECK(same_axis(after.descriptor.axis, r * before.descriptor.axis));
          break;
        case SubgroupClass::K2:
          CHECK(after.descriptor.same_subgroup(
              SubgroupDescriptor::k2(r * before.descriptor.frame)));
          break;
        default:
          break;
      }
    }
  }
}

TEST_CASE("classifier consistency with the projectors") {
  Rng rng(7);
  for (SubgroupClass cls :
       {SubgroupClass::SU2, SubgroupClass::Kinf, SubgroupClass::K2,
        SubgroupClass::U1, SubgroupClass::Z4, SubgroupClass::Z2}) {
    for (int i = 0; i < 5; ++i) {
      const PauliForm pf = decompose(random_state_of_class(cls, rng));
      const IsotropyReport rep = classify(pf);
      CHECK(fixed_point_residual(rep.descriptor, pf) <= 1e-8);
      // Any class strictly above on the lattice leaves a real residual.
      if (cls != SubgroupClass::SU2) {
        const double up = class_min_residual(SubgroupClass::SU2, pf, nullptr, 3);
        CHECK(up > 1e-8);
      }
    }
  }
}

TEST_CASE("restriction to the six observed classes on random states") {
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const IsotropyReport rep = classify(decompose(random_state(rng)));
    const SubgroupClass c = rep.descriptor.cls;
    CHECK((c == SubgroupClass::Z2 || c == SubgroupClass::Z4 ||
           c == SubgroupClass::U1 || c == SubgroupClass::K2 ||
           c == SubgroupClass::Kinf || c == SubgroupClass::SU2));
  }
}

TEST_CASE("ambiguous tolerance fixtures") {
  SUBCASE("near-degenerate taus inside the band raise") {
    PauliForm pf;
    pf.T = Vec3(0.5, 0.5 + 3e-9, -0.2).asDiagonal();
    CHECK_THROWS_AS((void)classify(pf), AmbiguousToleranceError);
  }
  SUBCASE("clearly separated taus do not") {
    PauliForm pf;
    pf.T = Vec3(0.5, 0.5 + 3e-5, -0.2).asDiagonal();
    CHECK(classify(pf).descriptor.cls == SubgroupClass::K2);
    pf.T = Vec3(0.5, 0.5 + 1e-12, -0.2).asDiagonal();
    CHECK(classify(pf).descriptor.cls == SubgroupClass::Kinf);
  }
  SUBCASE("near-pi-symmetric Bloch vector raises") {
    PauliForm pf;
    pf.T = Vec3(0.5, 0.2, -0.3).asDiagonal();
    pf.a = Vec3(3e-9, 0, 0.4);  // almost aligned with z
    CHECK_THROWS_AS((void)classify(pf), AmbiguousToleranceError);
  }
}

TEST_CASE("brute-force stabilizer dimension agrees") {
  Rng rng(9);
  for (SubgroupClass cls :
       {SubgroupClass::SU2, SubgroupClass::Kinf, SubgroupClass::K2,
        SubgroupClass::U1, SubgroupClass::Z4, SubgroupClass::Z2}) {
    const PauliForm pf = decompose(random_state_of_class(cls, rng));
    const int expected = continuous_dim_of(cls);
    CHECK(continuous_stabilizer(pf).dim == expected);
    CHECK(testing::brute_force_stabilizer_dim(pf, 800, 17) == expected);
  }
}

TEST_CASE("smoothed classification") {
  SUBCASE("eps = 0 delegates to the exact classifier") {
    const PauliForm pf = t_state_form(Vec3(0.5, 0.2, -0.3));
    CHECK(smoothed_classify(pf, 0.0).descriptor.cls ==
          classify(pf).descriptor.cls);
  }
  SUBCASE("near-Werner T-state smooths to SU2 at eps 0.04") {
    const PauliForm pf = t_state_form(Vec3(-0.9, -0.85, -0.95));
    const IsotropyReport rep = smoothed_classify(pf, 0.04);
    CHECK(rep.descriptor.cls == SubgroupClass::SU2);
    CHECK(rep.residuals.at("accepted_min_residual") ==
          doctest::Approx(0.025).epsilon(1e-9));
  }
  SUBCASE("exact members survive smoothing") {
    CHECK(smoothed_classify(decompose(bell_phi_plus()), 0.04).descriptor.cls ==
          SubgroupClass::Kinf);
  }
  SUBCASE("a state far from all higher classes stays K2") {
    const PauliForm pf = t_state_form(Vec3(0.9, -0.9, 0.1));
    const IsotropyReport rep = smoothed_classify(pf, 0.04);
    CHECK(rep.descriptor.cls == SubgroupClass::K2);
    // independent coarse grid over axes confirms both higher minima
    CHECK(fixed_point_residual(SubgroupDescriptor::su2(), pf) > 0.04);
    double best_kinf = 1e9;
    for (const Vec3& axis : icosphere_vertices(12))
      best_kinf = std::min(
          best_kinf, fixed_point_residual(SubgroupDescriptor::kinf(axis), pf));
    CHECK(best_kinf > 0.04);
    CHECK(rep.residuals.at("min_residual_Kinf") <= best_kinf + 1e-12);
  }
  SUBCASE("tiny eps agrees with exact classes on clean states") {
    Rng rng(10);
    for (SubgroupClass cls :
         {SubgroupClass::SU2, SubgroupClass::Kinf, SubgroupClass::K2,
          SubgroupClass::U1, SubgroupClass::Z4, SubgroupClass::Z2}) {
      const PauliForm pf = decompose(random_state_of_class(cls, rng));
      CHECK(smoothed_classify(pf, 1e-9).descriptor.cls == cls);
    }
  }
}

TEST_CASE("zero-distance mixtures keep their class") {
  Rng rng(11);
  const double eps = 1e-3;
  for (int i = 0; i < 10; ++i) {
    const PauliForm pf1 =
        decompose(random_state_of_class(SubgroupClass::Kinf, rng));
    const PauliForm pf2 =
        decompose(random_state_of_class(SubgroupClass::K2, rng));
    PauliForm m1, m2;
    m1.a = eps * pf1.a; m1.b = eps * pf1.b; m1.T = eps * pf1.T;
    m2.a = eps * pf2.a; m2.b = eps * pf2.b; m2.T = eps * pf2.T;
    CHECK(classify(m1).descriptor.cls == SubgroupClass::Kinf);
    CHECK(classify(m2).descriptor.cls == SubgroupClass::K2);
    CHECK(trace_distance(m1, m2) <= eps + 1e-12);
  }
}
