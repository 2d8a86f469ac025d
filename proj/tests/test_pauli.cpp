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

#include <algorithm>
#include <cmath>

#include "isolab/errors.hpp"
#include "isolab/su2.hpp"

using namespace isolab;

TEST_CASE("pauli matrices and kron basics") {
  for (int i = 0; i < 3; ++i) {
    CHECK((pauli(i) * pauli(i) - Mat2c::Identity()).norm() == doctest::Approx(0));
    CHECK(std::abs(pauli(i).trace()) == doctest::Approx(0));
  }
  CHECK((kron(pauli(3), pauli(3)) - Mat4c::Identity()).norm() ==
        doctest::Approx(0));
  // swap exchanges |01> and |10>
  Eigen::Vector4cd v(0, 1, 0, 0);
  CHECK((swap_gate() * v - Eigen::Vector4cd(0, 0, 1, 0)).norm() ==
        doctest::Approx(0));
}

TEST_CASE("decompose of the named states") {
  SUBCASE("maximally mixed gives zero coefficients") {
    const PauliForm pf = decompose(maximally_mixed());
    CHECK(pf.coeff_norm() == doctest::Approx(0).epsilon(1e-14));
  }
  SUBCASE("phi+ has T = diag(1,-1,1)") {
    const PauliForm pf = decompose(bell_phi_plus());
    CHECK(pf.a.norm() < 1e-14);
    CHECK(pf.b.norm() < 1e-14);
    CHECK((pf.T - Mat3(Vec3(1, -1, 1).asDiagonal())).norm() < 1e-14);
  }
  SUBCASE("singlet has T = -I") {
    const PauliForm pf = decompose(bell_psi_minus());
    CHECK(pf.a.norm() < 1e-14);
    CHECK(pf.b.norm() < 1e-14);
    CHECK((pf.T + Mat3::Identity()).norm() < 1e-14);
  }
  SUBCASE("remaining Bell corners") {
    CHECK((decompose(bell_phi_minus()).T - Mat3(Vec3(-1, 1, 1).asDiagonal()))
              .norm() < 1e-14);
    CHECK((decompose(bell_psi_plus()).T - Mat3(Vec3(1, 1, -1).asDiagonal()))
              .norm() < 1e-14);
  }
}

TEST_CASE("compose inverts decompose and rejects non-states") {
  SUBCASE("zero coefficients give the maximally mixed state") {
    const DensityMatrix4 rho = compose(PauliForm{});
    CHECK((rho.matrix() - 0.25 * Mat4c::Identity()).norm() < 1e-14);
  }
  SUBCASE("diag(1,1,1) is outside the tetrahedron") {
    CHECK_THROWS_AS((void)t_state(Vec3(1, 1, 1)), NotAStateError);
  }
  SUBCASE("diag(1,-1,1) reproduces phi+") {
    const DensityMatrix4 rho = t_state(Vec3(1, -1, 1));
    CHECK((rho.matrix() - bell_phi_plus().matrix()).cwiseAbs().maxCoeff() <
          1e-14);
  }
  SUBCASE("round trip on 1000 random states") {
    Rng rng(7);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const DensityMatrix4 rho = random_state(rng);
      const DensityMatrix4 back = compose(decompose(rho));
      worst = std::max(worst,
                       (rho.matrix() - back.matrix()).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-12);
  }
  SUBCASE("decompose of compose is the identity on coefficients") {
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
      const PauliForm pf = decompose(random_state(rng));
      CHECK(decompose(compose(pf)).coeff_distance(pf) < 1e-12);
    }
  }
  SUBCASE("coefficients of valid states are bounded by one") {
    Rng rng(9);
    for (int i = 0; i < 500; ++i) {
      const PauliForm pf = decompose(random_state(rng));
      CHECK(pf.a.norm() <= 1.0 + 1e-10);
      CHECK(pf.b.norm() <= 1.0 + 1e-10);
      CHECK(pf.T.cwiseAbs().maxCoeff() <= 1.0 + 1e-10);
    }
  }
}

TEST_CASE("density matrix invariants are enforced") {
  Mat4c bad = 0.25 * Mat4c::Identity();
  bad(0, 1) = cplx(0.1, 0.0);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix4{bad}, InvalidStateError);

  Mat4c off_trace = 0.3 * Mat4c::Identity();
  CHECK_THROWS_AS(DensityMatrix4{off_trace}, InvalidStateError);

  Mat4c negative = Mat4c::Zero();
  negative(0, 0) = 1.2;
  negative(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityMatrix4{negative}, InvalidStateError);
}

TEST_CASE("canonical form") {
  SUBCASE("already diagonal T stays put") {
    const CanonicalForm cf = canonical_form(t_state_form(Vec3(1, -1, 1)));
    CHECK((cf.c_basis * cf.taus.asDiagonal() * cf.d_basis.transpose() -
           Mat3(Vec3(1, -1, 1).asDiagonal())).norm() < 1e-12);
    CHECK(cf.c_basis.determinant() == doctest::Approx(1.0));
    CHECK(cf.d_basis.determinant() == doctest::Approx(1.0));
  }
  SUBCASE("zero T uses the identity convention") {
    const CanonicalForm cf = canonical_form(PauliForm{});
    CHECK((cf.c_basis - Mat3::Identity()).norm() == doctest::Approx(0));
    CHECK((cf.d_basis - Mat3::Identity()).norm() == doctest::Approx(0));
    CHECK(cf.taus.norm() == doctest::Approx(0));
  }
  SUBCASE("construct-then-recover round trip") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
      const PauliForm pf = decompose(random_state(rng));
      const CanonicalForm cf = canonical_form(pf);
      CHECK((cf.c_basis * cf.taus.asDiagonal() * cf.d_basis.transpose() - pf.T)
                .cwiseAbs().maxCoeff() < 1e-10);
      CHECK(std::abs(cf.c_basis.determinant() - 1.0) < 1e-10);
      CHECK(std::abs(cf.d_basis.determinant() - 1.0) < 1e-10);
      CHECK((cf.c_basis * cf.c_basis.transpose() - Mat3::Identity()).norm() <
            1e-10);
      CHECK((cf.d_basis * cf.d_basis.transpose() - Mat3::Identity()).norm() <
            1e-10);
      // magnitudes descend
      CHECK(std::abs(cf.taus[0]) >= std::abs(cf.taus[1]) - 1e-12);
      CHECK(std::abs(cf.taus[1]) >= std::abs(cf.taus[2]) - 1e-12);
      // a, b are the Bloch vectors rotated into the frames
      CHECK((cf.c_basis * cf.a - pf.a).norm() < 1e-12);
      CHECK((cf.d_basis * cf.b - pf.b).norm() < 1e-12);
    }
  }
  SUBCASE("known singular values are recovered under rotation") {
    Rng rng(33);
    const Mat3 r = rotation_of(haar_element(rng));
    PauliForm pf;
    pf.T = r * Vec3(0.5, 0.2, -0.1).asDiagonal() * r.transpose();
    const CanonicalForm cf = canonical_form(pf);
    CHECK((cf.taus.cwiseAbs() - Vec3(0.5, 0.2, 0.1)).cwiseAbs().maxCoeff() <
          1e-12);
  }
  SUBCASE("T-state taus live in the Bell tetrahedron") {
    Rng rng(44);
    for (int trial = 0; trial < 200; ++trial) {
      Vec3 taus(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
      if (bell_basis_eigenvalues(taus).minCoeff() < 1e-6) continue;
      const auto coords = bell_diagonal_coords(t_state_form(taus));
      REQUIRE(coords.has_value());
      CHECK(bell_basis_eigenvalues(*coords).minCoeff() >= -1e-10);
      // same state up to axis relabeling: equal Bell-probability multisets
      Eigen::Vector4d p1 = bell_basis_eigenvalues(taus);
      Eigen::Vector4d p2 = bell_basis_eigenvalues(*coords);
      std::sort(p1.data(), p1.data() + 4);
      std::sort(p2.data(), p2.data() + 4);
      CHECK((p1 - p2).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SUBCASE("misaligned frames are not Bell diagonal") {
    PauliForm pf;
    const Vec3 z = Vec3::UnitZ();
    const Mat3 tw = axis_angle_rotation(z, 0.7);
    pf.T = 0.4 * z * z.transpose() +
           0.2 * Vec3::UnitX() * (tw * Vec3::UnitX()).transpose() +
           0.2 * Vec3::UnitY() * (tw * Vec3::UnitY()).transpose();
    CHECK_FALSE(bell_diagonal_coords(pf).has_value());
  }
}

TEST_CASE("trace distance") {
  SUBCASE("coincident states give zero") {
    CHECK(trace_distance(bell_phi_plus(), bell_phi_plus()) ==
          doctest::Approx(0).epsilon(1e-14));
  }
  SUBCASE("orthogonal pure states give one") {
    CHECK(trace_distance(bell_phi_plus(), bell_psi_minus()) ==
          doctest::Approx(1.0));
  }
  SUBCASE("T-state pair matches the Bell-basis closed form") {
    const Vec3 t1(-0.9, -0.85, -0.95);
    const Vec3 t2(-0.9, -0.9, -0.9);
    const double expected =
        0.5 * (bell_basis_eigenvalues(t1) - bell_basis_eigenvalues(t2))
                  .cwiseAbs().sum();
    CHECK(expected == doctest::Approx(0.025));
    CHECK(trace_distance(t_state(t1), t_state(t2)) ==
          doctest::Approx(0.025).epsilon(1e-12));
  }
  SUBCASE("metric properties on random triples") {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
      const DensityMatrix4 x = random_state(rng);
      const DensityMatrix4 y = random_state(rng);
      const DensityMatrix4 z = random_state(rng);
      const double dxy = trace_distance(x, y);
      CHECK(std::abs(dxy - trace_distance(y, x)) < 1e-10);
      CHECK(dxy >= 0.0);
      CHECK(dxy <= 1.0 + 1e-12);
      CHECK(trace_distance(x, z) <= dxy + trace_distance(y, z) + 1e-10);
    }
  }
  SUBCASE("PauliForm overload agrees with the matrix route") {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
      const DensityMatrix4 x = random_state(rng);
      const DensityMatrix4 y = random_state(rng);
      CHECK(trace_distance(decompose(x), decompose(y)) ==
            doctest::Approx(trace_distance(x, y)).epsilon(1e-12));
    }
  }
}

TEST_CASE("relative entropy") {
  CHECK(relative_entropy(bell_phi_plus(), bell_phi_plus()) ==
        doctest::Approx(0).epsilon(1e-12));
  CHECK(relative_entropy(bell_phi_plus(), maximally_mixed()) ==
        doctest::Approx(std::log(4.0)));
  CHECK(std::isinf(relative_entropy(bell_phi_plus(), bell_psi_minus())));
  SUBCASE("finite and nonnegative on random full-rank pairs") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
      const double s = relative_entropy(random_state(rng), random_state(rng));
      CHECK(s >= 0.0);
      CHECK(std::isfinite(s));
    }
  }
}
