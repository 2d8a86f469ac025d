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

#include "isolab/verify.hpp"

#include <cmath>
#include <functional>

#include "isolab/errors.hpp"
#include "isolab/threads.hpp"

namespace isolab {

namespace {

Vec3 random_unit(Rng& rng) {
  Vec3 v(rng.normal(), rng.normal(), rng.normal());
  while (v.norm() < 1e-8) v = Vec3(rng.normal(), rng.normal(), rng.normal());
  return v.normalized();
}

Mat3 random_rotation(Rng& rng) { return rotation_of(haar_element(rng)); }

/// Rotate the columns of f orthogonal to f.col(0) by theta about it.
Mat3 twist_frame(const Mat3& f, double theta) {
  return axis_angle_rotation(f.col(0), theta) * f;
}

/// Scale the coefficients down until the triple composes to a state with
/// a 1e-3 eigenvalue margin.
PauliForm shrink_until_valid(PauliForm pf) {
  for (int i = 0; i < 80; ++i) {
    try {
      if (compose(pf).min_eigenvalue() > 1e-3) return pf;
    } catch (const NotAStateError&) {
    }
    pf.a *= 0.85;
    pf.b *= 0.85;
    pf.T *= 0.85;
  }
  pf.a.setZero();
  pf.b.setZero();
  pf.T.setZero();
  return pf;
}

Vec3 distinct_taus(Rng& rng) {
  for (;;) {
    Vec3 t(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6),
           rng.uniform(-0.6, 0.6));
    if (std::abs(t[0] - t[1]) >= 0.15 && std::abs(t[1] - t[2]) >= 0.15 &&
        std::abs(t[0] - t[2]) >= 0.15)
      return t;
  }
}

}  // namespace

DensityMatrix4 random_state_of_class(SubgroupClass cls, Rng& rng) {
  PauliForm pf;
  switch (cls) {
    case SubgroupClass::SU2: {
      pf.T = rng.uniform(-0.9, 0.3) * Mat3::Identity();
      break;
    }
    case SubgroupClass::Kinf: {
      const double t1 = rng.uniform(-0.5, 0.4);
      double t3 = rng.uniform(-0.6, 0.6);
      if (std::abs(t3 - t1) < 0.15) t3 = t1 + (t3 >= t1 ? 0.15 : -0.15);
      pf.T = Vec3(t1, t1, t3).asDiagonal();
      break;
    }
    case SubgroupClass::K2: {
      pf.T = distinct_taus(rng).asDiagonal();
      break;
    }
    case SubgroupClass::U1: {
      const Mat3 c = random_rotation(rng);
      const Mat3 d = twist_frame(c, rng.uniform(0.4, M_PI - 0.4));
      const double tau1 = rng.uniform(-0.4, 0.4);
      const double tau = rng.uniform(0.15, 0.35);
      pf.T = tau1 * c.col(0) * c.col(0).transpose() +
             tau * (c.col(1) * d.col(1).transpose() +
                    c.col(2) * d.col(2).transpose());
      if (rng.uniform() < 0.5) {
        pf.a = rng.uniform(-0.3, 0.3) * c.col(0);
        pf.b = rng.uniform(-0.3, 0.3) * c.col(0);
      }
      break;
    }
    case SubgroupClass::Z4: {
      const Mat3 c = random_rotation(rng);
      const Mat3 d = twist_frame(c, rng.uniform(0.4, M_PI - 0.4));
      const Vec3 taus = distinct_taus(rng);
      pf.T = taus[0] * c.col(0) * c.col(0).transpose() +
             taus[1] * c.col(1) * d.col(1).transpose() +
             taus[2] * c.col(2) * d.col(2).transpose();
      if (rng.uniform() < 0.5) {
        pf.a = rng.uniform(-0.3, 0.3) * c.col(0);
        pf.b = rng.uniform(-0.3, 0.3) * c.col(0);
      }
      break;
    }
    case SubgroupClass::Z2: {
      const Mat3 c = random_rotation(rng);
      const Mat3 d = random_rotation(rng);
      const Vec3 taus = distinct_taus(rng);
      pf.T = taus[0] * c.col(0) * d.col(0).transpose() +
             taus[1] * c.col(1) * d.col(1).transpose() +
             taus[2] * c.col(2) * d.col(2).transpose();
      pf.a = 0.25 * random_unit(rng);
      pf.b = 0.25 * random_unit(rng);
      break;
    }
  }
  // A random collective rotation puts the parameters in general position
  // without changing the class.
  return compose(act(haar_element(rng), shrink_until_valid(pf)));
}

QubitChannelPTM random_channel(Rng& rng, const Vec3& axis) {
  switch (static_cast<int>(rng.uniform(0.0, 5.0))) {
    case 0: return QubitChannelPTM::depolarizing(rng.uniform(0.2, 0.9));
    case 1: return QubitChannelPTM::rotation(axis, rng.uniform(0.3, 1.2));
    case 2: return QubitChannelPTM::measurement(axis);
    case 3: return QubitChannelPTM::dephasing(axis, rng.uniform(0.2, 0.8));
    default: return QubitChannelPTM::preparation(axis, rng.uniform(0.3, 0.9));
  }
}

namespace {

struct TrialOutcome {
  bool pass = true;
  double residual = 0.0;
};

constexpr SubgroupClass kAllClasses[6] = {
    SubgroupClass::Z2, SubgroupClass::Z4,   SubgroupClass::U1,
    SubgroupClass::K2, SubgroupClass::Kinf, SubgroupClass::SU2};

double coeff_residual(const SubgroupDescriptor& H, const PauliForm& pf) {
  return pf.coeff_distance(project(H, pf));
}

/// Gauge-aware numeric deviation between same-class descriptors.
double descriptor_deviation(const SubgroupDescriptor& d1,
                            const SubgroupDescriptor& d2) {
  auto axis_dev = [](const Vec3& u, const Vec3& v) {
    return std::min((u - v).norm(), (u + v).norm());
  };
  switch (d1.cls) {
    case SubgroupClass::Z4:
    case SubgroupClass::U1:
    case SubgroupClass::Kinf:
      return axis_dev(d1.axis, d2.axis);
    case SubgroupClass::K2: {
      double worst = 0.0;
      for (int i = 0; i < 3; ++i) {
        double best = 2.0;
        for (int j = 0; j < 3; ++j)
          best = std::min(best, axis_dev(d1.frame.col(i), d2.frame.col(j)));
        worst = std::max(worst, best);
      }
      return worst;
    }
    default:
      return 0.0;
  }
}

SubgroupDescriptor rotated_descriptor(const SubgroupDescriptor& d,
                                      const Mat3& r) {
  switch (d.cls) {
    case SubgroupClass::Z4: return SubgroupDescriptor::z4(r * d.axis);
    case SubgroupClass::U1: return SubgroupDescriptor::u1(r * d.axis);
    case SubgroupClass::Kinf:
      return SubgroupDescriptor::kinf(r * d.axis, r * d.pi_axis);
    case SubgroupClass::K2: return SubgroupDescriptor::k2(r * d.frame);
    default: return d;
  }
}

SubgroupDescriptor random_descriptor(SubgroupClass cls, Rng& rng) {
  switch (cls) {
    case SubgroupClass::Z4: return SubgroupDescriptor::z4(random_unit(rng));
    case SubgroupClass::U1: return SubgroupDescriptor::u1(random_unit(rng));
    case SubgroupClass::Kinf: return SubgroupDescriptor::kinf(random_unit(rng));
    case SubgroupClass::K2:
      return SubgroupDescriptor::k2(random_rotation(rng));
    case SubgroupClass::SU2: return SubgroupDescriptor::su2();
    default: return SubgroupDescriptor::z2();
  }
}

/// Random element of the normalizer of H, per class: Kinf(axis) for the
/// axial classes, the octahedral frame rotations for K2, anything for
/// the normal subgroups Z2 and SU2.
GroupElement random_normalizer_element(const SubgroupDescriptor& H, Rng& rng) {
  switch (H.cls) {
    case SubgroupClass::Z4:
    case SubgroupClass::U1:
    case SubgroupClass::Kinf: {
      const GroupElement rot =
          GroupElement::from_axis_angle(H.axis, rng.uniform(0.0, 2.0 * M_PI));
      if (rng.uniform() < 0.5) return rot;
      const Vec3 p = axis_angle_rotation(H.axis, rng.uniform(0.0, 2.0 * M_PI)) *
                     orthogonal_unit(H.axis);
      return GroupElement::pi_flip(p) * rot;
    }
    case SubgroupClass::K2: {
      static const std::vector<Mat3> octa = octahedral_rotations();
      const Mat3 r = H.frame *
                     octa[rng.integer() % octa.size()] *
                     H.frame.transpose();
      return group_element_from_rotation(r);
    }
    default:
      return haar_element(rng);
  }
}

/// A state whose projection depends strongly on the subgroup parameters;
/// witness for the normalizer violation checks.
PauliForm axis_witness(const SubgroupDescriptor& H) {
  PauliForm pf;
  Mat3 f;
  switch (H.cls) {
    case SubgroupClass::K2: f = H.frame; break;
    case SubgroupClass::Z4:
    case SubgroupClass::U1:
    case SubgroupClass::Kinf: f = complete_frame(H.axis); break;
    default: f = Mat3::Identity(); break;
  }
  pf.T = 0.5 * f.col(0) * f.col(0).transpose() +
         0.2 * f.col(1) * f.col(1).transpose() -
         0.1 * f.col(2) * f.col(2).transpose();
  return pf;
}

TrialOutcome check_tensor_bound(Rng& rng) {
  // States as preparation channels; the tensor bound at two-qubit level.
  const int variant = static_cast<int>(rng.uniform(0.0, 3.0));
  Vec3 r1 = rng.uniform(0.2, 0.9) * random_unit(rng);
  Vec3 r2 = rng.uniform(0.2, 0.9) * random_unit(rng);
  if (variant == 1) r2 = rng.uniform(-0.9, 0.9) * r1.normalized();
  if (variant == 2) r1.setZero();

  PauliForm prod;
  prod.a = r1;
  prod.b = r2;
  prod.T = r1 * r2.transpose();

  const SubgroupDescriptor iso1 = r1.norm() < 1e-12
                                      ? SubgroupDescriptor::su2()
                                      : SubgroupDescriptor::u1(r1.normalized());
  const SubgroupDescriptor iso2 = r2.norm() < 1e-12
                                      ? SubgroupDescriptor::su2()
                                      : SubgroupDescriptor::u1(r2.normalized());
  const SubgroupDescriptor m = meet(iso1, iso2);

  TrialOutcome out;
  out.residual = coeff_residual(m, prod);
  const IsotropyReport rep = classify(prod);
  out.pass = out.residual <= 1e-10 && leq(m, rep.descriptor);
  return out;
}

TrialOutcome check_composition_bound(Rng& rng) {
  const Vec3 axis1 = random_unit(rng);
  const Vec3 axis2 = rng.uniform() < 0.5 ? axis1 : random_unit(rng);
  const QubitChannelPTM e = random_channel(rng, axis1);
  const QubitChannelPTM f = random_channel(rng, axis2);
  const SubgroupDescriptor m = meet(channel_isotropy(e).descriptor,
                                    channel_isotropy(f).descriptor);
  const QubitChannelPTM composed = e.after(f);
  PauliForm embed;
  embed.a = composed.t;
  embed.T = composed.lambda;

  TrialOutcome out;
  out.residual = coeff_residual(m, embed);
  out.pass = out.residual <= 1e-10 &&
             leq(m, channel_isotropy(composed).descriptor);
  return out;
}

TrialOutcome check_mixing_bound(Rng& rng) {
  TrialOutcome out;
  if (rng.uniform() < 0.5) {
    const Vec3 axis1 = random_unit(rng);
    const Vec3 axis2 = rng.uniform() < 0.5 ? axis1 : random_unit(rng);
    const QubitChannelPTM e = random_channel(rng, axis1);
    const QubitChannelPTM f = random_channel(rng, axis2);
    const SubgroupDescriptor m = meet(channel_isotropy(e).descriptor,
                                      channel_isotropy(f).descriptor);
    const QubitChannelPTM mixed = e.mix(f, rng.uniform(0.1, 0.9));
    PauliForm embed;
    embed.a = mixed.t;
    embed.T = mixed.lambda;
    out.residual = coeff_residual(m, embed);
    out.pass = out.residual <= 1e-10 &&
               leq(m, channel_isotropy(mixed).descriptor);
  } else {
    // State mixtures sharing parameters: conjugate both by the same g.
    const SubgroupClass c1 = kAllClasses[rng.integer() % 6];
    const SubgroupClass c2 = kAllClasses[rng.integer() % 6];
    const GroupElement g = haar_element(rng);
    Rng r1 = rng.spawn(11), r2 = rng.spawn(13);
    const PauliForm pf1 = act(g, decompose(random_state_of_class(c1, r1)));
    const PauliForm pf2 = act(g, decompose(random_state_of_class(c2, r2)));
    const SubgroupDescriptor m =
        meet(classify(pf1).descriptor, classify(pf2).descriptor);
    const double p = rng.uniform(0.1, 0.9);
    PauliForm mix;
    mix.a = p * pf1.a + (1 - p) * pf2.a;
    mix.b = p * pf1.b + (1 - p) * pf2.b;
    mix.T = p * pf1.T + (1 - p) * pf2.T;
    out.residual = coeff_residual(m, mix);
    out.pass = out.residual <= 1e-10;
  }
  return out;
}

TrialOutcome check_conjugation_covariance(Rng& rng) {
  const SubgroupClass cls = kAllClasses[rng.integer() % 6];
  const DensityMatrix4 rho = random_state_of_class(cls, rng);
  const GroupElement g = haar_element(rng);
  const IsotropyReport before = classify(decompose(rho));
  const IsotropyReport after = classify(act(g, decompose(rho)));
  const SubgroupDescriptor expected =
      rotated_descriptor(before.descriptor, rotation_of(g));

  TrialOutcome out;
  out.residual = after.descriptor.cls == expected.cls
                     ? descriptor_deviation(expected, after.descriptor)
                     : 1.0;
  out.pass = before.descriptor.cls == cls &&
             after.descriptor.cls == expected.cls && out.residual <= 1e-8;
  return out;
}

TrialOutcome check_symmetric_monotonicity(Rng& rng) {
  const SubgroupClass cls = kAllClasses[rng.integer() % 6];
  const DensityMatrix4 rho = random_state_of_class(cls, rng);
  const SymmetricChannel e = random_symmetric_channel(rng);
  Mat4c sig = e.apply(rho.matrix());
  sig = 0.5 * (sig + sig.adjoint().eval());
  const PauliForm sig_pf = decompose(DensityMatrix4(sig));
  const SubgroupDescriptor h = classify(decompose(rho)).descriptor;

  TrialOutcome out;
  // Iso never decreases: the projector onto the input's isotropy still
  // fixes the output.
  out.residual = coeff_residual(h, sig_pf);
  out.pass = out.residual <= 1e-10;
  try {
    out.pass = out.pass && leq(h, classify(sig_pf).descriptor);
  } catch (const AmbiguousToleranceError&) {
    // The output may sit on a class boundary; the residual check above
    // already certifies the bound for this trial.
  }
  return out;
}

TrialOutcome check_zero_distance(Rng& rng) {
  const SubgroupClass c1 = kAllClasses[rng.integer() % 6];
  const SubgroupClass c2 = kAllClasses[rng.integer() % 6];
  Rng r1 = rng.spawn(3), r2 = rng.spawn(5);
  const PauliForm pf1 = decompose(random_state_of_class(c1, r1));
  const PauliForm pf2 = decompose(random_state_of_class(c2, r2));
  const double eps = 1e-3;
  auto mix_to_center = [eps](const PauliForm& pf) {
    PauliForm m;
    m.a = eps * pf.a;
    m.b = eps * pf.b;
    m.T = eps * pf.T;
    return m;
  };
  const PauliForm m1 = mix_to_center(pf1);
  const PauliForm m2 = mix_to_center(pf2);

  TrialOutcome out;
  const IsotropyReport rep1 = classify(m1);
  const IsotropyReport rep2 = classify(m2);
  out.residual = trace_distance(m1, m2);
  out.pass = rep1.descriptor.cls == classify(pf1).descriptor.cls &&
             rep2.descriptor.cls == classify(pf2).descriptor.cls &&
             out.residual <= eps + 1e-12;
  return out;
}

TrialOutcome check_projector_algebra(Rng& rng) {
  const SubgroupClass cls = kAllClasses[rng.integer() % 6];
  const SubgroupDescriptor h = random_descriptor(cls, rng);
  const PauliForm pf = decompose(random_state(rng));

  const PauliForm once = project(h, pf);
  const double idem = once.coeff_distance(project(h, once));

  // Self-adjointness in the Hilbert-Schmidt inner product.
  auto random_herm = [&rng]() {
    PauliForm x;
    for (int i = 0; i < 3; ++i) {
      x.a[i] = rng.uniform(-1.0, 1.0);
      x.b[i] = rng.uniform(-1.0, 1.0);
      for (int j = 0; j < 3; ++j) x.T(i, j) = rng.uniform(-1.0, 1.0);
    }
    return x;
  };
  const PauliForm x = random_herm(), y = random_herm();
  const Mat4c xm = hermitian_from_coeffs(0.3, x);
  const Mat4c ym = hermitian_from_coeffs(-0.2, y);
  const Mat4c pxm = hermitian_from_coeffs(0.3, project(h, x));
  const Mat4c pym = hermitian_from_coeffs(-0.2, project(h, y));
  const double self_adj = std::abs((pxm.adjoint() * ym).trace() -
                                   (xm.adjoint() * pym).trace());

  // CPTP: projecting a valid state yields a valid state.
  bool cptp = true;
  try {
    (void)compose(once);
  } catch (const NotAStateError&) {
    cptp = false;
  }

  TrialOutcome out;
  out.residual = std::max(idem, self_adj);
  out.pass = cptp && out.residual <= 1e-12;
  return out;
}

TrialOutcome check_relative_entropy_optimality(Rng& rng) {
  const SubgroupClass cls = kAllClasses[rng.integer() % 6];
  const SubgroupDescriptor h = random_descriptor(cls, rng);
  const DensityMatrix4 rho = random_state(rng);
  const DensityMatrix4 star = project(h, rho);
  const double s_star = relative_entropy(rho, star);

  TrialOutcome out;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix4 competitor = project(h, random_state(rng));
    const double s = relative_entropy(rho, competitor);
    worst = std::max(worst, s_star - s);
  }
  out.residual = std::max(0.0, worst);
  out.pass = worst <= 1e-10;
  return out;
}

TrialOutcome check_normalizer(Rng& rng) {
  const SubgroupClass cls = kAllClasses[rng.integer() % 6];
  const SubgroupDescriptor h = random_descriptor(cls, rng);
  const GroupElement g = random_normalizer_element(h, rng);

  TrialOutcome out;
  double invariance = 0.0;
  for (int k = 0; k < 3; ++k) {
    const PauliForm pf = decompose(random_state(rng));
    const PauliForm lhs = act(g, project(h, act(g.inverse(), pf)));
    invariance = std::max(invariance, lhs.coeff_distance(project(h, pf)));
  }
  out.residual = invariance;
  out.pass = invariance <= 1e-12;

  // Violation witness: rotating the axis off itself must change the
  // projector for the non-normal classes.
  if (cls != SubgroupClass::Z2 && cls != SubgroupClass::SU2) {
    const Vec3 tilt_axis = orthogonal_unit(
        cls == SubgroupClass::K2 ? Vec3(h.frame.col(0)) : h.axis);
    const GroupElement off = GroupElement::from_axis_angle(tilt_axis, 0.2);
    const PauliForm w = axis_witness(h);
    const PauliForm lhs = act(off, project(h, act(off.inverse(), w)));
    const double viol = lhs.coeff_distance(project(h, w));
    out.pass = out.pass && viol >= 1e-3;
  }
  return out;
}

}  // namespace

VerifyReport verify_lemmas(std::uint64_t seed, int n_trials, int threads) {
  if (n_trials < 1) throw InvalidInputError("n_trials must be >= 1");
  const Rng root(seed);
  using TrialFn = std::function<TrialOutcome(Rng&)>;
  const std::pair<const char*, TrialFn> checks[] = {
      {"tensor_bound", check_tensor_bound},
      {"composition_bound", check_composition_bound},
      {"mixing_bound", check_mixing_bound},
      {"conjugation_covariance", check_conjugation_covariance},
      {"symmetric_monotonicity", check_symmetric_monotonicity},
      {"zero_distance", check_zero_distance},
      {"projector_algebra", check_projector_algebra},
      {"relative_entropy_optimality", check_relative_entropy_optimality},
      {"normalizer", check_normalizer},
  };

  VerifyReport report;
  report.seed = seed;
  report.n_trials = n_trials;
  const int nthreads = effective_threads(threads);

  int check_index = 0;
  for (const auto& [name, fn] : checks) {
    std::vector<TrialOutcome> outcomes(n_trials);
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
    for (int t = 0; t < n_trials; ++t) {
      Rng rng = root.spawn(1000003ULL * check_index + t);
      try {
        outcomes[t] = fn(rng);
      } catch (...) {
        // exceptions may not cross the parallel region; a throwing trial
        // is a failed trial
        outcomes[t] = {false, 1.0};
      }
    }
    LemmaCheck check;
    check.name = name;
    check.trials = n_trials;
    for (const TrialOutcome& o : outcomes) {
      if (!o.pass) ++check.failures;
      check.worst_residual = std::max(check.worst_residual, o.residual);
    }
    report.all_pass = report.all_pass && check.failures == 0;
    report.lemmas.push_back(check);
    ++check_index;
  }
  return report;
}

}  // namespace isolab
