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

#ifndef ISOLAB_ISOTROPY_HPP
#define ISOLAB_ISOTROPY_HPP

#include <map>
#include <string>
#include <vector>

#include "isolab/projectors.hpp"

namespace isolab {

enum class OrbitShape { Point, Sphere2, SO3modDinf, SO3modD2, SO3modC2, SO3 };

std::string to_string(OrbitShape s);

/// Fixed pairing between isotropy class and orbit shape.
OrbitShape shape_of(SubgroupClass c);
/// 3 for SU2, 1 for U1/Kinf, 0 otherwise.
int continuous_dim_of(SubgroupClass c);

struct IsotropyReport {
  SubgroupDescriptor descriptor;
  OrbitShape shape = OrbitShape::SO3;
  int continuous_dim = 0;
  /// Representative pi-rotation axes of the descriptor. Kinf lists a
  /// frame (its perpendicular pi axes form a circle); empty for Z2 and
  /// SU2, where none respectively all directions qualify.
  std::vector<Vec3> pi_axes;
  /// Per-check diagnostics (kernel gaps, accepted action residuals,
  /// projector residual, smoothed minima).
  std::map<std::string, double> residuals;
};

/// Numerical controls for the classifier. `tol` is relative to the
/// largest singular value (or coefficient scale), with an absolute
/// floor; residuals inside [threshold/10, threshold*10] raise
/// AmbiguousToleranceError instead of guessing.
struct ClassifyOptions {
  double tol = 1e-8;
  double tol_abs = 1e-10;
};

struct StabilizerKernel {
  int dim = 0;
  std::vector<Vec3> axes;
  Eigen::Vector3d singular_values = Eigen::Vector3d::Zero();
  bool ambiguous = false;
};

/// Kernel of the linear map w -> (w x a, w x b, [skew(w), T]) from the
/// SVD of the stacked 15x3 matrix; dim counts singular values below
/// max(tol * sigma_max, tol_abs).
StabilizerKernel continuous_stabilizer(const PauliForm& pf,
                                       const ClassifyOptions& opt = {});

struct PiAxes {
  std::vector<Vec3> axes;
  bool ambiguous = false;
  double worst_accepted = 0.0;  // largest action residual among accepted axes
};

/// All unit u (up to sign) whose pi rotation fixes (a, b, T) within
/// tolerance. Candidates are the common real eigenvectors of T and T^T
/// (the vee of the antisymmetric part when T is not symmetric),
/// intersected with the Bloch constraints; degenerate eigen-subspaces
/// contribute the family representative selected by the Bloch vectors.
PiAxes discrete_pi_axes(const PauliForm& pf, const ClassifyOptions& opt = {});

/// Exact classification (up to tolerance) of the residual symmetry.
IsotropyReport classify(const PauliForm& pf, const ClassifyOptions& opt = {});
IsotropyReport classify(const DensityMatrix4& rho, const ClassifyOptions& opt = {});

/// Minimum over the class's parameters of trace_distance(pf, P_H(pf)):
/// the distance to the class's fixed-point family. Seeds from the
/// canonical-form frames, Bloch directions and an 812-point icosphere,
/// refined by two Nelder-Mead stages.
double class_min_residual(SubgroupClass cls, const PauliForm& pf,
                          SubgroupDescriptor* best = nullptr,
                          int seed_grid_frequency = 9);

/// Walks the lattice top-down (SU2, Kinf, K2, U1, Z4, Z2) and accepts
/// the first class whose minimized residual is <= eps. eps = 0 reduces
/// to classify().
IsotropyReport smoothed_classify(const PauliForm& pf, double eps,
                                 const ClassifyOptions& opt = {});

}  // namespace isolab

#endif  // ISOLAB_ISOTROPY_HPP
