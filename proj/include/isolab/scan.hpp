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

#ifndef ISOLAB_SCAN_HPP
#define ISOLAB_SCAN_HPP

#include <ostream>
#include <string>
#include <vector>

#include "isolab/isotropy.hpp"
#include "isolab/threads.hpp"

namespace isolab {

/// One classified cell of the Bell-tetrahedron grid.
struct ScanRow {
  Vec3 taus = Vec3::Zero();
  std::string cls;
  std::string shape;
  double min_residual = 0.0;
  bool valid_state = true;
};

struct ScanOptions {
  int resolution = 2;  // points per tetrahedron edge; must be >= 2
  double eps = 0.0;    // smoothing scale; 0 means exact classes
  double tol = 1e-8;
  int threads = 0;     // 0: honor ISOLAB_THREADS / OpenMP default; 1: serial
};

struct ScanResult {
  std::vector<ScanRow> rows;  // grid order, non-states included but flagged
  int skipped = 0;            // count of non-state grid points
};

/// Barycentric grid over the tetrahedron with vertices (-1,-1,-1),
/// (1,1,-1), (1,-1,1), (-1,1,1); resolution points per edge.
std::vector<Vec3> tetrahedron_grid(int resolution);

/// Serial reference implementation: one cell after another.
ScanResult scan_tetrahedron_serial(const ScanOptions& opt);

/// OpenMP kernel over grid cells; cells are pure and independent, and
/// results are merged back in grid order, so the output is identical to
/// the serial reference for any thread count.
ScanResult scan_tetrahedron_parallel(const ScanOptions& opt);

/// Dispatch on opt.threads (1 selects the serial reference).
ScanResult scan_tetrahedron(const ScanOptions& opt);

/// CSV with the stable header `tau1,tau2,tau3,class,shape,min_residual`
/// and a trailing `# skipped N non-state grid points` summary comment.
void write_scan_csv(const ScanResult& result, std::ostream& os);

}  // namespace isolab

#endif  // ISOLAB_SCAN_HPP
