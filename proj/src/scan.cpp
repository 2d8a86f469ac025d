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

#include "isolab/scan.hpp"

#include <cstdio>

#include "isolab/errors.hpp"

namespace isolab {

std::vector<Vec3> tetrahedron_grid(int resolution) {
  if (resolution < 2) throw InvalidInputError("scan resolution must be >= 2");
  static const Vec3 verts[4] = {
      {-1, -1, -1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}};
  const int n = resolution - 1;  // subdivisions per edge
  std::vector<Vec3> grid;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j)
      for (int k = 0; k <= n - i - j; ++k) {
        const int l = n - i - j - k;
        grid.push_back((double(i) * verts[0] + double(j) * verts[1] +
                        double(k) * verts[2] + double(l) * verts[3]) /
                       double(n));
      }
  return grid;
}

namespace {

ScanRow classify_cell(const Vec3& taus, const ScanOptions& opt) {
  ScanRow row;
  row.taus = taus;
  const PauliForm pf = t_state_form(taus);
  // The tetrahedron itself contains only states; the validator guards
  // the generic path shared with arbitrary grids.
  const double lmin = bell_basis_eigenvalues(taus).minCoeff();
  if (lmin < tol::psd_floor) {
    row.valid_state = false;
    return row;
  }
  ClassifyOptions copt;
  copt.tol = opt.tol;
  try {
    const IsotropyReport rep = opt.eps > 0.0 ? smoothed_classify(pf, opt.eps, copt)
                                             : classify(pf, copt);
    row.cls = to_string(rep.descriptor.cls);
    row.shape = to_string(rep.shape);
    const auto it = rep.residuals.find(opt.eps > 0.0 ? "accepted_min_residual"
                                                     : "fixed_point");
    row.min_residual = it != rep.residuals.end() ? it->second : 0.0;
  } catch (const AmbiguousToleranceError&) {
    row.cls = "ambiguous";
    row.shape = "ambiguous";
    row.min_residual = -1.0;
  }
  return row;
}

}  // namespace

ScanResult scan_tetrahedron_serial(const ScanOptions& opt) {
  const std::vector<Vec3> grid = tetrahedron_grid(opt.resolution);
  ScanResult out;
  out.rows.reserve(grid.size());
  for (const Vec3& taus : grid) {
    out.rows.push_back(classify_cell(taus, opt));
    if (!out.rows.back().valid_state) ++out.skipped;
  }
  return out;
}

ScanResult scan_tetrahedron_parallel(const ScanOptions& opt) {
  const std::vector<Vec3> grid = tetrahedron_grid(opt.resolution);
  ScanResult out;
  out.rows.resize(grid.size());
  const int n = static_cast<int>(grid.size());
  const int threads = effective_threads(opt.threads);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (int i = 0; i < n; ++i) out.rows[i] = classify_cell(grid[i], opt);
  for (const ScanRow& r : out.rows)
    if (!r.valid_state) ++out.skipped;
  return out;
}

ScanResult scan_tetrahedron(const ScanOptions& opt) {
  return opt.threads == 1 ? scan_tetrahedron_serial(opt)
                          : scan_tetrahedron_parallel(opt);
}

void write_scan_csv(const ScanResult& result, std::ostream& os) {
  os << "tau1,tau2,tau3,class,shape,min_residual\n";
  char buf[160];
  for (const ScanRow& r : result.rows) {
    if (!r.valid_state) continue;
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%s,%s,%.9e\n", r.taus[0],
                  r.taus[1], r.taus[2], r.cls.c_str(), r.shape.c_str(),
                  r.min_residual);
    os << buf;
  }
  os << "# skipped " << result.skipped << " non-state grid points\n";
}

}  // namespace isolab
