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

#include "isolab/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>

namespace isolab {

std::vector<Vec3> icosphere_vertices(int frequency) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> base = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& v : base) v.normalize();
  static const int faces[20][3] = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  // Dedupe across shared edges with a quantized key; distinct vertices at
  // frequency <= 32 are separated by far more than the 1e-7 grain.
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, int> seen;
  std::vector<Vec3> out;
  auto add = [&](const Vec3& v) {
    auto key = std::make_tuple(std::llround(v.x() * 1e7),
                               std::llround(v.y() * 1e7),
                               std::llround(v.z() * 1e7));
    if (seen.emplace(key, 1).second) out.push_back(v);
  };
  const int f = std::max(1, frequency);
  for (const auto& face : faces) {
    const Vec3 &a = base[face[0]], &b = base[face[1]], &c = base[face[2]];
    for (int i = 0; i <= f; ++i)
      for (int j = 0; j <= f - i; ++j) {
        Vec3 p = (double(f - i - j) * a + double(i) * b + double(j) * c) / f;
        add(p.normalized());
      }
  }
  return out;
}

std::vector<Mat3> octahedral_rotations() {
  std::vector<Mat3> rots;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms)
    for (int signs = 0; signs < 8; ++signs) {
      Mat3 m = Mat3::Zero();
      for (int col = 0; col < 3; ++col)
        m(p[col], col) = (signs >> col) & 1 ? -1.0 : 1.0;
      if (m.determinant() > 0.5) rots.push_back(m);
    }
  return rots;
}

NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& start, double step, int max_iter) {
  const int n = static_cast<int>(start.size());
  struct Pt {
    Eigen::VectorXd x;
    double v;
  };
  std::vector<Pt> s;
  s.reserve(n + 1);
  s.push_back({start, f(start)});
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x = start;
    x[i] += step;
    s.push_back({x, f(x)});
  }
  auto by_value = [](const Pt& a, const Pt& b) { return a.v < b.v; };
  for (int it = 0; it < max_iter; ++it) {
    std::sort(s.begin(), s.end(), by_value);
    // Purely relative spread test; near-zero objective values must keep
    // contracting rather than stop at an absolute floor.
    if (std::abs(s.back().v - s.front().v) <
        1e-14 * std::max(std::abs(s.front().v), 1e-300))
      break;
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += s[i].x;
    centroid /= n;
    const Pt& worst = s[n];
    Eigen::VectorXd xr = centroid + (centroid - worst.x);
    double fr = f(xr);
    if (fr < s[0].v) {
      Eigen::VectorXd xe = centroid + 2.0 * (centroid - worst.x);
      double fe = f(xe);
      s[n] = fe < fr ? Pt{xe, fe} : Pt{xr, fr};
    } else if (fr < s[n - 1].v) {
      s[n] = {xr, fr};
    } else {
      Eigen::VectorXd xc = centroid + 0.5 * (worst.x - centroid);
      double fc = f(xc);
      if (fc < worst.v) {
        s[n] = {xc, fc};
      } else {
        for (int i = 1; i <= n; ++i) {
          s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
          s[i].v = f(s[i].x);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), by_value);
  return {s[0].x, s[0].v};
}

}  // namespace isolab
