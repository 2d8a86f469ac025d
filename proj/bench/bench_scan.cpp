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

// Timing harness comparing the serial reference kernels against the
// OpenMP ones: the tetrahedron scan and the Monte Carlo twirl.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "isolab/projectors.hpp"
#include "isolab/scan.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_scan(int resolution) {
  isolab::ScanOptions opt;
  opt.resolution = resolution;

  auto t0 = Clock::now();
  const isolab::ScanResult serial = isolab::scan_tetrahedron_serial(opt);
  const double t_serial = seconds_since(t0);

  opt.threads = 0;
  t0 = Clock::now();
  const isolab::ScanResult parallel = isolab::scan_tetrahedron_parallel(opt);
  const double t_parallel = seconds_since(t0);

  bool identical = serial.rows.size() == parallel.rows.size();
  for (std::size_t i = 0; identical && i < serial.rows.size(); ++i)
    identical = serial.rows[i].cls == parallel.rows[i].cls &&
                serial.rows[i].min_residual == parallel.rows[i].min_residual;

  std::printf("scan resolution %3d  cells %8zu  serial %7.3fs (%8.0f/s)  "
              "omp[%d] %7.3fs (%8.0f/s)  speedup %.2fx  identical %s\n",
              resolution, serial.rows.size(), t_serial,
              serial.rows.size() / t_serial, isolab::effective_threads(0),
              t_parallel, parallel.rows.size() / t_parallel,
              t_serial / t_parallel, identical ? "yes" : "NO");
}

void bench_monte_carlo(int samples) {
  isolab::Rng rng(41);
  const isolab::PauliForm pf = isolab::decompose(isolab::random_state(rng));

  auto t0 = Clock::now();
  const isolab::PauliForm serial = isolab::twirl_monte_carlo(pf, samples, 7, 1);
  const double t_serial = seconds_since(t0);

  t0 = Clock::now();
  const isolab::PauliForm parallel = isolab::twirl_monte_carlo(pf, samples, 7, 0);
  const double t_parallel = seconds_since(t0);

  std::printf("mc twirl %9d samples      serial %7.3fs (%8.0f/s)  omp[%d] "
              "%7.3fs (%8.0f/s)  speedup %.2fx  identical %s\n",
              samples, t_serial, samples / t_serial,
              isolab::effective_threads(0), t_parallel, samples / t_parallel,
              t_serial / t_parallel,
              serial.coeff_distance(parallel) == 0.0 ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  int resolution = argc > 1 ? std::atoi(argv[1]) : 61;
  int samples = argc > 2 ? std::atoi(argv[2]) : 4000000;
  bench_scan(resolution);
  bench_monte_carlo(samples);
  return 0;
}
