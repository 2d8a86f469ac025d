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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "isolab/errors.hpp"
#include "isolab/io.hpp"
#include "isolab/scan.hpp"
#include "isolab/verify.hpp"

namespace {

using isolab::Json;

Json verify_report_json(const isolab::VerifyReport& rep) {
  Json j;
  j["seed"] = rep.seed;
  j["n_trials"] = rep.n_trials;
  Json lemmas = Json::array();
  for (const auto& l : rep.lemmas) {
    Json e;
    e["name"] = l.name;
    e["trials"] = l.trials;
    e["failures"] = l.failures;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", l.worst_residual);
    e["worst_residual"] = std::string(buf);
    e["pass"] = l.failures == 0;
    lemmas.push_back(e);
  }
  j["lemmas"] = lemmas;
  j["all_pass"] = rep.all_pass;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"two-qubit residual-symmetry toolkit"};
  app.require_subcommand(1);

  std::string state_path, channel_path, group_path, out_path;
  std::string meet_a, meet_b, leq_a, leq_b, join_a, join_b;
  double eps = 0.0, tol = 1e-8;
  int resolution = 21, threads = 0, n_trials = 100;
  std::uint64_t seed = 0;
  bool dot = false;

  auto* classify_cmd = app.add_subcommand("classify", "residual symmetry of a state");
  classify_cmd->add_option("--state", state_path, "state JSON file")->required();
  classify_cmd->add_option("--eps", eps, "smoothing scale (trace distance)");
  classify_cmd->add_option("--tol", tol, "classification tolerance");

  auto* project_cmd = app.add_subcommand("project", "apply a subgroup-averaging projector");
  project_cmd->add_option("--group", group_path, "group JSON file")->required();
  project_cmd->add_option("--state", state_path, "state JSON file")->required();

  auto* lattice_cmd = app.add_subcommand("lattice", "subgroup lattice queries");
  lattice_cmd->add_option("--meet", meet_a, "first descriptor for meet");
  lattice_cmd->add_option("--leq", leq_a, "first descriptor for leq");
  lattice_cmd->add_option("--join", join_a, "first class name for join");
  lattice_cmd->add_option("--dot", dot, "emit the Hasse diagram as DOT")
      ->expected(0);
  lattice_cmd->allow_extras();

  auto* gate_cmd = app.add_subcommand("gate", "simulation superselection gate");
  gate_cmd->add_option("--state", state_path, "resource state JSON")->required();
  gate_cmd->add_option("--channel", channel_path, "target channel JSON")->required();
  gate_cmd->add_option("--tol", tol, "classification tolerance");

  auto* scan_cmd = app.add_subcommand("scan", "classify the Bell tetrahedron grid");
  scan_cmd->add_option("--resolution", resolution, "points per tetrahedron edge")
      ->required();
  scan_cmd->add_option("--eps", eps, "smoothing scale; 0 = exact classes");
  scan_cmd->add_option("--tol", tol, "classification tolerance");
  scan_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
  scan_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

  auto* verify_cmd = app.add_subcommand("verify-lemmas", "cross-module property suite");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--trials", n_trials, "trials per lemma")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

  CLI11_PARSE(app, argc, argv);

  if (classify_cmd->parsed()) {
    const isolab::DensityMatrix4 rho =
        isolab::state_from_json(isolab::load_json_file(state_path));
    isolab::ClassifyOptions opt;
    opt.tol = tol;
    const isolab::IsotropyReport rep =
        isolab::smoothed_classify(isolab::decompose(rho), eps, opt);
    std::cout << isolab::report_to_json(rep).dump(2) << "\n";
  } else if (project_cmd->parsed()) {
    const isolab::SubgroupDescriptor h =
        isolab::descriptor_from_json(isolab::load_json_file(group_path));
    const isolab::DensityMatrix4 rho =
        isolab::state_from_json(isolab::load_json_file(state_path));
    std::cout << isolab::state_to_json(isolab::project(h, rho)).dump(2) << "\n";
  } else if (lattice_cmd->parsed()) {
    const auto extras = lattice_cmd->remaining();
    if (dot) {
      std::cout << isolab::hasse_dot();
    } else if (!meet_a.empty() || !leq_a.empty()) {
      const std::string& first = !meet_a.empty() ? meet_a : leq_a;
      if (extras.size() != 1)
        throw isolab::InvalidInputError(
            "lattice --meet/--leq take two descriptor files");
      const isolab::SubgroupDescriptor h1 =
          isolab::descriptor_from_json(isolab::load_json_file(first));
      const isolab::SubgroupDescriptor h2 =
          isolab::descriptor_from_json(isolab::load_json_file(extras[0]));
      Json j;
      if (!meet_a.empty())
        j = isolab::descriptor_to_json(isolab::meet(h1, h2));
      else
        j["leq"] = isolab::leq(h1, h2);
      std::cout << j.dump(2) << "\n";
    } else if (!join_a.empty()) {
      if (extras.size() != 1)
        throw isolab::InvalidInputError("lattice --join takes two class names");
      Json j;
      j["join"] = isolab::to_string(
          isolab::join_class(isolab::subgroup_class_from_string(join_a),
                             isolab::subgroup_class_from_string(extras[0])));
      std::cout << j.dump(2) << "\n";
    } else {
      throw isolab::InvalidInputError(
          "lattice needs one of --meet, --leq, --join, --dot");
    }
  } else if (gate_cmd->parsed()) {
    const isolab::DensityMatrix4 rho =
        isolab::state_from_json(isolab::load_json_file(state_path));
    const isolab::QubitChannelPTM ch =
        isolab::channel_from_json(isolab::load_json_file(channel_path));
    isolab::ClassifyOptions opt;
    opt.tol = tol;
    const isolab::IsotropyReport state_rep =
        isolab::classify(isolab::decompose(rho), opt);
    const isolab::IsotropyReport chan_rep = isolab::channel_isotropy(ch, opt);
    Json j;
    j["verdict"] = isolab::to_string(isolab::simulation_gate(state_rep, chan_rep));
    j["state"] = isolab::report_to_json(state_rep);
    j["channel"] = isolab::report_to_json(chan_rep);
    std::cout << j.dump(2) << "\n";
  } else if (scan_cmd->parsed()) {
    isolab::ScanOptions opt;
    opt.resolution = resolution;
    opt.eps = eps;
    opt.tol = tol;
    opt.threads = threads;
    const isolab::ScanResult result = isolab::scan_tetrahedron(opt);
    if (out_path.empty()) {
      isolab::write_scan_csv(result, std::cout);
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out)
        throw isolab::InvalidInputError("cannot open '" + out_path +
                                        "' for writing");
      isolab::write_scan_csv(result, out);
    }
  } else if (verify_cmd->parsed()) {
    const isolab::VerifyReport rep =
        isolab::verify_lemmas(seed, n_trials, threads);
    std::cout << verify_report_json(rep).dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const isolab::AmbiguousToleranceError& e) {
    Json j;
    j["error"] = "ambiguous-at-tolerance";
    j["detail"] = e.what();
    j["residual"] = e.residual;
    j["threshold"] = e.threshold;
    std::cout << j.dump(2) << "\n";
    return 2;
  } catch (const isolab::Error& e) {
    Json j;
    j["error"] = "invalid-input";
    j["detail"] = e.what();
    std::cout << j.dump(2) << "\n";
    return 2;
  }
}
