// Copyright 2026 The pauliframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "pauliframe/cli.hpp"

namespace {

int dispatch(const std::function<std::string()>& command) {
  try {
    std::cout << command();
    return 0;
  } catch (const pframe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pauliframe: probabilistic state description toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pfsim 0.1.0");

  pframe::SimulateOptions sim;
  std::string repr = "both";
  std::string initial_path;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a circuit file in the tensor "
                                     "and/or dense density representation");
  simulate->add_option("circuit", sim.circuit_path, "circuit file")
      ->required();
  simulate->add_option("--repr", repr, "ptm | density | both")
      ->check(CLI::IsMember({"ptm", "density", "both"}))
      ->capture_default_str();
  simulate->add_option("--initial", initial_path,
                       "pauli tensor file replacing the |0...0> start");
  simulate->add_option("--out", sim.out_path, "write the report here");
  simulate->add_option("--seed", sim.seed, "seed recorded in the report");
  simulate->add_option("--tolerance", sim.tolerance,
                       "trajectory discrepancy tolerance")
      ->capture_default_str();

  pframe::VerifySetOptions verify;
  CLI::App* verify_set = app.add_subcommand(
      "verify-set", "Classify a projector set file (representative, "
                    "minimal, complete, almost perfect, perfect)");
  verify_set->add_option("set", verify.set_path, "projector set file")
      ->required();
  verify_set->add_option("--budget", verify.budget,
                         "combinatorial search guard (kets * dim)")
      ->capture_default_str();
  verify_set->add_option("--out", verify.out_path, "write the report here");
  verify_set->add_option("--seed", verify.seed, "seed recorded in the report");
  verify_set
      ->add_option("--tolerance", verify.tolerance, "orthogonality cutoff")
      ->capture_default_str();

  pframe::ConvertOptions conv;
  std::string policy = "canonical-z";
  CLI::App* convert = app.add_subcommand(
      "convert", "Convert between density, pauli and probability documents");
  convert->add_option("input", conv.in_path, "input document")->required();
  convert->add_option("--to", conv.target_kind,
                      "density | pauli | probability")
      ->check(CLI::IsMember({"density", "pauli", "probability"}))
      ->required();
  convert->add_option("--out", conv.out_path, "output document path")
      ->required();
  convert
      ->add_option("--policy", policy,
                   "zero-axis policy for probability inputs")
      ->check(CLI::IsMember({"canonical-z", "average"}))
      ->capture_default_str();
  convert->add_option("--seed", conv.seed, "seed recorded in the report");
  convert
      ->add_option("--tolerance", conv.tolerance,
                   "outcome-group consistency threshold")
      ->capture_default_str();

  pframe::BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Time local PTM contraction against the dense 4^m x 4^m "
               "superoperator multiply");
  bench_cmd->add_option("--m-min", bench.m_min, "smallest qubit count")
      ->capture_default_str();
  bench_cmd->add_option("--m-max", bench.m_max, "largest qubit count")
      ->capture_default_str();
  bench_cmd->add_option("--depth", bench.depth, "gates per circuit")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "circuit seed")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out_path, "write the report here");
  bench_cmd
      ->add_option("--tolerance", bench.tolerance,
                   "final tensor cross-check tolerance")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) {
    if (repr == "ptm") sim.repr = pframe::Representation::ptm;
    if (repr == "density") sim.repr = pframe::Representation::density;
    if (repr == "both") sim.repr = pframe::Representation::both;
    if (!initial_path.empty()) sim.initial_tensor_path = initial_path;
    return dispatch([&] { return pframe::run_simulate(sim); });
  }
  if (verify_set->parsed()) {
    return dispatch([&] { return pframe::run_verify_set(verify); });
  }
  if (convert->parsed()) {
    conv.policy = policy == "average" ? pframe::ZeroAxisPolicy::average
                                      : pframe::ZeroAxisPolicy::canonical_z;
    return dispatch([&] { return pframe::run_convert(conv); });
  }
  if (bench_cmd->parsed()) {
    return dispatch([&] { return pframe::run_bench(bench); });
  }
  return 0;
}
