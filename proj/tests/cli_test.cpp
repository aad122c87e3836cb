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

#include "pauliframe/cli.hpp"

#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "pauliframe/qubitframe.hpp"
#include "test_util.hpp"

using namespace pframe;
using namespace pftest;
using Json = nlohmann::ordered_json;

namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("pauliframe_tests_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path p = temp_dir() / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("simulate reports the Bell tensor with both representations") {
  SimulateOptions opts;
  opts.circuit_path = write_temp("bell.circ", "qubits 2\nh 0\ncnot 0 1\n");
  opts.repr = Representation::both;
  const Json report = Json::parse(run_simulate(opts));
  CHECK(report["report"] == "simulate");
  CHECK(report["layout_version"] == kLayoutVersion);
  CHECK(report["qubits"] == 2);
  const auto values = report["final_pauli_tensor"]["values"];
  REQUIRE(values.size() == 16);
  CHECK(std::abs(values[5].get<double>() - 1.0) < 1e-9);
  CHECK(std::abs(values[10].get<double>() + 1.0) < 1e-9);
  CHECK(std::abs(values[15].get<double>() - 1.0) < 1e-9);
  CHECK(report["max_discrepancy"].get<double>() < 1e-9);
  CHECK(report["within_tolerance"] == true);
  CHECK(report["probabilities"]["values"].size() == 36);
}

TEST_CASE("simulate of an empty single-qubit circuit") {
  SimulateOptions opts;
  opts.circuit_path = write_temp("empty.circ", "qubits 1\n");
  opts.repr = Representation::ptm;
  const Json report = Json::parse(run_simulate(opts));
  const auto values = report["final_pauli_tensor"]["values"];
  REQUIRE(values.size() == 4);
  CHECK(values[0].get<double>() == doctest::Approx(1.0));
  CHECK(values[1].get<double>() == doctest::Approx(0.0));
  CHECK(values[2].get<double>() == doctest::Approx(0.0));
  CHECK(values[3].get<double>() == doctest::Approx(1.0));
  CHECK(report["max_discrepancy"].is_null());
}

TEST_CASE("simulate reports GHZ marginals") {
  SimulateOptions opts;
  opts.circuit_path = write_temp(
      "ghz.circ", "qubits 3\nh 0\ncnot 0 1\ncnot 1 2\n");
  opts.repr = Representation::both;
  const Json report = Json::parse(run_simulate(opts));
  CHECK(report["max_discrepancy"].get<double>() < 1e-9);
  for (const auto& marg : report["marginals"]) {
    for (const char* axis : {"x", "y"}) {
      CHECK(marg["probabilities"][axis][0].get<double>() ==
            doctest::Approx(0.5));
      CHECK(marg["probabilities"][axis][1].get<double>() ==
            doctest::Approx(0.5));
    }
  }
  // The three-qubit zzz correlator of the GHZ state vanishes.
  const auto values = report["final_pauli_tensor"]["values"];
  CHECK(std::abs(values[63].get<double>()) < 1e-9);
  // Pairwise zz correlators are one.
  CHECK(values[3 * 16 + 3 * 4].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("simulate honors an initial tensor file") {
  SimulateOptions opts;
  opts.circuit_path = write_temp("id1.circ", "qubits 1\nz 0\n");
  const PauliParameterTensor plus =
      tilde_from_rho(projector_of(six_state_ket(0)));  // |0x>
  opts.initial_tensor_path =
      write_temp("plus.json", pauli_tensor_to_text(plus));
  opts.repr = Representation::both;
  const Json report = Json::parse(run_simulate(opts));
  const auto values = report["final_pauli_tensor"]["values"];
  CHECK(values[1].get<double>() == doctest::Approx(-1.0));  // z|0x> = |1x>
  CHECK(report["max_discrepancy"].get<double>() < 1e-12);
}

TEST_CASE("simulate guards the dense ceilings") {
  SimulateOptions opts;
  opts.circuit_path = write_temp("big.circ", "qubits 11\n");
  opts.repr = Representation::ptm;
  CHECK_THROWS_AS(run_simulate(opts), GuardExceeded);
  opts.circuit_path = write_temp("big9.circ", "qubits 9\n");
  opts.repr = Representation::both;
  CHECK_THROWS_AS(run_simulate(opts), GuardExceeded);
  opts.repr = Representation::ptm;  // tensor-only is fine at 9 qubits
  const Json report = Json::parse(run_simulate(opts));
  CHECK(report["probabilities"].is_null());
}

TEST_CASE("verify-set classifies the six-state file") {
  VerifySetOptions opts;
  opts.set_path =
      write_temp("six.json", set_to_text(six_state_set(1)));
  const Json report = Json::parse(run_verify_set(opts));
  CHECK(report["rank"] == 4);
  CHECK(report["representative"] == true);
  CHECK(report["minimal"] == false);
  CHECK(report["perfect"] == true);
  CHECK(report["basis_partition"].size() == 3);
}

TEST_CASE("verify-set reports the non-perfect witness at two qubits") {
  VerifySetOptions opts;
  opts.set_path =
      write_temp("six2.json", set_to_text(six_state_set(2)));
  const Json report = Json::parse(run_verify_set(opts));
  CHECK(report["almost_perfect"] == true);
  CHECK(report["perfect"] == false);
  REQUIRE(report["nonunique_completion"].is_object());
  CHECK(report["nonunique_completion"]["first"].size() == 3);
  CHECK(report["nonunique_completion"]["second"].size() == 3);
}

TEST_CASE("verify-set reports rank deficiency of two disjoint bases") {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector plus(2), minus(2), e0(2), e1(2);
  plus << s, s;
  minus << s, -s;
  e0 << 1, 0;
  e1 << 0, 1;
  const ProjectorSet set =
      make_projector_set(2, {e0, e1, plus, minus}, "two-bases");
  VerifySetOptions opts;
  opts.set_path = write_temp("twobases.json", set_to_text(set));
  const Json report = Json::parse(run_verify_set(opts));
  CHECK(report["rank"] == 3);
  CHECK(report["representative"] == false);
  CHECK(report["complete"] == false);
}

TEST_CASE("verify-set marks guarded fields unknown") {
  VerifySetOptions opts;
  opts.set_path = write_temp("six2b.json", set_to_text(six_state_set(2)));
  opts.budget = 10;
  const Json report = Json::parse(run_verify_set(opts));
  CHECK(report["representative"] == true);
  CHECK(report["complete"] == "unknown");
  CHECK(report["search_budget_exhausted"] == true);
}

TEST_CASE("convert runs the density -> pauli -> density round trip") {
  TestRng rng(81);
  ComplexVector bell = ComplexVector::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  const ComplexMatrix rho = naive_outer(bell);

  ConvertOptions to_pauli;
  to_pauli.in_path = write_temp("bell_density.json", density_to_text(rho));
  to_pauli.target_kind = "pauli";
  to_pauli.out_path = (temp_dir() / "bell_pauli.json").string();
  const Json rep1 = Json::parse(run_convert(to_pauli));
  CHECK(rep1["input_kind"] == "density");
  CHECK(rep1["qubits"] == 2);

  ConvertOptions back;
  back.in_path = to_pauli.out_path;
  back.target_kind = "density";
  back.out_path = (temp_dir() / "bell_back.json").string();
  const Json rep2 = Json::parse(run_convert(back));
  CHECK(rep2["physical"] == true);
  const ComplexMatrix rho2 = density_from_text(read_file(back.out_path));
  CHECK(max_abs(ComplexMatrix(rho2 - rho)) < 1e-10);
}

TEST_CASE("convert produces flat probabilities for the mixed state") {
  ConvertOptions opts;
  opts.in_path = write_temp("mixed.json",
                            pauli_tensor_to_text(PauliParameterTensor{
                                1, (RealVector(4) << 1, 0, 0, 0).finished()}));
  opts.target_kind = "probability";
  opts.out_path = (temp_dir() / "mixed_prob.json").string();
  run_convert(opts);
  const ProbabilityTensor p =
      probability_tensor_from_text(read_file(opts.out_path));
  CHECK(max_abs(RealVector(p.values - RealVector::Constant(6, 0.5))) <
        1e-15);
}

TEST_CASE("convert rejects inconsistent probabilities") {
  ProbabilityTensor p = p_from_tilde(zero_state_tensor(1));
  p.values[0] += 0.2;
  ConvertOptions opts;
  opts.in_path = write_temp("bad_prob.json", probability_tensor_to_text(p));
  opts.target_kind = "pauli";
  opts.out_path = (temp_dir() / "bad_out.json").string();
  CHECK_THROWS_AS(run_convert(opts), InconsistentProbabilities);
}

TEST_CASE("convert respects the zero-axis policy flag") {
  TestRng rng(82);
  const ProbabilityTensor p =
      p_from_tilde(tilde_from_rho(pftest::random_density(2, rng)));
  ConvertOptions opts;
  opts.in_path = write_temp("prob.json", probability_tensor_to_text(p));
  opts.target_kind = "pauli";
  opts.policy = ZeroAxisPolicy::average;
  opts.out_path = (temp_dir() / "prob_pauli.json").string();
  const Json report = Json::parse(run_convert(opts));
  CHECK(report["policy"] == "average");
  const PauliParameterTensor t =
      pauli_tensor_from_text(read_file(opts.out_path));
  CHECK(max_abs(RealVector(
            t.values - tilde_from_p(p, ZeroAxisPolicy::average).values)) ==
        0.0);
}

TEST_CASE("bench report cross-checks the two paths") {
  BenchOptions opts;
  opts.m_min = 2;
  opts.m_max = 2;
  opts.depth = 4;
  opts.seed = 11;
  const Json report = Json::parse(run_bench(opts));
  CHECK(report["generator"] == RandomSource::kGeneratorId);
  REQUIRE(report["results"].size() == 1);
  const auto& entry = report["results"][0];
  CHECK(entry["m"] == 2);
  CHECK(entry["max_final_discrepancy"].get<double>() < 1e-9);
  CHECK(entry["local_seconds_per_gate"].get<double>() > 0.0);
  CHECK(entry["dense_seconds_per_gate"].get<double>() > 0.0);
}

TEST_CASE("simulate_tensor trajectory matches the oracle stepwise") {
  RandomSource rng(4242);
  const CircuitIR circuit = random_circuit(3, 12, rng);
  const auto tensors = simulate_tensor(circuit, zero_state_tensor(3));
  const auto densities = simulate_density(circuit, zero_state_density(3));
  REQUIRE(tensors.size() == densities.size());
  for (size_t i = 0; i < tensors.size(); ++i) {
    const PauliParameterTensor ref = tilde_from_rho(densities[i].matrix());
    CHECK(max_abs(RealVector(tensors[i].values - ref.values)) < 1e-10);
  }
}

#ifdef PFSIM_BINARY
TEST_CASE("pfsim binary round trip") {
  const std::string circ = write_temp("bin_bell.circ",
                                      "qubits 2\nh 0\ncnot 0 1\n");
  const std::string out = (temp_dir() / "bin_report.json").string();
  const std::string cmd = std::string(PFSIM_BINARY) + " simulate " + circ +
                          " --repr both --out " + out + " > /dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  const Json report = Json::parse(read_file(out));
  CHECK(report["within_tolerance"] == true);

  const std::string missing =
      std::string(PFSIM_BINARY) + " simulate /nonexistent.circ 2> /dev/null";
  CHECK(std::system(missing.c_str()) != 0);

  const std::string setfile =
      write_temp("bin_six.json", set_to_text(six_state_set(1)));
  const std::string verify = std::string(PFSIM_BINARY) + " verify-set " +
                             setfile + " > /dev/null";
  CHECK(std::system(verify.c_str()) == 0);
}
#endif

}  // TEST_SUITE
