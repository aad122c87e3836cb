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

#include <doctest.h>

#include "pauliframe/circuit_text.hpp"
#include "pauliframe/qubitframe.hpp"
#include "pauliframe/serialize.hpp"
#include "pauliframe/transfer.hpp"
#include "test_util.hpp"

using namespace pframe;
using namespace pftest;

TEST_SUITE("io") {

TEST_CASE("parse a Bell preparation circuit") {
  const CircuitIR c = parse_circuit("qubits 2\nh 0\ncnot 0 1\n");
  CHECK(c.num_qubits == 2);
  REQUIRE(c.steps.size() == 2);
  CHECK(c.steps[0].name == "h");
  CHECK(c.steps[0].targets == std::vector<int>{0});
  CHECK(c.steps[1].name == "cnot");
  CHECK(c.steps[1].targets == std::vector<int>{0, 1});
  CHECK(c.steps[1].kind == GateStep::Kind::unitary);
}

TEST_CASE("comments and blank lines are ignored") {
  const CircuitIR c = parse_circuit(
      "# bell pair\n\nqubits 2   # two qubits\n h 0\n\n# entangle\ncnot 0 1");
  CHECK(c.num_qubits == 2);
  CHECK(c.steps.size() == 2);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_circuit("qubits 2\nfrob 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
  }
  try {
    parse_circuit("qubits 2\nh abc\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 3);
  }
  CHECK_THROWS_AS(parse_circuit("h 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit(""), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nqubits 3\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh 0 1\n"), ParseError);
}

TEST_CASE("range errors for bad values") {
  CHECK_THROWS_AS(parse_circuit("qubits 1\ndepol 0 1.5\n"), RangeError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\ncnot 1 1\n"), RangeError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh 2\n"), RangeError);
  CHECK_THROWS_AS(parse_circuit("qubits 0\n"), RangeError);
}

TEST_CASE("print_circuit emits the canonical form") {
  CircuitIR c;
  c.num_qubits = 2;
  c.steps.push_back({GateStep::Kind::unitary, "h", {0}, {}});
  c.steps.push_back({GateStep::Kind::unitary, "cnot", {0, 1}, {}});
  CHECK(print_circuit(c) == "qubits 2\nh 0\ncnot 0 1\n");
}

TEST_CASE("parse after print is the identity") {
  RandomSource rng(77);
  for (int rep = 0; rep < 20; ++rep) {
    const CircuitIR c = random_circuit(1 + rep % 4, 12, rng);
    CHECK(parse_circuit(print_circuit(c)) == c);
  }
}

TEST_CASE("projector set documents round trip") {
  const ProjectorSet set = six_state_set(1);
  const ProjectorSet back = set_from_text(set_to_text(set));
  CHECK(back.dim == 2);
  CHECK(back.label == set.label);
  REQUIRE(back.size() == set.size());
  for (int i = 0; i < set.size(); ++i) {
    CHECK((back.kets[i] - set.kets[i]).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("set documents reject non-unit kets") {
  const std::string text = R"({
    "format": "projector-set", "layout_version": 1, "dim": 2,
    "label": "bad", "kets": [[[2.0, 0.0], [0.0, 0.0]]]
  })";
  CHECK_THROWS_AS(set_from_text(text), NormError);
}

TEST_CASE("tensor documents round trip") {
  TestRng trng(71);
  const PauliParameterTensor t =
      tilde_from_rho(pftest::random_density(4, trng));
  const PauliParameterTensor t2 = pauli_tensor_from_text(pauli_tensor_to_text(t));
  CHECK(t2.m == 2);
  CHECK(max_abs(RealVector(t2.values - t.values)) == 0.0);

  const ProbabilityTensor p = p_from_tilde(t);
  const ProbabilityTensor p2 =
      probability_tensor_from_text(probability_tensor_to_text(p));
  CHECK(max_abs(RealVector(p2.values - p.values)) == 0.0);
}

TEST_CASE("density and ptm documents round trip") {
  TestRng trng(72);
  const ComplexMatrix rho = pftest::random_density(4, trng);
  CHECK(max_abs(ComplexMatrix(density_from_text(density_to_text(rho)) -
                              rho)) == 0.0);

  const PauliTransferMatrix a =
      ptm_of_unitary(pftest::random_unitary(4, trng));
  const PauliTransferMatrix a2 = ptm_from_text(ptm_to_text(a));
  CHECK(a2.arity == 2);
  CHECK(a2.trace_preserving == a.trace_preserving);
  CHECK(max_abs(RealMatrix(a2.entries - a.entries)) == 0.0);
}

TEST_CASE("peek_kind distinguishes the document formats") {
  CHECK(peek_kind(set_to_text(six_state_set(1))) == DocKind::projector_set);
  CHECK(peek_kind(pauli_tensor_to_text(zero_state_tensor(1))) ==
        DocKind::pauli_tensor);
  CHECK(peek_kind(probability_tensor_to_text(
            p_from_tilde(zero_state_tensor(1)))) ==
        DocKind::probability_tensor);
  CHECK(peek_kind(density_to_text(ComplexMatrix::Identity(2, 2) * 0.5)) ==
        DocKind::density);
  CHECK(peek_kind(ptm_to_text(identity_ptm(1))) == DocKind::ptm);
  CHECK_THROWS_AS(peek_kind("{\"format\": \"nope\"}"), ParseError);
  CHECK_THROWS_AS(peek_kind("not json"), ParseError);
}

TEST_CASE("layout version is enforced") {
  std::string text = pauli_tensor_to_text(zero_state_tensor(1));
  const std::string needle = "\"layout_version\": 1";
  text.replace(text.find(needle), needle.size(), "\"layout_version\": 99");
  CHECK_THROWS_AS(pauli_tensor_from_text(text), ParseError);
}

TEST_CASE("tensor documents validate the value count") {
  const std::string text = R"({
    "format": "tensor", "layout_version": 1, "kind": "pauli",
    "m": 2, "values": [1.0, 0.0]
  })";
  CHECK_THROWS_AS(pauli_tensor_from_text(text), ParseError);
}

}  // TEST_SUITE
