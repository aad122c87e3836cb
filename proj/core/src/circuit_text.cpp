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

#include "pauliframe/circuit_text.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace pframe {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

long parse_int(const Token& tok, int line_no) {
  const char* begin = tok.text.c_str();
  char* end = nullptr;
  const long value = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw ParseError("line " + std::to_string(line_no) + ": expected an "
                     "integer, got '" + tok.text + "'",
                     line_no, tok.column);
  }
  return value;
}

double parse_real(const Token& tok, int line_no) {
  const char* begin = tok.text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError("line " + std::to_string(line_no) + ": expected a "
                     "number, got '" + tok.text + "'",
                     line_no, tok.column);
  }
  return value;
}

bool known_statement(const std::string& name) {
  static const char* kNames[] = {"h",  "x",  "y",    "z",  "s",
                                 "t",  "rx", "ry",   "rz", "cnot",
                                 "cz", "depol", "ampdamp"};
  for (const char* n : kNames) {
    if (name == n) return true;
  }
  return false;
}

}  // namespace

CircuitIR parse_circuit(const std::string& text) {
  CircuitIR circuit;
  bool have_header = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];

    if (!have_header) {
      if (head.text != "qubits") {
        throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'qubits <m>' first, got '" +
                             head.text + "'",
                         line_no, head.column);
      }
      if (tokens.size() != 2) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": 'qubits' takes exactly one argument",
                         line_no, head.column);
      }
      const long m = parse_int(tokens[1], line_no);
      if (m < 1) {
        throw RangeError("line " + std::to_string(line_no) +
                             ": qubit count must be >= 1, got " +
                             std::to_string(m),
                         line_no);
      }
      circuit.num_qubits = static_cast<int>(m);
      have_header = true;
      continue;
    }

    if (head.text == "qubits") {
      throw ParseError("line " + std::to_string(line_no) +
                           ": duplicate 'qubits' statement",
                       line_no, head.column);
    }
    if (!known_statement(head.text)) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": unknown statement '" + head.text + "'",
                       line_no, head.column);
    }

    const int arity = gate_arity(head.text);
    const int n_params = gate_param_count(head.text);
    if (static_cast<int>(tokens.size()) != 1 + arity + n_params) {
      throw ParseError("line " + std::to_string(line_no) + ": '" + head.text +
                           "' takes " + std::to_string(arity + n_params) +
                           " arguments",
                       line_no, head.column);
    }

    GateStep step;
    step.name = head.text;
    step.kind = is_channel_name(head.text) ? GateStep::Kind::channel
                                           : GateStep::Kind::unitary;
    for (int i = 0; i < arity; ++i) {
      const long q = parse_int(tokens[1 + i], line_no);
      if (q < 0 || q >= circuit.num_qubits) {
        throw RangeError("line " + std::to_string(line_no) + ": qubit " +
                             std::to_string(q) + " outside 0.." +
                             std::to_string(circuit.num_qubits - 1),
                         line_no);
      }
      step.targets.push_back(static_cast<int>(q));
    }
    if (arity == 2 && step.targets[0] == step.targets[1]) {
      throw RangeError("line " + std::to_string(line_no) +
                           ": control and target must differ",
                       line_no);
    }
    for (int i = 0; i < n_params; ++i) {
      const double value = parse_real(tokens[1 + arity + i], line_no);
      if (step.kind == GateStep::Kind::channel &&
          (value < 0.0 || value > 1.0)) {
        throw RangeError("line " + std::to_string(line_no) + ": '" +
                             head.text + "' parameter " +
                             std::to_string(value) + " outside [0, 1]",
                         line_no);
      }
      step.params.push_back(value);
    }
    circuit.steps.push_back(std::move(step));
  }
  if (!have_header) {
    throw ParseError("missing 'qubits <m>' statement", 1, 1);
  }
  return circuit;
}

std::string print_circuit(const CircuitIR& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.num_qubits << "\n";
  char buf[64];
  for (const GateStep& step : circuit.steps) {
    out << step.name;
    for (int q : step.targets) out << ' ' << q;
    for (double p : step.params) {
      std::snprintf(buf, sizeof buf, "%.17g", p);
      out << ' ' << buf;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace pframe
