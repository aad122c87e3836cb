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

#pragma once

#include <string>

#include "pauliframe/oracle.hpp"

namespace pframe {

/// Circuit file grammar, one statement per line, '#' starts a comment:
///
///   qubits <m>
///   h|x|y|z|s|t <q>
///   rx|ry|rz <q> <angle-radians>
///   cnot|cz <control> <target>
///   depol <q> <lambda>
///   ampdamp <q> <gamma>
///
/// Qubits are 0-based. Syntax problems raise ParseError with 1-based line
/// and column; out-of-range qubits or parameters raise RangeError.
CircuitIR parse_circuit(const std::string& text);

/// Canonical text form; parse_circuit(print_circuit(c)) == c.
std::string print_circuit(const CircuitIR& circuit);

}  // namespace pframe
