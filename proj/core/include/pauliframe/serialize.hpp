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

#include "pauliframe/frame.hpp"
#include "pauliframe/qubitframe.hpp"
#include "pauliframe/transfer.hpp"

namespace pframe {

/// Version tag embedded in every exchange document and report.
inline constexpr int kLayoutVersion = 1;

/// Exchange documents are JSON with a stable field order.
///
///   projector set: {"format":"projector-set","layout_version":1,"dim":n,
///                   "label":l,"kets":[[[re,im],...],...]}
///   tensor:        {"format":"tensor","layout_version":1,
///                   "kind":"pauli"|"probability","m":m,"values":[...]}
///                  (flat row-major, qubit 0 most significant)
///   density:       {"format":"density","layout_version":1,"dim":n,
///                   "entries":[[re,im],...]}  (row-major)
///   ptm:           {"format":"ptm","layout_version":1,"arity":l,
///                   "trace_preserving":b,"entries":[...]}  (row-major)

enum class DocKind {
  projector_set,
  pauli_tensor,
  probability_tensor,
  density,
  ptm,
};

/// Identifies a document without fully decoding it. ParseError on malformed
/// JSON or an unknown format tag.
DocKind peek_kind(const std::string& text);

std::string set_to_text(const ProjectorSet& set);
ProjectorSet set_from_text(const std::string& text);

std::string pauli_tensor_to_text(const PauliParameterTensor& t);
PauliParameterTensor pauli_tensor_from_text(const std::string& text);

std::string probability_tensor_to_text(const ProbabilityTensor& p);
ProbabilityTensor probability_tensor_from_text(const std::string& text);

std::string density_to_text(const ComplexMatrix& rho);
ComplexMatrix density_from_text(const std::string& text);

std::string ptm_to_text(const PauliTransferMatrix& a);
PauliTransferMatrix ptm_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace pframe
