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

namespace pframe {

/// Central numeric tolerances. The defaults are the values the test suite
/// pins; every operation that validates input takes a Tolerances argument so
/// callers can relax or tighten them per call.
struct Tolerances {
  /// Hermiticity residual, relative to the largest entry magnitude.
  double herm_rel = 1e-12;
  /// Allowed deviation of Tr(rho) from one.
  double trace = 1e-10;
  /// Eigenvalue floor for positive semidefiniteness: lambda_min >= -psd.
  double psd = 1e-9;
  /// Allowed deviation of a ket norm from one.
  double unit_norm = 1e-9;
  /// |<u|v>| below which two kets count as orthogonal (classification).
  double orthogonality = 1e-9;
  /// Singular value cutoff for numerical rank, relative to sigma_max.
  double rank_cutoff = 1e-9;
  /// max |U^dag U - Id| above which a matrix is rejected as non-unitary.
  double unitarity = 1e-9;
  /// max |sum_k V_k^dag V_k - Id| allowed for a Kraus channel.
  double trace_preservation = 1e-9;
};

}  // namespace pframe
