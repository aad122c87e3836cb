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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pauliframe/circuit_text.hpp"
#include "pauliframe/oracle.hpp"
#include "pauliframe/serialize.hpp"

namespace pframe {

// Command implementations behind the pfsim tool. Each returns the JSON
// report it also writes to the --out path (when given), so they are directly
// testable. Every report embeds the layout version, the seed, and the
// tolerance that were in effect.

/// Dense density simulation keeps full 2^m matrices per step.
inline constexpr int kDensityQubitCeiling = 8;
/// Pauli tensors are dense 4^m arrays.
inline constexpr int kTensorQubitCeiling = 10;
/// Probability tensors are only emitted in reports up to this size.
inline constexpr int kProbabilityReportCeiling = 4;

enum class Representation { ptm, density, both };

struct SimulateOptions {
  std::string circuit_path;
  Representation repr = Representation::both;
  /// Optional pauli-tensor document replacing the |0...0> initial state.
  std::optional<std::string> initial_tensor_path;
  std::string out_path;  // empty: report is only returned
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
};

std::string run_simulate(const SimulateOptions& opts);

struct VerifySetOptions {
  std::string set_path;
  long long budget = kDefaultSearchLimit;
  std::string out_path;
  /// Orthogonality cutoff used by the classifier.
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
};

std::string run_verify_set(const VerifySetOptions& opts);

struct ConvertOptions {
  std::string in_path;
  std::string target_kind;  // "density" | "pauli" | "probability"
  ZeroAxisPolicy policy = ZeroAxisPolicy::canonical_z;
  std::string out_path;
  /// Outcome-group consistency threshold for probability inputs.
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
};

std::string run_convert(const ConvertOptions& opts);

struct BenchOptions {
  int m_min = 2;
  int m_max = 5;
  int depth = 20;
  std::uint64_t seed = 1;
  std::string out_path;
  double tolerance = 1e-9;
};

std::string run_bench(const BenchOptions& opts);

//=============================================================================
// Building blocks shared with the acceptance suite
//=============================================================================

/// PTM for one circuit step (gate or channel).
PauliTransferMatrix ptm_of_step(const GateStep& step);

/// Tensor-representation trajectory; element 0 is the initial tensor.
std::vector<PauliParameterTensor> simulate_tensor(
    const CircuitIR& circuit, const PauliParameterTensor& initial);

struct BenchPoint {
  int m = 0;
  int gates = 0;
  double local_seconds_per_gate = 0.0;
  double dense_seconds_per_gate = 0.0;
  double speedup = 0.0;
  double max_final_discrepancy = 0.0;
};

/// Times one random depth-`depth` circuit applied by local contraction
/// versus by dense embedded 4^m x 4^m matrix-vector multiplies (matrices
/// prebuilt outside the timed region) and cross-checks the final tensors.
BenchPoint bench_local_vs_dense(int m, int depth, std::uint64_t seed);

}  // namespace pframe
