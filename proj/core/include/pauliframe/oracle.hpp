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
#include <random>
#include <string>
#include <vector>

#include "pauliframe/matcore.hpp"
#include "pauliframe/transfer.hpp"

namespace pframe {

//=============================================================================
// Circuit intermediate representation
//=============================================================================

struct GateStep {
  enum class Kind { unitary, channel };
  Kind kind = Kind::unitary;
  std::string name;
  std::vector<int> targets;      // 0-based, distinct
  std::vector<double> params;

  bool operator==(const GateStep&) const = default;
};

struct CircuitIR {
  int num_qubits = 0;
  std::vector<GateStep> steps;

  bool operator==(const CircuitIR&) const = default;
};

/// Unitary gates: h x y z s t (no parameter), rx ry rz (angle in radians,
/// 2x2), cnot cz (4x4, control index most significant). RangeError on an
/// unknown name or wrong parameter count.
ComplexMatrix gate_unitary(const std::string& name,
                           const std::vector<double>& params);

/// Channels: depol (lambda in [0,1]), ampdamp (gamma in [0,1]), single
/// qubit. RangeError on unknown name or parameter out of range.
KrausChannel make_channel(const std::string& name,
                          const std::vector<double>& params);

bool is_channel_name(const std::string& name);
/// Number of qubit arguments of a statement (1 or 2).
int gate_arity(const std::string& name);
/// Number of numeric parameters of a statement (0 or 1).
int gate_param_count(const std::string& name);

//=============================================================================
// Dense density-matrix evolution
//=============================================================================

/// |0...0><0...0| on m qubits.
DensityMatrix zero_state_density(int m);

/// op (dimension 2^targets) extended to 2^m by the identity on the other
/// qubits; qubit 0 is the most significant bit, the first listed target is
/// the most significant gate index.
ComplexMatrix embed_on_targets(const ComplexMatrix& op, int m,
                               const std::vector<int>& targets);

DensityMatrix evolve_unitary(const DensityMatrix& rho, const ComplexMatrix& u,
                             const std::vector<int>& targets,
                             const Tolerances& tol = {});

DensityMatrix evolve_channel(const DensityMatrix& rho, const KrausChannel& ch,
                             const std::vector<int>& targets,
                             const Tolerances& tol = {});

/// Step-by-step evolution; trajectory[0] is the initial state and every
/// intermediate state passes validate_density.
std::vector<DensityMatrix> simulate_density(const CircuitIR& circuit,
                                            const DensityMatrix& initial,
                                            const Tolerances& tol = {});

//=============================================================================
// Seeded random instances
//=============================================================================

/// Deterministic random stream: identical seeds give bit-identical values
/// regardless of the standard library (normals via explicit Box-Muller).
class RandomSource {
 public:
  static constexpr const char* kGeneratorId = "mt19937_64/box-muller/v1";

  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 significant bits.
  double uniform();
  double normal();
  Complex complex_normal();
  /// Uniform integer in [0, bound).
  std::uint64_t integer(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

ComplexVector random_pure_state(int dim, RandomSource& rng);

/// G G^dag / Tr(G G^dag) for complex-normal G; full rank almost surely.
ComplexMatrix random_density(int dim, RandomSource& rng);

/// QR orthonormalization of a complex-normal matrix with the R-diagonal
/// phases fixed (Haar distributed).
ComplexMatrix random_unitary(int dim, RandomSource& rng);

/// Steps sampled uniformly from h x y z s t rx ry rz cnot cz depol ampdamp
/// (two-qubit gates dropped when m = 1); angles uniform in [0, 2pi),
/// channel parameters uniform in [0, 1].
CircuitIR random_circuit(int m, int depth, RandomSource& rng);

}  // namespace pframe
