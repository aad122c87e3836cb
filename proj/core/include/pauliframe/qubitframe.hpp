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

#include <vector>

#include "pauliframe/frame.hpp"
#include "pauliframe/matcore.hpp"

namespace pframe {

//=============================================================================
// Index conventions
//=============================================================================
//
// Pauli indices: 0 = Id, 1 = sigma_x, 2 = sigma_y, 3 = sigma_z.
// Six-state indices: flat = 2*(mu-1) + theta for axis mu in {1,2,3} (x,y,z,
// aligned with the Pauli numbering) and outcome theta in {0,1}; the ket
// |theta^mu> is the sigma_mu eigenvector with eigenvalue (-1)^theta.
//
// All multi-qubit tensors are flat row-major arrays with qubit 0 most
// significant: a Pauli tensor index is sum_k nu_k 4^(m-1-k), a probability
// tensor index is sum_k flat_k 6^(m-1-k).

inline long long pow_ll(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Digits of flat in the given base, most significant first.
std::vector<int> decode_digits(long long flat, int m, int base);
long long encode_digits(const std::vector<int>& digits, int base);

/// Number of qubits for a dimension; ShapeError unless dim = 2^m, m >= 1.
int qubit_count_of_dim(Eigen::Index dim);

struct SixState {
  static int flat(int mu, int theta) { return 2 * (mu - 1) + theta; }
  static int axis(int flat) { return flat / 2 + 1; }
  static int outcome(int flat) { return flat % 2; }
};

//=============================================================================
// Pauli strings and the composite six-state set
//=============================================================================

/// The 2x2 matrix sigma^mu, mu in 0..3.
const ComplexMatrix& pauli(int mu);

/// sigma^{nu_1} (x) ... (x) sigma^{nu_m}, dimension 2^m.
ComplexMatrix pauli_string(const std::vector<int>& indices);

/// Tr(a * sigma^nu) for the string with the given digits, in O(2^m) using
/// the one-nonzero-per-row structure of Pauli strings.
Complex pauli_string_trace(const ComplexMatrix& a,
                           const std::vector<int>& digits);

/// The six single-qubit kets in flat order: 0x, 1x, 0y, 1y, 0z, 1z.
const ComplexVector& six_state_ket(int flat);

/// m-fold composition of the single-qubit six-state set; ket order follows
/// the flat six-state index per qubit, qubit 0 most significant. Dense
/// set-level work: guarded at m <= 5 (the projector cache grows as 24^m).
ProjectorSet six_state_set(int m);

//=============================================================================
// Tensors
//=============================================================================

/// 4^m real parameters Tr(rho sigma^{nu_1...nu_m}); entry [0...0] is the
/// trace. Plain data; physicality is never silently enforced.
struct PauliParameterTensor {
  int m = 0;
  RealVector values;
};

/// 6^m transition probabilities to the composite six-state kets.
struct ProbabilityTensor {
  int m = 0;
  RealVector values;
};

/// Pauli tensor of |0...0><0...0| (1 at every index with digits in {0,3}).
PauliParameterTensor zero_state_tensor(int m);

/// Throws TraceError when the leading entry deviates from one beyond 1e-10,
/// RangeError when any entry leaves [-1 - range_tol, 1 + range_tol].
void validate_pauli_tensor(const PauliParameterTensor& t,
                           double range_tol = 1e-9);

/// Largest |sum over outcomes - 1| across the 3^m fixed-axis groups.
double max_outcome_group_deviation(const ProbabilityTensor& p);

/// Throws RangeError for entries outside [-tol, 1 + tol] and
/// InconsistentProbabilities when an outcome group sums away from one
/// beyond group_tol.
void validate_probability_tensor(const ProbabilityTensor& p,
                                 double range_tol = 1e-9,
                                 double group_tol = 1e-9);

//=============================================================================
// Conversions
//=============================================================================

/// p~_nu = Tr(rho sigma^nu). ShapeError unless dim(rho) is a power of two.
PauliParameterTensor tilde_from_rho(const ComplexMatrix& rho);

/// rho = 2^-m sum_nu p~_nu sigma^nu. Hermitian with trace = leading entry;
/// NOT guaranteed positive, the caller validates physicality.
ComplexMatrix rho_from_tilde(const PauliParameterTensor& t);

/// p = (T (x) ... (x) T) p~ with the per-qubit map
/// p_theta^mu = (p~_0 + (-1)^theta p~_mu) / 2. Guarded at m <= 6.
ProbabilityTensor p_from_tilde(const PauliParameterTensor& t);

/// Zero Pauli indices admit several decompositions in terms of the
/// probabilities; canonical_z reads them off the z axis, average averages
/// over all 3^#zeros axis choices. Both coincide on exact data.
enum class ZeroAxisPolicy { canonical_z, average };

/// Inverse of p_from_tilde under the chosen policy. Throws
/// InconsistentProbabilities (reporting the worst axis group) when an
/// outcome group sums away from one by more than consistency_tol.
PauliParameterTensor tilde_from_p(const ProbabilityTensor& p,
                                  ZeroAxisPolicy policy =
                                      ZeroAxisPolicy::canonical_z,
                                  double consistency_tol = 1e-6);

//=============================================================================
// Marginals and products
//=============================================================================

struct MarginalTable {
  int m = 0;
  /// Per qubit: row mu-1, column theta.
  std::vector<Eigen::Matrix<double, 3, 2>> probabilities;
  /// Per qubit: p~^(k)_nu for nu = 0..3 (entry 0 is the leading entry).
  std::vector<Eigen::Vector4d> parameters;
};

MarginalTable marginals(const PauliParameterTensor& t);

/// Outer product; qubits of a come first (most significant).
PauliParameterTensor tensor_outer(const PauliParameterTensor& a,
                                  const PauliParameterTensor& b);

/// Outer product of single-qubit tensors (ShapeError unless every part has
/// m = 1).
PauliParameterTensor product_tensor(
    const std::vector<PauliParameterTensor>& parts);

struct FactorizationResult {
  bool is_product = false;
  /// Two leading singular values of the reshaped tensor.
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  /// sigma_2 / sigma_1.
  double singular_ratio = 0.0;
  PauliParameterTensor left;   // qubits 0..cut-1
  PauliParameterTensor right;  // qubits cut..m-1
};

/// Reshapes t into a 4^cut x 4^(m-cut) matrix and tests numerical rank one
/// (sigma_2 < tol * sigma_1). On success the factors are normalized so the
/// right one has leading entry 1 and their outer product reproduces t
/// within tol. Never throws on non-product input; 1 <= cut < m.
FactorizationResult is_product(const PauliParameterTensor& t, int cut,
                               double tol);

}  // namespace pframe
