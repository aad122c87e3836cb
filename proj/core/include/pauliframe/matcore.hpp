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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "pauliframe/errors.hpp"
#include "pauliframe/tolerances.hpp"

namespace pframe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

//=============================================================================
// Real parametrization of Hermitian matrices
//=============================================================================
//
// A Hermitian n x n matrix is described by n^2 real coordinates in a fixed
// order: the n diagonal entries first, then for every pair k < l in
// lexicographic order the real part followed by the imaginary part of
// entry (k, l). Every inversion matrix built by the frame module is
// expressed in this ordering, so it must not change.

/// Number of real coordinates of H(n).
inline int coords_dim(int n) { return n * n; }

/// Hermitian matrix -> n^2 real coordinates. Reads the diagonal (real parts)
/// and the upper triangle; the lower triangle is ignored.
RealVector herm_to_coords(const ComplexMatrix& h);

/// Inverse of herm_to_coords; always produces an exactly Hermitian matrix.
ComplexMatrix coords_to_herm(const RealVector& coords);

/// Diagonal of the trace-pairing Gram matrix in the coordinate basis:
/// Tr(A B) = sum_j weights[j] * coords(A)[j] * coords(B)[j] for Hermitian
/// A, B. (1 for diagonal coordinates, 2 for off-diagonal ones.)
RealVector trace_pairing_weights(int n);

//=============================================================================
// Kernel operations
//=============================================================================

/// Rank-one projector |v><v|. Throws NormError if the norm of v deviates
/// from one by more than tol.unit_norm.
ComplexMatrix projector_of(const ComplexVector& v, const Tolerances& tol = {});

/// Kronecker product with the first factor most significant:
/// entry((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(a b) when conjugated is false, Tr(a b^dag) when true. The conjugated
/// form is a positive definite scalar product on complex matrices; both
/// forms coincide on Hermitian inputs.
Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b,
                    bool conjugated);

/// The n^2 Hermitian matrices H+_kl (k >= l) and H-_kl (k > l) spanning
/// H(n), ordered: H+_kk for k = 1..n, then for each pair k < l in
/// lexicographic order H+_lk = (E_lk + E_kl)/2 followed by
/// H-_lk = i(E_lk - E_kl)/2.
std::vector<ComplexMatrix> hermitian_pair_basis(int n);

/// Re-phase a ket so its first nonzero amplitude is real and nonnegative.
ComplexVector canonical_phase(const ComplexVector& v);

//=============================================================================
// Density matrix validation
//=============================================================================

struct DensityDiagnostics {
  double hermiticity_residual = 0.0;  // max |h(k,l) - conj(h(l,k))|
  double trace_deviation = 0.0;       // |Tr - 1|
  double min_eigenvalue = 0.0;        // of the symmetrized matrix
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;
  bool ok() const { return hermitian && unit_trace && positive; }
};

/// Measure all three density-matrix invariants without throwing. The
/// spectral test runs on the symmetrized matrix (h + h^dag)/2.
DensityDiagnostics check_density(const ComplexMatrix& m,
                                 const Tolerances& tol = {});

class DensityMatrix;

/// Returns the validated density matrix or throws HermiticityError /
/// TraceError / NegativityError; the message lists every violated invariant
/// and each exception carries the measured residual.
DensityMatrix validate_density(const ComplexMatrix& m,
                               const Tolerances& tol = {});

/// A complex matrix that has passed validate_density. Immutable.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  const ComplexMatrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&,
                                        const Tolerances&);
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

}  // namespace pframe
