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
#include <vector>

#include "pauliframe/frame.hpp"
#include "pauliframe/qubitframe.hpp"

namespace pframe {

//=============================================================================
// Pauli transfer matrices
//=============================================================================

/// Real 4^l x 4^l matrix acting on Pauli parameter tensors, p~' = A p~.
/// Entries are defined against the tr-orthonormal basis 2^(-l/2) sigma:
/// A[K][J] = 2^-l Tr(sigma^J U^dag sigma^K U) for a unitary source, summed
/// over Kraus terms for a channel. For trace-preserving sources the row of
/// the all-zero index is (1, 0, ..., 0); for unitary sources the block on
/// the remaining indices is orthogonal.
struct PauliTransferMatrix {
  int arity = 0;
  RealMatrix entries;
  bool trace_preserving = false;
};

/// A completely positive map rho -> sum_k V rho V^dag on l qubits.
struct KrausChannel {
  int arity = 0;
  std::vector<ComplexMatrix> kraus_ops;
};

/// Validates shapes and trace preservation sum_k V^dag V = Id within
/// tol.trace_preservation (TraceConditionViolated otherwise).
KrausChannel make_kraus_channel(std::vector<ComplexMatrix> ops,
                                const Tolerances& tol = {});

PauliTransferMatrix identity_ptm(int arity);

/// Throws NotUnitary when max |U^dag U - Id| exceeds tol.unitarity,
/// ShapeError unless the dimension is a power of two.
PauliTransferMatrix ptm_of_unitary(const ComplexMatrix& u,
                                   const Tolerances& tol = {});

PauliTransferMatrix ptm_of_channel(const KrausChannel& ch,
                                   const Tolerances& tol = {});

/// Contracts the transfer matrix against the target index slots (0-based,
/// distinct, listed most significant first), leaving the other indices
/// untouched. Equal to the action of embed_global at every size.
PauliParameterTensor apply_local(const PauliParameterTensor& t,
                                 const PauliTransferMatrix& a,
                                 const std::vector<int>& targets);

/// The full 4^m x 4^m matrix acting as a on the targets and as the identity
/// elsewhere.
RealMatrix embed_global(const PauliTransferMatrix& a, int m,
                        const std::vector<int>& targets);

//=============================================================================
// Probability-space transfer, metric, averages
//=============================================================================

/// N x N matrix A with A p_in = p_out. Canonical only on the image subspace
/// of the forward map when the set is not minimal: A depends on the choice
/// of right inverse off that subspace.
struct ProbTransferMatrix {
  std::string set_label;
  RealMatrix entries;
};

ProbTransferMatrix prob_transfer_of(const ProjectorSet& set,
                                    const RightInverse& w,
                                    const ComplexMatrix& u,
                                    const Tolerances& tol = {});
ProbTransferMatrix prob_transfer_of(const ProjectorSet& set,
                                    const RightInverse& w,
                                    const KrausChannel& ch,
                                    const Tolerances& tol = {});

/// The SO(3) rotation by which a 2x2 unitary moves the Pauli parameters:
/// U^dag sigma^mu U = sum_nu R[mu][nu] sigma^nu, so p~' = R p~ and R equals
/// the non-identity block of ptm_of_unitary(u). u -> R is a homomorphism;
/// the conjugation matrix of U sigma U^dag is its transpose (inverse).
Eigen::Matrix3d so3_of_su2(const ComplexMatrix& u, const Tolerances& tol = {});

/// Symmetric N x N matrix G with p_v^T G p_psi = |<v|psi>|^2 for pure
/// states; built as W^T K W with K the trace pairing in coordinates.
struct TransitionMetric {
  std::string set_label;
  RealMatrix entries;
};

TransitionMetric transition_metric(const ProjectorSet& set,
                                   const RightInverse& w);

/// <X>_rho = Tr(coords_to_herm(W p) X) for the probabilities p of rho.
double expectation(const ProjectorSet& set, const RightInverse& w,
                   const RealVector& p, const ComplexMatrix& x);

}  // namespace pframe
