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

#include <optional>
#include <string>
#include <vector>

#include "pauliframe/matcore.hpp"

namespace pframe {

//=============================================================================
// Projector sets
//=============================================================================

/// An ordered set of unit kets in dimension n with cached rank-one
/// projectors. Kets are normalized and re-phased (first nonzero amplitude
/// real, nonnegative) at construction; immutable afterwards.
struct ProjectorSet {
  int dim = 0;
  std::vector<ComplexVector> kets;
  std::vector<ComplexMatrix> projectors;
  std::string label;

  int size() const { return static_cast<int>(kets.size()); }
};

/// Validates (ShapeError / NormError), normalizes and phases the kets, and
/// caches the projectors.
ProjectorSet make_projector_set(int dim, std::vector<ComplexVector> kets,
                                std::string label = "",
                                const Tolerances& tol = {});

/// The transition probabilities p_alpha = <v_alpha|rho|v_alpha> = Tr(rho P).
/// Defined (and linear) on all Hermitian inputs, not just density matrices.
RealVector forward_map(const ProjectorSet& set, const ComplexMatrix& rho);

/// Matrix M with p = M * herm_to_coords(rho); N x n^2.
struct ForwardMapMatrix {
  std::string set_label;
  int dim = 0;
  RealMatrix m;
};

ForwardMapMatrix build_forward_matrix(const ProjectorSet& set);

/// Numerical rank of the forward matrix at relative singular value cutoff
/// tol.rank_cutoff.
int rank_of_projector_span(const ProjectorSet& set, const Tolerances& tol = {});

//=============================================================================
// Inverses
//=============================================================================

enum class InverseKind { closed_form, pseudoinverse, composed };

/// Matrix W with rho ~= coords_to_herm(W p); n^2 x N. For any representative
/// set W M = Id on the n^2 coordinates; for minimal sets also M W = Id.
struct RightInverse {
  std::string set_label;
  int dim = 0;
  InverseKind kind = InverseKind::pseudoinverse;
  RealMatrix w;
};

/// Minimum-norm (Moore-Penrose) right inverse of the forward matrix.
/// Throws NotRepresentative (carrying the rank found) if rank < n^2.
RightInverse build_right_inverse(const ProjectorSet& set,
                                 const Tolerances& tol = {});

/// Closed-form inverse for the uncompleted standard set of
/// build_standard_set(n, false), built entrywise from
///   rho_aa      = p^z_a
///   Re rho_ab   = p^x_ab - (p^z_a + p^z_b)/2
///   Im rho_ab   = (p^z_a + p^z_b)/2 - p^y_ab        (a < b).
/// Agrees with the pseudoinverse (the minimal set's inverse is unique).
RightInverse standard_closed_form_inverse(int n);

/// coords_to_herm(W p).
ComplexMatrix reconstruct(const RightInverse& inv, const RealVector& p);

/// Real coefficients c with sum_a c_a P_a = target; unique for minimal sets,
/// minimum-norm otherwise. Throws NotRepresentative.
RealVector decompose_in_projectors(const ProjectorSet& set,
                                   const ComplexMatrix& target,
                                   const Tolerances& tol = {});

/// Affine reconstruction rho = coords_to_herm(matrix_part * p) + offset for
/// trace-one Hermitian rho, from a set of N = n^2 - 1 kets.
struct AffineInverse {
  std::string set_label;
  int dim = 0;
  RealMatrix matrix_part;  // n^2 x (n^2 - 1)
  ComplexMatrix offset;
};

/// Throws ShapeError unless N = n^2 - 1, NotAffineReconstructible (carrying
/// the rank deficiency) when the forward matrix restricted to the trace-one
/// slice is singular.
AffineInverse build_affine_inverse(const ProjectorSet& set,
                                   const Tolerances& tol = {});

ComplexMatrix reconstruct(const AffineInverse& inv, const RealVector& p);

//=============================================================================
// Classification
//=============================================================================

/// A ket with two distinct orthonormal completions from within the set
/// (evidence that a complete set is not perfect).
struct CompletionWitness {
  int ket = -1;
  std::vector<int> first;
  std::vector<int> second;
};

/// Classification results. Completeness, almost perfection and perfection
/// presume representativity (they are defined for representative sets); the
/// combinatorial fields are left empty ("unknown") when the search guard or
/// the node budget is exceeded.
struct Classification {
  int rank = 0;
  bool representative = false;
  bool minimal = false;
  std::optional<bool> complete;
  std::optional<bool> almost_perfect;
  std::optional<bool> perfect;
  /// Disjoint partition into orthonormal bases; filled when almost_perfect.
  std::vector<std::vector<int>> basis_partition;
  /// Orthonormal completions found per ket (after deduplication).
  std::vector<long long> completion_counts;
  std::optional<CompletionWitness> nonunique_completion;
  /// Kets equal up to global phase are collapsed before the combinatorial
  /// phases; this counts how many were dropped.
  int duplicates_collapsed = 0;
  bool search_budget_exhausted = false;
};

/// Default guard: combinatorial phases run only when N * n <= search_limit
/// (1024 = 64 * 16, i.e. N <= 64 kets at n <= 16).
inline constexpr long long kDefaultSearchLimit = 1024;

Classification classify(const ProjectorSet& set,
                        long long search_limit = kDefaultSearchLimit,
                        const Tolerances& tol = {});

//=============================================================================
// Set construction and composition
//=============================================================================

/// The n^2 kets |a>, (|a>+|b>)/sqrt2, (|a>+i|b>)/sqrt2 (z family, then x
/// pairs in lexicographic order, then y pairs). With completed = true the
/// families (|a>-|b>)/sqrt2 and (|a>-i|b>)/sqrt2 are appended, 2n^2 - n kets
/// total.
ProjectorSet build_standard_set(int n, bool completed);

/// All products v_a (x) u_b with the first factor's index most significant.
ProjectorSet compose_sets(const ProjectorSet& s1, const ProjectorSet& s2);

/// Right inverse of the composed set whose reconstruction operators are the
/// tensor products of the factors' reconstruction operators. It is a valid
/// right inverse but in general differs from the composed set's
/// pseudoinverse by a null-space element, hence kind = composed.
RightInverse compose_right_inverse(const RightInverse& w1,
                                   const RightInverse& w2);

}  // namespace pframe
