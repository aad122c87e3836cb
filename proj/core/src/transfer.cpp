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

#include "pauliframe/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace pframe {

namespace {

double unitarity_residual(const ComplexMatrix& u) {
  return (u.adjoint() * u -
          ComplexMatrix::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

// A[K][J] = 2^-l Tr(sigma^J V^dag sigma^K V), accumulated into out.
void accumulate_ptm_term(const ComplexMatrix& v, int l, RealMatrix& out) {
  const long long size = pow_ll(4, l);
  const double scale = 1.0 / static_cast<double>(pow_ll(2, l));
  std::vector<int> digits_k, digits_j;
  for (long long k = 0; k < size; ++k) {
    digits_k = decode_digits(k, l, 4);
    const ComplexMatrix conj_k =
        v.adjoint() * pauli_string(digits_k) * v;
    for (long long j = 0; j < size; ++j) {
      digits_j = decode_digits(j, l, 4);
      out(k, j) += scale * pauli_string_trace(conj_k, digits_j).real();
    }
  }
}

void check_targets(int m, const std::vector<int>& targets) {
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= m) {
      throw IndexError("target qubit " + std::to_string(targets[i]) +
                       " outside 0.." + std::to_string(m - 1));
    }
    for (size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw IndexError("repeated target qubit " +
                         std::to_string(targets[i]));
      }
    }
  }
}

void require_representative(const ProjectorSet& set, const Tolerances& tol,
                            const char* who) {
  const int rank = rank_of_projector_span(set, tol);
  const int nsq = coords_dim(set.dim);
  if (rank < nsq) {
    throw NotRepresentative(std::string(who) + ": projector span has rank " +
                                std::to_string(rank) + ", need " +
                                std::to_string(nsq),
                            rank, nsq);
  }
}

// A = M T W in Hermitian coordinates for any linear map on H(n).
ProbTransferMatrix prob_transfer_impl(
    const ProjectorSet& set, const RightInverse& w,
    const std::function<ComplexMatrix(const ComplexMatrix&)>& map,
    const Tolerances& tol, const char* who) {
  if (w.dim != set.dim || w.w.cols() != set.size()) {
    throw ShapeError(std::string(who) +
                     ": right inverse does not match the set");
  }
  require_representative(set, tol, who);
  const int nsq = coords_dim(set.dim);
  RealMatrix t(nsq, nsq);
  for (int j = 0; j < nsq; ++j) {
    RealVector e = RealVector::Zero(nsq);
    e[j] = 1.0;
    t.col(j) = herm_to_coords(map(coords_to_herm(e)));
  }
  const RealMatrix m = build_forward_matrix(set).m;
  return ProbTransferMatrix{set.label, m * (t * w.w)};
}

}  // namespace

KrausChannel make_kraus_channel(std::vector<ComplexMatrix> ops,
                                const Tolerances& tol) {
  if (ops.empty()) throw ShapeError("make_kraus_channel: no Kraus operators");
  const Eigen::Index dim = ops[0].rows();
  const int arity = qubit_count_of_dim(dim);
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const ComplexMatrix& v : ops) {
    if (v.rows() != dim || v.cols() != dim) {
      throw ShapeError("make_kraus_channel: Kraus operators have mixed "
                       "dimensions");
    }
    sum += v.adjoint() * v;
  }
  const double residual =
      (sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (residual > tol.trace_preservation) {
    throw TraceConditionViolated(
        "make_kraus_channel: sum V^dag V deviates from identity by " +
            std::to_string(residual),
        residual);
  }
  return KrausChannel{arity, std::move(ops)};
}

PauliTransferMatrix identity_ptm(int arity) {
  const long long size = pow_ll(4, arity);
  return PauliTransferMatrix{arity, RealMatrix::Identity(size, size), true};
}

PauliTransferMatrix ptm_of_unitary(const ComplexMatrix& u,
                                   const Tolerances& tol) {
  if (u.rows() != u.cols()) {
    throw ShapeError("ptm_of_unitary: matrix must be square");
  }
  const int l = qubit_count_of_dim(u.rows());
  const double residual = unitarity_residual(u);
  if (residual > tol.unitarity) {
    throw NotUnitary("ptm_of_unitary: max |U^dag U - Id| = " +
                         std::to_string(residual),
                     residual);
  }
  const long long size = pow_ll(4, l);
  RealMatrix entries = RealMatrix::Zero(size, size);
  accumulate_ptm_term(u, l, entries);
  return PauliTransferMatrix{l, std::move(entries), true};
}

PauliTransferMatrix ptm_of_channel(const KrausChannel& ch,
                                   const Tolerances& tol) {
  // Hand-assembled KrausChannel values get re-validated here.
  make_kraus_channel(ch.kraus_ops, tol);
  const int l = ch.arity;
  const long long size = pow_ll(4, l);
  RealMatrix entries = RealMatrix::Zero(size, size);
  for (const ComplexMatrix& v : ch.kraus_ops) {
    accumulate_ptm_term(v, l, entries);
  }
  return PauliTransferMatrix{l, std::move(entries), true};
}

PauliParameterTensor apply_local(const PauliParameterTensor& t,
                                 const PauliTransferMatrix& a,
                                 const std::vector<int>& targets) {
  const int m = t.m;
  const int l = a.arity;
  if (static_cast<int>(targets.size()) != l) {
    throw ShapeError("apply_local: transfer matrix arity " +
                     std::to_string(l) + " does not match " +
                     std::to_string(targets.size()) + " targets");
  }
  if (t.values.size() != pow_ll(4, m)) {
    throw ShapeError("apply_local: tensor size does not match m");
  }
  check_targets(m, targets);

  std::vector<long long> stride(m);
  for (int k = 0; k < m; ++k) stride[k] = pow_ll(4, m - 1 - k);

  const long long block = pow_ll(4, l);
  std::vector<long long> offs(block);
  for (long long j = 0; j < block; ++j) {
    long long off = 0;
    long long rest = j;
    for (int i = l - 1; i >= 0; --i) {
      off += (rest % 4) * stride[targets[i]];
      rest /= 4;
    }
    offs[j] = off;
  }

  std::vector<int> untouched;
  untouched.reserve(m - l);
  for (int k = 0; k < m; ++k) {
    if (std::find(targets.begin(), targets.end(), k) == targets.end()) {
      untouched.push_back(k);
    }
  }
  const long long fibers = pow_ll(4, m - l);

  PauliParameterTensor out{m, RealVector(t.values.size())};
  RealVector x(block), y(block);
  for (long long f = 0; f < fibers; ++f) {
    long long base = 0;
    long long rest = f;
    for (int i = static_cast<int>(untouched.size()) - 1; i >= 0; --i) {
      base += (rest % 4) * stride[untouched[i]];
      rest /= 4;
    }
    for (long long j = 0; j < block; ++j) x[j] = t.values[base + offs[j]];
    y.noalias() = a.entries * x;
    for (long long j = 0; j < block; ++j) out.values[base + offs[j]] = y[j];
  }
  return out;
}

RealMatrix embed_global(const PauliTransferMatrix& a, int m,
                        const std::vector<int>& targets) {
  const int l = a.arity;
  if (static_cast<int>(targets.size()) != l) {
    throw ShapeError("embed_global: arity does not match targets");
  }
  check_targets(m, targets);
  std::vector<long long> stride(m);
  for (int k = 0; k < m; ++k) stride[k] = pow_ll(4, m - 1 - k);
  const long long block = pow_ll(4, l);
  std::vector<long long> offs(block);
  for (long long j = 0; j < block; ++j) {
    long long off = 0;
    long long rest = j;
    for (int i = l - 1; i >= 0; --i) {
      off += (rest % 4) * stride[targets[i]];
      rest /= 4;
    }
    offs[j] = off;
  }
  std::vector<int> untouched;
  for (int k = 0; k < m; ++k) {
    if (std::find(targets.begin(), targets.end(), k) == targets.end()) {
      untouched.push_back(k);
    }
  }
  const long long fibers = pow_ll(4, m - l);
  const long long dim = pow_ll(4, m);
  RealMatrix g = RealMatrix::Zero(dim, dim);
  for (long long f = 0; f < fibers; ++f) {
    long long base = 0;
    long long rest = f;
    for (int i = static_cast<int>(untouched.size()) - 1; i >= 0; --i) {
      base += (rest % 4) * stride[untouched[i]];
      rest /= 4;
    }
    for (long long out = 0; out < block; ++out) {
      for (long long in = 0; in < block; ++in) {
        g(base + offs[out], base + offs[in]) = a.entries(out, in);
      }
    }
  }
  return g;
}

ProbTransferMatrix prob_transfer_of(const ProjectorSet& set,
                                    const RightInverse& w,
                                    const ComplexMatrix& u,
                                    const Tolerances& tol) {
  if (u.rows() != set.dim || u.cols() != set.dim) {
    throw ShapeError("prob_transfer_of: unitary dimension mismatch");
  }
  const double residual = unitarity_residual(u);
  if (residual > tol.unitarity) {
    throw NotUnitary("prob_transfer_of: max |U^dag U - Id| = " +
                         std::to_string(residual),
                     residual);
  }
  return prob_transfer_impl(
      set, w,
      [&](const ComplexMatrix& h) { return ComplexMatrix(u * h * u.adjoint()); },
      tol, "prob_transfer_of");
}

ProbTransferMatrix prob_transfer_of(const ProjectorSet& set,
                                    const RightInverse& w,
                                    const KrausChannel& ch,
                                    const Tolerances& tol) {
  if (pow_ll(2, ch.arity) != set.dim) {
    throw ShapeError("prob_transfer_of: channel dimension mismatch");
  }
  return prob_transfer_impl(
      set, w,
      [&](const ComplexMatrix& h) {
        ComplexMatrix out = ComplexMatrix::Zero(h.rows(), h.cols());
        for (const ComplexMatrix& v : ch.kraus_ops) out += v * h * v.adjoint();
        return out;
      },
      tol, "prob_transfer_of");
}

Eigen::Matrix3d so3_of_su2(const ComplexMatrix& u, const Tolerances& tol) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw ShapeError("so3_of_su2: expected a 2x2 matrix");
  }
  const double residual = unitarity_residual(u);
  if (residual > tol.unitarity) {
    throw NotUnitary("so3_of_su2: max |U^dag U - Id| = " +
                         std::to_string(residual),
                     residual);
  }
  Eigen::Matrix3d o;
  for (int mu = 1; mu <= 3; ++mu) {
    const ComplexMatrix rotated = u.adjoint() * pauli(mu) * u;
    for (int nu = 1; nu <= 3; ++nu) {
      o(mu - 1, nu - 1) = 0.5 * trace_inner(pauli(nu), rotated, false).real();
    }
  }
  return o;
}

TransitionMetric transition_metric(const ProjectorSet& set,
                                   const RightInverse& w) {
  if (w.dim != set.dim || w.w.cols() != set.size()) {
    throw ShapeError("transition_metric: right inverse does not match set");
  }
  const RealVector weights = trace_pairing_weights(set.dim);
  RealMatrix g = w.w.transpose() * weights.asDiagonal() * w.w;
  return TransitionMetric{set.label, std::move(g)};
}

double expectation(const ProjectorSet& set, const RightInverse& w,
                   const RealVector& p, const ComplexMatrix& x) {
  if (x.rows() != set.dim || x.cols() != set.dim) {
    throw ShapeError("expectation: observable dimension mismatch");
  }
  if (w.dim != set.dim || p.size() != w.w.cols()) {
    throw ShapeError("expectation: probability vector does not match the "
                     "right inverse");
  }
  const ComplexMatrix rho_hat = coords_to_herm(w.w * p);
  return trace_inner(rho_hat, x, false).real();
}

}  // namespace pframe
