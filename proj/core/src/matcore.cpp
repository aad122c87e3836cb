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

#include "pauliframe/matcore.hpp"

#include <cmath>
#include <sstream>

namespace pframe {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << who << ": matrix must be square, got " << m.rows() << "x"
       << m.cols();
    throw ShapeError(os.str());
  }
}

}  // namespace

RealVector herm_to_coords(const ComplexMatrix& h) {
  require_square(h, "herm_to_coords");
  const int n = static_cast<int>(h.rows());
  RealVector c(coords_dim(n));
  for (int k = 0; k < n; ++k) c[k] = h(k, k).real();
  int j = n;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      c[j++] = h(k, l).real();
      c[j++] = h(k, l).imag();
    }
  }
  return c;
}

ComplexMatrix coords_to_herm(const RealVector& coords) {
  const int n = static_cast<int>(std::lround(std::sqrt(
      static_cast<double>(coords.size()))));
  if (n * n != coords.size()) {
    throw ShapeError("coords_to_herm: coordinate count " +
                     std::to_string(coords.size()) +
                     " is not a perfect square");
  }
  ComplexMatrix h(n, n);
  for (int k = 0; k < n; ++k) h(k, k) = Complex(coords[k], 0.0);
  int j = n;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      const Complex z(coords[j], coords[j + 1]);
      j += 2;
      h(k, l) = z;
      h(l, k) = std::conj(z);
    }
  }
  return h;
}

RealVector trace_pairing_weights(int n) {
  RealVector w(coords_dim(n));
  w.head(n).setOnes();
  w.tail(n * n - n).setConstant(2.0);
  return w;
}

ComplexMatrix projector_of(const ComplexVector& v, const Tolerances& tol) {
  const double norm = v.norm();
  const double deviation = std::abs(norm - 1.0);
  if (!(deviation <= tol.unit_norm)) {
    throw NormError("projector_of: ket norm deviates from one by " +
                        std::to_string(deviation),
                    deviation);
  }
  return v * v.adjoint();
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b,
                    bool conjugated) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("trace_inner: operand shapes differ");
  }
  if (conjugated) {
    // Tr(a b^dag) = sum_ij a_ij conj(b_ij)
    return a.cwiseProduct(b.conjugate()).sum();
  }
  require_square(a, "trace_inner (unconjugated)");
  // Tr(a b) = sum_ij a_ji b_ij
  return a.transpose().cwiseProduct(b).sum();
}

std::vector<ComplexMatrix> hermitian_pair_basis(int n) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(k, k) = 1.0;
    basis.push_back(std::move(e));
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      ComplexMatrix plus = ComplexMatrix::Zero(n, n);
      plus(l, k) = 0.5;
      plus(k, l) = 0.5;
      basis.push_back(std::move(plus));
      ComplexMatrix minus = ComplexMatrix::Zero(n, n);
      minus(l, k) = Complex(0.0, 0.5);
      minus(k, l) = Complex(0.0, -0.5);
      basis.push_back(std::move(minus));
    }
  }
  return basis;
}

ComplexVector canonical_phase(const ComplexVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > 1e-12) {
      return v * (std::conj(v[i]) / mag);
    }
  }
  return v;
}

DensityDiagnostics check_density(const ComplexMatrix& m,
                                 const Tolerances& tol) {
  require_square(m, "check_density");
  DensityDiagnostics d;
  const double scale = m.cwiseAbs().maxCoeff();
  d.hermiticity_residual = (m - m.adjoint()).cwiseAbs().maxCoeff();
  d.hermitian = d.hermiticity_residual <= tol.herm_rel * scale;
  d.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
  d.unit_trace = d.trace_deviation <= tol.trace;
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym,
                                                  Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  d.positive = d.min_eigenvalue >= -tol.psd;
  return d;
}

DensityMatrix validate_density(const ComplexMatrix& m, const Tolerances& tol) {
  const DensityDiagnostics d = check_density(m, tol);
  if (d.ok()) return DensityMatrix(m);
  std::ostringstream os;
  os << "validate_density:";
  if (!d.hermitian)
    os << " hermiticity residual " << d.hermiticity_residual << ";";
  if (!d.unit_trace) os << " trace deviation " << d.trace_deviation << ";";
  if (!d.positive) os << " min eigenvalue " << d.min_eigenvalue << ";";
  const std::string msg = os.str();
  if (!d.hermitian) throw HermiticityError(msg, d.hermiticity_residual);
  if (!d.unit_trace) throw TraceError(msg, d.trace_deviation);
  throw NegativityError(msg, d.min_eigenvalue);
}

}  // namespace pframe
