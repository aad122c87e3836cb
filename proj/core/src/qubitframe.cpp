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

#include "pauliframe/qubitframe.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace pframe {

std::vector<int> decode_digits(long long flat, int m, int base) {
  std::vector<int> digits(m);
  for (int k = m - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(flat % base);
    flat /= base;
  }
  return digits;
}

long long encode_digits(const std::vector<int>& digits, int base) {
  long long flat = 0;
  for (int d : digits) flat = flat * base + d;
  return flat;
}

int qubit_count_of_dim(Eigen::Index dim) {
  int m = 0;
  Eigen::Index d = dim;
  while (d > 1 && (d & 1) == 0) {
    d >>= 1;
    ++m;
  }
  if (d != 1 || m < 1) {
    throw ShapeError("dimension " + std::to_string(dim) +
                     " is not a power of two >= 2");
  }
  return m;
}

namespace {

void decode_into(long long flat, int m, int base, std::vector<int>& digits) {
  digits.resize(m);
  for (int k = m - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(flat % base);
    flat /= base;
  }
}

// A Pauli string has one nonzero per row: row j carries i^phase at column
// col(j). Returns col(j) and accumulates the phase exponent mod 4.
long long pauli_row(const std::vector<int>& digits, long long row, int& phase) {
  const int m = static_cast<int>(digits.size());
  long long col = 0;
  phase = 0;
  for (int k = 0; k < m; ++k) {
    const int bit = static_cast<int>((row >> (m - 1 - k)) & 1);
    int cb = bit;
    switch (digits[k]) {
      case 0:
        break;
      case 1:
        cb = 1 - bit;
        break;
      case 2:
        cb = 1 - bit;
        phase += bit == 0 ? 3 : 1;  // -i on row 0, +i on row 1
        break;
      case 3:
        phase += bit == 0 ? 0 : 2;  // +1 on row 0, -1 on row 1
        break;
      default:
        throw IndexError("pauli index out of range: " +
                         std::to_string(digits[k]));
    }
    col = col * 2 + cb;
  }
  phase &= 3;
  return col;
}

constexpr std::array<Complex, 4> kPhase = {Complex(1, 0), Complex(0, 1),
                                           Complex(-1, 0), Complex(0, -1)};

void require_pauli_tensor_shape(const PauliParameterTensor& t,
                                const char* who) {
  if (t.m < 1 || t.values.size() != pow_ll(4, t.m)) {
    throw ShapeError(std::string(who) + ": tensor with m = " +
                     std::to_string(t.m) + " must hold 4^m values, got " +
                     std::to_string(t.values.size()));
  }
}

void require_prob_tensor_shape(const ProbabilityTensor& p, const char* who) {
  if (p.m < 1 || p.values.size() != pow_ll(6, p.m)) {
    throw ShapeError(std::string(who) + ": tensor with m = " +
                     std::to_string(p.m) + " must hold 6^m values, got " +
                     std::to_string(p.values.size()));
  }
}

}  // namespace

const ComplexMatrix& pauli(int mu) {
  static const std::array<ComplexMatrix, 4> sigma = [] {
    std::array<ComplexMatrix, 4> s;
    s[0] = ComplexMatrix::Identity(2, 2);
    s[1] = ComplexMatrix(2, 2);
    s[1] << 0, 1, 1, 0;
    s[2] = ComplexMatrix(2, 2);
    s[2] << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    s[3] = ComplexMatrix(2, 2);
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  if (mu < 0 || mu > 3) {
    throw IndexError("pauli: index " + std::to_string(mu) + " out of 0..3");
  }
  return sigma[mu];
}

ComplexMatrix pauli_string(const std::vector<int>& indices) {
  if (indices.empty()) throw ShapeError("pauli_string: empty index list");
  ComplexMatrix out = pauli(indices[0]);
  for (size_t k = 1; k < indices.size(); ++k) {
    out = tensor_product(out, pauli(indices[k]));
  }
  return out;
}

Complex pauli_string_trace(const ComplexMatrix& a,
                           const std::vector<int>& digits) {
  const int m = static_cast<int>(digits.size());
  const long long dim = pow_ll(2, m);
  if (a.rows() != dim || a.cols() != dim) {
    throw ShapeError("pauli_string_trace: matrix dimension " +
                     std::to_string(a.rows()) + " does not match 2^" +
                     std::to_string(m));
  }
  Complex sum(0, 0);
  for (long long j = 0; j < dim; ++j) {
    int phase = 0;
    const long long col = pauli_row(digits, j, phase);
    sum += kPhase[phase] * a(col, j);
  }
  return sum;
}

const ComplexVector& six_state_ket(int flat) {
  static const std::array<ComplexVector, 6> kets = [] {
    const double s = 1.0 / std::sqrt(2.0);
    std::array<ComplexVector, 6> k;
    for (auto& v : k) v = ComplexVector(2);
    k[0] << s, s;                       // 0x
    k[1] << s, -s;                      // 1x
    k[2] << s, Complex(0, s);           // 0y
    k[3] << s, Complex(0, -s);          // 1y
    k[4] << 1, 0;                       // 0z
    k[5] << 0, 1;                       // 1z
    return k;
  }();
  if (flat < 0 || flat > 5) {
    throw IndexError("six_state_ket: index " + std::to_string(flat) +
                     " out of 0..5");
  }
  return kets[flat];
}

ProjectorSet six_state_set(int m) {
  if (m < 1) throw RangeError("six_state_set: m must be >= 1");
  if (m > 5) {
    throw GuardExceeded("six_state_set: dense set construction guarded at "
                        "m <= 5, got m = " +
                        std::to_string(m));
  }
  std::vector<ComplexVector> kets;
  for (int s = 0; s < 6; ++s) kets.push_back(six_state_ket(s));
  ProjectorSet set = make_projector_set(2, std::move(kets), "six-state-m1");
  ProjectorSet out = set;
  for (int k = 1; k < m; ++k) out = compose_sets(out, set);
  out.label = "six-state-m" + std::to_string(m);
  return out;
}

PauliParameterTensor zero_state_tensor(int m) {
  if (m < 1) throw RangeError("zero_state_tensor: m must be >= 1");
  PauliParameterTensor t{m, RealVector::Zero(pow_ll(4, m))};
  for (long long mask = 0; mask < pow_ll(2, m); ++mask) {
    long long flat = 0;
    for (int k = 0; k < m; ++k) {
      const int bit = static_cast<int>((mask >> (m - 1 - k)) & 1);
      flat = flat * 4 + (bit ? 3 : 0);
    }
    t.values[flat] = 1.0;
  }
  return t;
}

void validate_pauli_tensor(const PauliParameterTensor& t, double range_tol) {
  require_pauli_tensor_shape(t, "validate_pauli_tensor");
  const double lead = std::abs(t.values[0] - 1.0);
  if (lead > 1e-10) {
    throw TraceError("validate_pauli_tensor: leading entry deviates from one "
                     "by " + std::to_string(lead),
                     lead);
  }
  for (Eigen::Index i = 0; i < t.values.size(); ++i) {
    if (std::abs(t.values[i]) > 1.0 + range_tol) {
      throw RangeError("validate_pauli_tensor: entry " + std::to_string(i) +
                       " = " + std::to_string(t.values[i]) +
                       " outside [-1, 1]");
    }
  }
}

double max_outcome_group_deviation(const ProbabilityTensor& p) {
  require_prob_tensor_shape(p, "max_outcome_group_deviation");
  const int m = p.m;
  const long long groups = pow_ll(3, m);
  RealVector sums = RealVector::Zero(groups);
  std::vector<int> digits;
  for (long long flat = 0; flat < p.values.size(); ++flat) {
    decode_into(flat, m, 6, digits);
    long long g = 0;
    for (int k = 0; k < m; ++k) g = g * 3 + digits[k] / 2;
    sums[g] += p.values[flat];
  }
  return (sums.array() - 1.0).abs().maxCoeff();
}

void validate_probability_tensor(const ProbabilityTensor& p, double range_tol,
                                 double group_tol) {
  require_prob_tensor_shape(p, "validate_probability_tensor");
  for (Eigen::Index i = 0; i < p.values.size(); ++i) {
    if (p.values[i] < -range_tol || p.values[i] > 1.0 + range_tol) {
      throw RangeError("validate_probability_tensor: entry " +
                       std::to_string(i) + " = " +
                       std::to_string(p.values[i]) + " outside [0, 1]");
    }
  }
  const double dev = max_outcome_group_deviation(p);
  if (dev > group_tol) {
    throw InconsistentProbabilities(
        "validate_probability_tensor: an outcome group sums away from one "
        "by " + std::to_string(dev),
        dev, {});
  }
}

PauliParameterTensor tilde_from_rho(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw ShapeError("tilde_from_rho: matrix must be square");
  }
  const int m = qubit_count_of_dim(rho.rows());
  PauliParameterTensor t{m, RealVector(pow_ll(4, m))};
  std::vector<int> digits;
  for (long long flat = 0; flat < t.values.size(); ++flat) {
    decode_into(flat, m, 4, digits);
    t.values[flat] = pauli_string_trace(rho, digits).real();
  }
  return t;
}

ComplexMatrix rho_from_tilde(const PauliParameterTensor& t) {
  require_pauli_tensor_shape(t, "rho_from_tilde");
  const int m = t.m;
  const long long dim = pow_ll(2, m);
  const double scale = 1.0 / static_cast<double>(dim);
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  std::vector<int> digits;
  for (long long flat = 0; flat < t.values.size(); ++flat) {
    const double coeff = t.values[flat] * scale;
    if (coeff == 0.0) continue;
    decode_into(flat, m, 4, digits);
    for (long long j = 0; j < dim; ++j) {
      int phase = 0;
      const long long col = pauli_row(digits, j, phase);
      rho(j, col) += coeff * kPhase[phase];
    }
  }
  return rho;
}

ProbabilityTensor p_from_tilde(const PauliParameterTensor& t) {
  require_pauli_tensor_shape(t, "p_from_tilde");
  const int m = t.m;
  if (m > 6) {
    throw GuardExceeded("p_from_tilde: probability tensors are guarded at "
                        "m <= 6, got m = " +
                        std::to_string(m));
  }
  RealVector cur = t.values;
  for (int k = 0; k < m; ++k) {
    const long long pre = pow_ll(6, k);
    const long long post = pow_ll(4, m - k - 1);
    RealVector next(pre * 6 * post);
    for (long long a = 0; a < pre; ++a) {
      for (int s = 0; s < 6; ++s) {
        const int mu = SixState::axis(s);
        const double lambda = SixState::outcome(s) == 0 ? 1.0 : -1.0;
        for (long long b = 0; b < post; ++b) {
          const double v0 = cur[(a * 4 + 0) * post + b];
          const double vmu = cur[(a * 4 + mu) * post + b];
          next[(a * 6 + s) * post + b] = 0.5 * (v0 + lambda * vmu);
        }
      }
    }
    cur = std::move(next);
  }
  return ProbabilityTensor{m, std::move(cur)};
}

PauliParameterTensor tilde_from_p(const ProbabilityTensor& p,
                                  ZeroAxisPolicy policy,
                                  double consistency_tol) {
  require_prob_tensor_shape(p, "tilde_from_p");
  const int m = p.m;

  // Normalization check over all 3^m fixed-axis groups.
  {
    const long long groups = pow_ll(3, m);
    RealVector sums = RealVector::Zero(groups);
    std::vector<int> digits;
    for (long long flat = 0; flat < p.values.size(); ++flat) {
      decode_into(flat, m, 6, digits);
      long long g = 0;
      for (int k = 0; k < m; ++k) g = g * 3 + digits[k] / 2;
      sums[g] += p.values[flat];
    }
    long long worst = 0;
    double worst_dev = 0.0;
    for (long long g = 0; g < groups; ++g) {
      const double dev = std::abs(sums[g] - 1.0);
      if (dev > worst_dev) {
        worst_dev = dev;
        worst = g;
      }
    }
    if (worst_dev > consistency_tol) {
      std::vector<int> axes(m);
      long long g = worst;
      for (int k = m - 1; k >= 0; --k) {
        axes[k] = static_cast<int>(g % 3) + 1;
        g /= 3;
      }
      std::ostringstream os;
      os << "tilde_from_p: outcome group for axes (";
      for (int k = 0; k < m; ++k) os << (k ? "," : "") << axes[k];
      os << ") sums away from one by " << worst_dev;
      throw InconsistentProbabilities(os.str(), worst_dev, axes);
    }
  }

  // Per-qubit 4x6 extraction map.
  Eigen::Matrix<double, 4, 6> ext = Eigen::Matrix<double, 4, 6>::Zero();
  if (policy == ZeroAxisPolicy::canonical_z) {
    ext(0, SixState::flat(3, 0)) = 1.0;
    ext(0, SixState::flat(3, 1)) = 1.0;
  } else {
    ext.row(0).setConstant(1.0 / 3.0);
  }
  for (int nu = 1; nu <= 3; ++nu) {
    ext(nu, SixState::flat(nu, 0)) = 1.0;
    ext(nu, SixState::flat(nu, 1)) = -1.0;
  }

  RealVector cur = p.values;
  for (int k = 0; k < m; ++k) {
    const long long pre = pow_ll(4, k);
    const long long post = pow_ll(6, m - k - 1);
    RealVector next(pre * 4 * post);
    for (long long a = 0; a < pre; ++a) {
      for (int nu = 0; nu < 4; ++nu) {
        for (long long b = 0; b < post; ++b) {
          double acc = 0.0;
          for (int s = 0; s < 6; ++s) {
            const double c = ext(nu, s);
            if (c != 0.0) acc += c * cur[(a * 6 + s) * post + b];
          }
          next[(a * 4 + nu) * post + b] = acc;
        }
      }
    }
    cur = std::move(next);
  }
  return PauliParameterTensor{m, std::move(cur)};
}

MarginalTable marginals(const PauliParameterTensor& t) {
  require_pauli_tensor_shape(t, "marginals");
  MarginalTable table;
  table.m = t.m;
  table.probabilities.resize(t.m);
  table.parameters.resize(t.m);
  for (int k = 0; k < t.m; ++k) {
    const long long stride = pow_ll(4, t.m - 1 - k);
    Eigen::Vector4d par;
    for (int nu = 0; nu < 4; ++nu) par[nu] = t.values[nu * stride];
    for (int mu = 1; mu <= 3; ++mu) {
      for (int theta = 0; theta < 2; ++theta) {
        const double lambda = theta == 0 ? 1.0 : -1.0;
        table.probabilities[k](mu - 1, theta) =
            0.5 * (par[0] + lambda * par[mu]);
      }
    }
    table.parameters[k] = par;
  }
  return table;
}

PauliParameterTensor tensor_outer(const PauliParameterTensor& a,
                                  const PauliParameterTensor& b) {
  require_pauli_tensor_shape(a, "tensor_outer");
  require_pauli_tensor_shape(b, "tensor_outer");
  PauliParameterTensor out{a.m + b.m,
                           RealVector(a.values.size() * b.values.size())};
  for (long long i = 0; i < a.values.size(); ++i) {
    out.values.segment(i * b.values.size(), b.values.size()) =
        a.values[i] * b.values;
  }
  return out;
}

PauliParameterTensor product_tensor(
    const std::vector<PauliParameterTensor>& parts) {
  if (parts.empty()) throw ShapeError("product_tensor: no parts");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].m != 1) {
      throw ShapeError("product_tensor: part " + std::to_string(i) +
                       " has m = " + std::to_string(parts[i].m) +
                       ", expected single-qubit parts");
    }
  }
  PauliParameterTensor out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out = tensor_outer(out, parts[i]);
  return out;
}

FactorizationResult is_product(const PauliParameterTensor& t, int cut,
                               double tol) {
  require_pauli_tensor_shape(t, "is_product");
  if (cut < 1 || cut >= t.m) {
    throw IndexError("is_product: cut " + std::to_string(cut) +
                     " outside 1.." + std::to_string(t.m - 1));
  }
  const long long rows = pow_ll(4, cut);
  const long long cols = pow_ll(4, t.m - cut);
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      mat(t.values.data(), rows, cols);
  Eigen::BDCSVD<RealMatrix> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sv = svd.singularValues();
  FactorizationResult res;
  const double s1 = sv.size() > 0 ? sv[0] : 0.0;
  const double s2 = sv.size() > 1 ? sv[1] : 0.0;
  res.sigma1 = s1;
  res.sigma2 = s2;
  res.singular_ratio = s1 > 0.0 ? s2 / s1 : 0.0;
  res.is_product = s2 < tol * s1 || s1 == 0.0;
  RealVector u = svd.matrixU().col(0);
  RealVector v = svd.matrixV().col(0);
  if (std::abs(v[0]) > 1e-12) {
    u *= s1 * v[0];
    v /= v[0];
  } else if (std::abs(u[0]) > 1e-12) {
    v *= s1 * u[0];
    u /= u[0];
  } else {
    u *= s1;
  }
  res.left = PauliParameterTensor{cut, std::move(u)};
  res.right = PauliParameterTensor{t.m - cut, std::move(v)};
  return res;
}

}  // namespace pframe
