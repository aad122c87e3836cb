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

#include "pauliframe/oracle.hpp"

#include <cmath>
#include <numbers>

#include "pauliframe/qubitframe.hpp"

namespace pframe {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

const ComplexMatrix& fixed_gate(const std::string& name) {
  static const ComplexMatrix h = [] {
    ComplexMatrix g(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    g << s, s, s, -s;
    return g;
  }();
  static const ComplexMatrix s_gate = [] {
    ComplexMatrix g = ComplexMatrix::Zero(2, 2);
    g(0, 0) = 1.0;
    g(1, 1) = Complex(0.0, 1.0);
    return g;
  }();
  static const ComplexMatrix t_gate = [] {
    ComplexMatrix g = ComplexMatrix::Zero(2, 2);
    g(0, 0) = 1.0;
    g(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
    return g;
  }();
  static const ComplexMatrix cnot = [] {
    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    g(0, 0) = g(1, 1) = g(2, 3) = g(3, 2) = 1.0;
    return g;
  }();
  static const ComplexMatrix cz = [] {
    ComplexMatrix g = ComplexMatrix::Identity(4, 4);
    g(3, 3) = -1.0;
    return g;
  }();
  if (name == "h") return h;
  if (name == "x") return pauli(1);
  if (name == "y") return pauli(2);
  if (name == "z") return pauli(3);
  if (name == "s") return s_gate;
  if (name == "t") return t_gate;
  if (name == "cnot") return cnot;
  if (name == "cz") return cz;
  throw RangeError("unknown gate: " + name);
}

ComplexMatrix rotation_gate(const std::string& name, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  ComplexMatrix g(2, 2);
  if (name == "rx") {
    g << Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0);
  } else if (name == "ry") {
    g << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
  } else {  // rz
    g = ComplexMatrix::Zero(2, 2);
    g(0, 0) = std::polar(1.0, -angle / 2.0);
    g(1, 1) = std::polar(1.0, angle / 2.0);
  }
  return g;
}

void check_param_range(const std::string& name, double value) {
  if (value < 0.0 || value > 1.0) {
    throw RangeError(name + ": parameter " + std::to_string(value) +
                     " outside [0, 1]");
  }
}

}  // namespace

bool is_channel_name(const std::string& name) {
  return name == "depol" || name == "ampdamp";
}

int gate_arity(const std::string& name) {
  return (name == "cnot" || name == "cz") ? 2 : 1;
}

int gate_param_count(const std::string& name) {
  if (name == "rx" || name == "ry" || name == "rz" || is_channel_name(name)) {
    return 1;
  }
  return 0;
}

ComplexMatrix gate_unitary(const std::string& name,
                           const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != gate_param_count(name) ||
      is_channel_name(name)) {
    throw RangeError("gate " + name + " with wrong parameter count");
  }
  if (name == "rx" || name == "ry" || name == "rz") {
    return rotation_gate(name, params[0]);
  }
  return fixed_gate(name);
}

KrausChannel make_channel(const std::string& name,
                          const std::vector<double>& params) {
  if (params.size() != 1) {
    throw RangeError("channel " + name + " needs exactly one parameter");
  }
  check_param_range(name, params[0]);
  std::vector<ComplexMatrix> ops;
  if (name == "depol") {
    const double lambda = params[0];
    ops.push_back(std::sqrt(1.0 - 0.75 * lambda) *
                  ComplexMatrix::Identity(2, 2));
    for (int mu = 1; mu <= 3; ++mu) {
      ops.push_back(std::sqrt(0.25 * lambda) * pauli(mu));
    }
  } else if (name == "ampdamp") {
    const double gamma = params[0];
    ComplexMatrix v0 = ComplexMatrix::Zero(2, 2);
    v0(0, 0) = 1.0;
    v0(1, 1) = std::sqrt(1.0 - gamma);
    ComplexMatrix v1 = ComplexMatrix::Zero(2, 2);
    v1(0, 1) = std::sqrt(gamma);
    ops.push_back(std::move(v0));
    ops.push_back(std::move(v1));
  } else {
    throw RangeError("unknown channel: " + name);
  }
  return make_kraus_channel(std::move(ops));
}

DensityMatrix zero_state_density(int m) {
  if (m < 1) throw RangeError("zero_state_density: m must be >= 1");
  const long long dim = pow_ll(2, m);
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return validate_density(rho);
}

ComplexMatrix embed_on_targets(const ComplexMatrix& op, int m,
                               const std::vector<int>& targets) {
  const int l = static_cast<int>(targets.size());
  const long long gate_dim = pow_ll(2, l);
  if (op.rows() != gate_dim || op.cols() != gate_dim) {
    throw ShapeError("embed_on_targets: operator dimension " +
                     std::to_string(op.rows()) + " does not match " +
                     std::to_string(l) + " targets");
  }
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= m) {
      throw IndexError("embed_on_targets: target " +
                       std::to_string(targets[i]) + " outside 0.." +
                       std::to_string(m - 1));
    }
    for (size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw IndexError("embed_on_targets: repeated target " +
                         std::to_string(targets[i]));
      }
    }
  }
  const long long dim = pow_ll(2, m);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (long long in = 0; in < dim; ++in) {
    long long a_in = 0;
    for (int t = 0; t < l; ++t) {
      a_in = a_in * 2 + ((in >> (m - 1 - targets[t])) & 1);
    }
    for (long long a_out = 0; a_out < gate_dim; ++a_out) {
      const Complex val = op(a_out, a_in);
      if (val == Complex(0.0, 0.0)) continue;
      long long row = in;
      for (int t = 0; t < l; ++t) {
        const long long pos = m - 1 - targets[t];
        const long long bit = (a_out >> (l - 1 - t)) & 1;
        row = (row & ~(1LL << pos)) | (bit << pos);
      }
      out(row, in) = val;
    }
  }
  return out;
}

DensityMatrix evolve_unitary(const DensityMatrix& rho, const ComplexMatrix& u,
                             const std::vector<int>& targets,
                             const Tolerances& tol) {
  const int m = qubit_count_of_dim(rho.dim());
  const ComplexMatrix full = embed_on_targets(u, m, targets);
  return validate_density(full * rho.matrix() * full.adjoint(), tol);
}

DensityMatrix evolve_channel(const DensityMatrix& rho, const KrausChannel& ch,
                             const std::vector<int>& targets,
                             const Tolerances& tol) {
  const int m = qubit_count_of_dim(rho.dim());
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const ComplexMatrix& v : ch.kraus_ops) {
    const ComplexMatrix full = embed_on_targets(v, m, targets);
    out += full * rho.matrix() * full.adjoint();
  }
  return validate_density(out, tol);
}

std::vector<DensityMatrix> simulate_density(const CircuitIR& circuit,
                                            const DensityMatrix& initial,
                                            const Tolerances& tol) {
  if (initial.dim() != pow_ll(2, circuit.num_qubits)) {
    throw ShapeError("simulate_density: initial state does not match the "
                     "qubit count");
  }
  std::vector<DensityMatrix> trajectory;
  trajectory.reserve(circuit.steps.size() + 1);
  trajectory.push_back(initial);
  for (const GateStep& step : circuit.steps) {
    const DensityMatrix& cur = trajectory.back();
    if (step.kind == GateStep::Kind::channel) {
      trajectory.push_back(evolve_channel(
          cur, make_channel(step.name, step.params), step.targets, tol));
    } else {
      trajectory.push_back(evolve_unitary(
          cur, gate_unitary(step.name, step.params), step.targets, tol));
    }
  }
  return trajectory;
}

double RandomSource::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = r * std::sin(kTau * u2);
  return r * std::cos(kTau * u2);
}

Complex RandomSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im);
}

std::uint64_t RandomSource::integer(std::uint64_t bound) {
  return engine_() % bound;
}

ComplexVector random_pure_state(int dim, RandomSource& rng) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.complex_normal();
  return v / v.norm();
}

ComplexMatrix random_density(int dim, RandomSource& rng) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  }
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace();
}

ComplexMatrix random_unitary(int dim, RandomSource& rng) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexVector diag = qr.matrixQR().diagonal();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(diag[j]);
    q.col(j) *= mag > 0.0 ? diag[j] / mag : Complex(1.0, 0.0);
  }
  return q;
}

CircuitIR random_circuit(int m, int depth, RandomSource& rng) {
  if (m < 1) throw RangeError("random_circuit: m must be >= 1");
  static const std::vector<std::string> kAll = {
      "h",  "x",  "y",    "z",  "s",      "t",    "rx",
      "ry", "rz", "cnot", "cz", "depol", "ampdamp"};
  static const std::vector<std::string> kSingle = {
      "h", "x", "y", "z", "s", "t", "rx", "ry", "rz", "depol", "ampdamp"};
  const std::vector<std::string>& pool = m >= 2 ? kAll : kSingle;
  CircuitIR c;
  c.num_qubits = m;
  c.steps.reserve(depth);
  for (int i = 0; i < depth; ++i) {
    GateStep step;
    step.name = pool[rng.integer(pool.size())];
    step.kind = is_channel_name(step.name) ? GateStep::Kind::channel
                                           : GateStep::Kind::unitary;
    if (gate_arity(step.name) == 2) {
      const int a = static_cast<int>(rng.integer(m));
      int b = static_cast<int>(rng.integer(m - 1));
      if (b >= a) ++b;
      step.targets = {a, b};
    } else {
      step.targets = {static_cast<int>(rng.integer(m))};
    }
    if (gate_param_count(step.name) == 1) {
      step.params = {is_channel_name(step.name) ? rng.uniform()
                                                : rng.uniform() * kTau};
    }
    c.steps.push_back(std::move(step));
  }
  return c;
}

}  // namespace pframe
