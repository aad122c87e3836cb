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
//
// Acceptance suite: one self-contained check per criterion, each printing a
// single [PASS]/[FAIL] line with the measured values. Exit status is nonzero
// when any criterion fails. An optional argument selects one criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pauliframe/cli.hpp"
#include "pauliframe/frame.hpp"
#include "pauliframe/oracle.hpp"
#include "pauliframe/qubitframe.hpp"
#include "pauliframe/transfer.hpp"

using namespace pframe;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Round-trip reconstruction through the right inverse.
Result criterion1() {
  const auto start = std::chrono::steady_clock::now();
  RandomSource rng(101);
  double worst = 0.0;
  for (int m = 1; m <= 3; ++m) {
    const ProjectorSet set = six_state_set(m);
    const RightInverse w = build_right_inverse(set);
    for (int rep = 0; rep < 200; ++rep) {
      const ComplexMatrix rho = random_density(1 << m, rng);
      worst = std::max(
          worst, max_abs(reconstruct(w, forward_map(set, rho)) - rho));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const ProjectorSet set = build_standard_set(n, false);
    const RightInverse w = build_right_inverse(set);
    for (int rep = 0; rep < 200; ++rep) {
      const ComplexMatrix rho = random_density(n, rng);
      worst = std::max(
          worst, max_abs(reconstruct(w, forward_map(set, rho)) - rho));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  Result r;
  r.pass = worst < 1e-9 && seconds < 30.0;
  r.detail = "max residual " + fmt(worst) + " over 1600 states, " +
             fmt(seconds) + " s";
  return r;
}

// ---------------------------------------------------------------------------
// 2. Classification fixtures, including the non-perfectness witness.
Result criterion2() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool pass = true;

  const Classification six = classify(six_state_set(1));
  pass &= six.perfect == std::optional<bool>(true);

  const Classification two = classify(six_state_set(2));
  pass &= two.almost_perfect == std::optional<bool>(true);
  pass &= two.perfect == std::optional<bool>(false);
  pass &= two.nonunique_completion.has_value();

  // Witness family: |0z 0z>, |0z 1z>, |1z 0x>, |1z 1x> pairwise orthogonal.
  const int k0x = 0, k1x = 1, k0z = 4, k1z = 5;
  const auto pair_ket = [&](int a, int b) {
    ComplexVector v(4);
    for (int i = 0; i < 2; ++i)
      v.segment(i * 2, 2) = six_state_ket(a)[i] * six_state_ket(b);
    return v;
  };
  const std::vector<ComplexVector> witness = {
      pair_ket(k0z, k0z), pair_ket(k0z, k1z), pair_ket(k1z, k0x),
      pair_ket(k1z, k1x)};
  double worst_overlap = 0.0;
  for (size_t i = 0; i < witness.size(); ++i) {
    for (size_t j = i + 1; j < witness.size(); ++j) {
      worst_overlap =
          std::max(worst_overlap, std::abs(witness[i].dot(witness[j])));
    }
  }
  pass &= worst_overlap < 1e-12;
  // And the classifier found a second completion for |0z 0z>.
  pass &= two.completion_counts[k0z * 6 + k0z] >= 2;

  const Classification std3 = classify(build_standard_set(3, false));
  pass &= std3.representative && std3.minimal;
  pass &= std3.complete == std::optional<bool>(false);

  const Classification std3c = classify(build_standard_set(3, true));
  pass &= std3c.complete == std::optional<bool>(true);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  pass &= seconds < 60.0;
  detail << "witness overlap " << fmt(worst_overlap) << ", completions of "
         << "|0z0z> = " << two.completion_counts[k0z * 6 + k0z] << ", "
         << fmt(seconds) << " s";
  return {pass, detail.str()};
}

// ---------------------------------------------------------------------------
// 3. Rank bound for disjoint unions of orthonormal bases.
Result criterion3() {
  RandomSource rng(303);
  bool pass = true;
  int worst_excess = 0;
  for (int n : {2, 3}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<ComplexVector> kets;
      for (int b = 0; b < n; ++b) {
        const ComplexMatrix u = random_unitary(n, rng);
        for (int j = 0; j < n; ++j) kets.push_back(u.col(j));
      }
      const ProjectorSet set =
          make_projector_set(n, std::move(kets), "bases");
      const int rank = rank_of_projector_span(set);
      pass &= rank <= n * n - n + 1;
      worst_excess = std::max(worst_excess, rank - (n * n - n + 1));
    }
  }
  const int six_rank = rank_of_projector_span(six_state_set(1));
  pass &= six_rank == 4;
  return {pass, "rank excess " + std::to_string(worst_excess) +
                    " over 40 unions, six-state rank " +
                    std::to_string(six_rank)};
}

// ---------------------------------------------------------------------------
// 4. Composition theorem for representative sets and their inverses.
Result criterion4() {
  RandomSource rng(404);
  bool pass = true;
  double worst = 0.0;
  int built = 0;
  while (built < 20) {
    const int n = 2 + static_cast<int>(rng.integer(2));
    const int m = 2 + static_cast<int>(rng.integer(2));
    auto random_rep_set = [&](int dim, std::string label) {
      std::vector<ComplexVector> kets;
      for (int i = 0; i < dim * dim; ++i)
        kets.push_back(random_pure_state(dim, rng));
      return make_projector_set(dim, std::move(kets), std::move(label));
    };
    const ProjectorSet s1 = random_rep_set(n, "a");
    const ProjectorSet s2 = random_rep_set(m, "b");
    if (rank_of_projector_span(s1) < n * n ||
        rank_of_projector_span(s2) < m * m) {
      continue;  // measure-zero degenerate draw
    }
    ++built;
    const ProjectorSet composed = compose_sets(s1, s2);
    const int nm = n * m;
    pass &= rank_of_projector_span(composed) == nm * nm;
    const RightInverse w12 = compose_right_inverse(
        build_right_inverse(s1), build_right_inverse(s2));
    const RealMatrix residual =
        w12.w * build_forward_matrix(composed).m -
        RealMatrix::Identity(nm * nm, nm * nm);
    worst = std::max(worst, max_abs(residual));
  }
  pass &= worst < 1e-9;
  return {pass, "20 compositions, right-inverse residual " + fmt(worst)};
}

// ---------------------------------------------------------------------------
// 5. Stepwise oracle equivalence of the tensor dynamics.
Result criterion5() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + i % 5;
    RandomSource rng(1000 + i);
    const CircuitIR circuit = random_circuit(m, 20, rng);
    const auto tensors = simulate_tensor(circuit, zero_state_tensor(m));
    const auto densities = simulate_density(circuit, zero_state_density(m));
    for (size_t s = 0; s < tensors.size(); ++s) {
      const PauliParameterTensor ref = tilde_from_rho(densities[s].matrix());
      worst = std::max(worst, max_abs(tensors[s].values - ref.values));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  Result r;
  r.pass = worst < 1e-9 && seconds < 300.0;
  r.detail = "max stepwise deviation " + fmt(worst) +
             " over 100 circuits, " + fmt(seconds) + " s";
  return r;
}

// ---------------------------------------------------------------------------
// 6. SO(3) image of single-qubit unitaries.
Result criterion6() {
  RandomSource rng(606);
  double worst_orth = 0.0, worst_det = 0.0, worst_hom = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const ComplexMatrix u = random_unitary(2, rng);
    const Eigen::Matrix3d block =
        ptm_of_unitary(u).entries.block<3, 3>(1, 1);
    worst_orth = std::max(
        worst_orth, max_abs(RealMatrix(block * block.transpose() -
                                       Eigen::Matrix3d::Identity())));
    worst_det = std::max(worst_det, std::abs(block.determinant() - 1.0));
  }
  for (int rep = 0; rep < 50; ++rep) {
    const ComplexMatrix u1 = random_unitary(2, rng);
    const ComplexMatrix u2 = random_unitary(2, rng);
    worst_hom = std::max(
        worst_hom,
        max_abs(RealMatrix(so3_of_su2(ComplexMatrix(u1 * u2)) -
                           so3_of_su2(u1) * so3_of_su2(u2))));
  }
  const bool pass =
      worst_orth < 1e-9 && worst_det < 1e-9 && worst_hom < 1e-9;
  return {pass, "orthogonality " + fmt(worst_orth) + ", det " +
                    fmt(worst_det) + ", homomorphism " + fmt(worst_hom)};
}

// ---------------------------------------------------------------------------
// 7. Transition metric and observable averages.
Result criterion7() {
  RandomSource rng(707);
  double worst_overlap = 0.0, worst_avg = 0.0;
  for (int n : {2, 3, 4}) {
    const ProjectorSet set = build_standard_set(n, true);
    const RightInverse w = build_right_inverse(set);
    const TransitionMetric g = transition_metric(set, w);
    for (int rep = 0; rep < 100; ++rep) {
      const ComplexVector v = random_pure_state(n, rng);
      const ComplexVector psi = random_pure_state(n, rng);
      const RealVector pv = forward_map(set, v * v.adjoint());
      const RealVector pp = forward_map(set, psi * psi.adjoint());
      worst_overlap = std::max(
          worst_overlap,
          std::abs(pv.dot(g.entries * pp) - std::norm(v.dot(psi))));
    }
    for (int rep = 0; rep < 100; ++rep) {
      const ComplexMatrix rho = random_density(n, rng);
      ComplexMatrix x(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = rng.complex_normal();
      x = 0.5 * (x + x.adjoint());
      const double direct =
          expectation(set, w, forward_map(set, rho), x);
      worst_avg = std::max(
          worst_avg, std::abs(direct - (rho * x).trace().real()));
    }
  }
  const bool pass = worst_overlap < 1e-10 && worst_avg < 1e-10;
  return {pass, "overlap deviation " + fmt(worst_overlap) +
                    ", average deviation " + fmt(worst_avg)};
}

// ---------------------------------------------------------------------------
// 8. Product factorization against entangled states.
Result criterion8() {
  RandomSource rng(808);
  double worst_sigma2 = 0.0;
  bool pass = true;
  for (int m = 2; m <= 4; ++m) {
    std::vector<PauliParameterTensor> parts;
    for (int k = 0; k < m; ++k) {
      parts.push_back(tilde_from_rho(random_density(2, rng)));
    }
    const PauliParameterTensor t = product_tensor(parts);
    for (int cut = 1; cut < m; ++cut) {
      const FactorizationResult res = is_product(t, cut, 1e-8);
      pass &= res.is_product;
      worst_sigma2 = std::max(worst_sigma2, res.sigma2);
    }
  }
  pass &= worst_sigma2 < 1e-10;

  ComplexVector bell = ComplexVector::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  const FactorizationResult res =
      is_product(tilde_from_rho(bell * bell.adjoint()), 1, 1e-8);
  pass &= !res.is_product && res.sigma2 > 0.5;
  return {pass, "product sigma2 " + fmt(worst_sigma2) + ", Bell sigma2 " +
                    fmt(res.sigma2)};
}

// ---------------------------------------------------------------------------
// 9. Conversion consistency among the three representations.
Result criterion9() {
  RandomSource rng(909);
  double worst_forward = 0.0, worst_round = 0.0, worst_group = 0.0;
  for (int m = 1; m <= 3; ++m) {
    const ProjectorSet set = six_state_set(m);
    const int reps = m == 3 ? 20 : 50;
    for (int rep = 0; rep < reps; ++rep) {
      const ComplexMatrix rho = random_density(1 << m, rng);
      const PauliParameterTensor t = tilde_from_rho(rho);
      const ProbabilityTensor p = p_from_tilde(t);
      worst_forward =
          std::max(worst_forward, max_abs(p.values - forward_map(set, rho)));
      worst_group = std::max(worst_group, max_outcome_group_deviation(p));
      for (ZeroAxisPolicy policy :
           {ZeroAxisPolicy::canonical_z, ZeroAxisPolicy::average}) {
        worst_round = std::max(
            worst_round,
            max_abs(tilde_from_p(p, policy).values - t.values));
      }
    }
  }
  const bool pass =
      worst_forward < 1e-10 && worst_round < 1e-10 && worst_group < 1e-9;
  return {pass, "forward " + fmt(worst_forward) + ", round trip " +
                    fmt(worst_round) + ", group sums " + fmt(worst_group)};
}

// ---------------------------------------------------------------------------
// 10. Local contraction beats the dense superoperator multiply at m = 5.
Result criterion10() {
  const BenchPoint point = bench_local_vs_dense(5, 20, 42);
  const bool pass =
      point.speedup > 5.0 && point.max_final_discrepancy < 1e-9;
  return {pass, "speedup " + fmt(point.speedup) + " (local " +
                    fmt(point.local_seconds_per_gate) + " s/gate, dense " +
                    fmt(point.dense_seconds_per_gate) +
                    " s/gate), discrepancy " +
                    fmt(point.max_final_discrepancy)};
}

}  // namespace

int main(int argc, char** argv) {
  struct Entry {
    int id;
    const char* title;
    std::function<Result()> fn;
  };
  const std::vector<Entry> entries = {
      {1, "round-trip reconstruction", criterion1},
      {2, "classification fixtures", criterion2},
      {3, "non-minimality rank bound", criterion3},
      {4, "composition theorem", criterion4},
      {5, "oracle equivalence of dynamics", criterion5},
      {6, "SO(3) image of one-qubit gates", criterion6},
      {7, "transition metric and averages", criterion7},
      {8, "product-state factorization", criterion8},
      {9, "conversion consistency", criterion9},
      {10, "local update benchmark", criterion10},
  };
  std::optional<int> only;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const Entry& entry : entries) {
    if (only && *only != entry.id) continue;
    Result result;
    const auto start = std::chrono::steady_clock::now();
    try {
      result = entry.fn();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    std::printf("[%s] criterion %2d: %s (%s) [%.1f s]\n",
                result.pass ? "PASS" : "FAIL", entry.id, entry.title,
                result.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!result.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
