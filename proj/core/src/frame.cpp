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

#include "pauliframe/frame.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace pframe {

namespace {

int rank_of_singular_values(const RealVector& sv, double rel_cutoff) {
  if (sv.size() == 0) return 0;
  const double cutoff = rel_cutoff * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

}  // namespace

ProjectorSet make_projector_set(int dim, std::vector<ComplexVector> kets,
                                std::string label, const Tolerances& tol) {
  ProjectorSet set;
  set.dim = dim;
  set.label = std::move(label);
  set.kets.reserve(kets.size());
  set.projectors.reserve(kets.size());
  for (size_t i = 0; i < kets.size(); ++i) {
    if (kets[i].size() != dim) {
      std::ostringstream os;
      os << "make_projector_set: ket " << i << " has dimension "
         << kets[i].size() << ", set dimension is " << dim;
      throw ShapeError(os.str());
    }
    const double norm = kets[i].norm();
    const double deviation = std::abs(norm - 1.0);
    if (!(deviation <= tol.unit_norm)) {
      throw NormError("make_projector_set: ket " + std::to_string(i) +
                          " norm deviates from one by " +
                          std::to_string(deviation),
                      deviation);
    }
    ComplexVector v = canonical_phase(kets[i] / norm);
    set.projectors.push_back(v * v.adjoint());
    set.kets.push_back(std::move(v));
  }
  return set;
}

RealVector forward_map(const ProjectorSet& set, const ComplexMatrix& rho) {
  if (rho.rows() != set.dim || rho.cols() != set.dim) {
    std::ostringstream os;
    os << "forward_map: state is " << rho.rows() << "x" << rho.cols()
       << ", set dimension is " << set.dim;
    throw ShapeError(os.str());
  }
  RealVector p(set.size());
  for (int a = 0; a < set.size(); ++a) {
    p[a] = (set.kets[a].adjoint() * rho * set.kets[a]).value().real();
  }
  return p;
}

ForwardMapMatrix build_forward_matrix(const ProjectorSet& set) {
  const int n = set.dim;
  RealMatrix m(set.size(), coords_dim(n));
  for (int a = 0; a < set.size(); ++a) {
    const ComplexMatrix& proj = set.projectors[a];
    for (int k = 0; k < n; ++k) m(a, k) = proj(k, k).real();
    int j = n;
    for (int k = 0; k < n; ++k) {
      for (int l = k + 1; l < n; ++l) {
        m(a, j++) = 2.0 * proj(k, l).real();
        m(a, j++) = 2.0 * proj(k, l).imag();
      }
    }
  }
  return ForwardMapMatrix{set.label, n, std::move(m)};
}

int rank_of_projector_span(const ProjectorSet& set, const Tolerances& tol) {
  const ForwardMapMatrix fm = build_forward_matrix(set);
  Eigen::JacobiSVD<RealMatrix> svd(fm.m);
  return rank_of_singular_values(svd.singularValues(), tol.rank_cutoff);
}

RightInverse build_right_inverse(const ProjectorSet& set,
                                 const Tolerances& tol) {
  const ForwardMapMatrix fm = build_forward_matrix(set);
  const int nsq = coords_dim(set.dim);
  Eigen::JacobiSVD<RealMatrix> svd(fm.m,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sv = svd.singularValues();
  const int rank = rank_of_singular_values(sv, tol.rank_cutoff);
  if (rank < nsq) {
    throw NotRepresentative("build_right_inverse: projector span has rank " +
                                std::to_string(rank) + ", need " +
                                std::to_string(nsq),
                            rank, nsq);
  }
  RealMatrix w = svd.matrixV().leftCols(rank) *
                 sv.head(rank).cwiseInverse().asDiagonal() *
                 svd.matrixU().leftCols(rank).transpose();
  return RightInverse{set.label, set.dim, InverseKind::pseudoinverse,
                      std::move(w)};
}

RightInverse standard_closed_form_inverse(int n) {
  if (n < 2) throw RangeError("standard_closed_form_inverse: n must be >= 2");
  const int nsq = n * n;
  const int npairs = n * (n - 1) / 2;
  RealMatrix w = RealMatrix::Zero(nsq, nsq);
  // Set column order: z family, then x pairs, then y pairs (lexicographic).
  auto pos_z = [](int a) { return a; };
  int pidx = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++pidx) {
      const int pos_x = n + pidx;
      const int pos_y = n + npairs + pidx;
      const int row_re = n + 2 * pidx;
      const int row_im = n + 2 * pidx + 1;
      w(row_re, pos_x) = 1.0;
      w(row_re, pos_z(a)) = -0.5;
      w(row_re, pos_z(b)) = -0.5;
      w(row_im, pos_y) = -1.0;
      w(row_im, pos_z(a)) = 0.5;
      w(row_im, pos_z(b)) = 0.5;
    }
  }
  for (int a = 0; a < n; ++a) w(a, pos_z(a)) = 1.0;
  return RightInverse{"standard-n" + std::to_string(n), n,
                      InverseKind::closed_form, std::move(w)};
}

ComplexMatrix reconstruct(const RightInverse& inv, const RealVector& p) {
  if (p.size() != inv.w.cols()) {
    throw ShapeError("reconstruct: probability vector has " +
                     std::to_string(p.size()) + " entries, inverse expects " +
                     std::to_string(inv.w.cols()));
  }
  return coords_to_herm(inv.w * p);
}

RealVector decompose_in_projectors(const ProjectorSet& set,
                                   const ComplexMatrix& target,
                                   const Tolerances& tol) {
  if (target.rows() != set.dim || target.cols() != set.dim) {
    throw ShapeError("decompose_in_projectors: target dimension mismatch");
  }
  const int nsq = coords_dim(set.dim);
  RealMatrix pmat(nsq, set.size());
  for (int a = 0; a < set.size(); ++a) {
    pmat.col(a) = herm_to_coords(set.projectors[a]);
  }
  Eigen::JacobiSVD<RealMatrix> svd(pmat,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sv = svd.singularValues();
  const int rank = rank_of_singular_values(sv, tol.rank_cutoff);
  if (rank < nsq) {
    throw NotRepresentative(
        "decompose_in_projectors: projector span has rank " +
            std::to_string(rank) + ", need " + std::to_string(nsq),
        rank, nsq);
  }
  // Minimum-norm solution of pmat * c = coords(target).
  return svd.matrixV().leftCols(rank) *
         (sv.head(rank).cwiseInverse().asDiagonal() *
          (svd.matrixU().leftCols(rank).transpose() * herm_to_coords(target)));
}

AffineInverse build_affine_inverse(const ProjectorSet& set,
                                   const Tolerances& tol) {
  const int n = set.dim;
  const int nsq = n * n;
  if (set.size() != nsq - 1) {
    throw ShapeError("build_affine_inverse: need n^2 - 1 = " +
                     std::to_string(nsq - 1) + " kets, got " +
                     std::to_string(set.size()));
  }
  // Coordinate basis of the traceless Hermitian matrices: diagonal
  // differences e_k - e_{n-1}, then every off-diagonal coordinate.
  RealMatrix b = RealMatrix::Zero(nsq, nsq - 1);
  int col = 0;
  for (int k = 0; k + 1 < n; ++k, ++col) {
    b(k, col) = 1.0;
    b(n - 1, col) = -1.0;
  }
  for (int j = n; j < nsq; ++j, ++col) b(j, col) = 1.0;

  const RealMatrix mb = build_forward_matrix(set).m * b;
  Eigen::JacobiSVD<RealMatrix> svd(mb,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sv = svd.singularValues();
  const int rank = rank_of_singular_values(sv, tol.rank_cutoff);
  if (rank < nsq - 1) {
    throw NotAffineReconstructible(
        "build_affine_inverse: trace-one slice has rank " +
            std::to_string(rank) + " of " + std::to_string(nsq - 1),
        nsq - 1 - rank);
  }
  const RealMatrix mb_inv = svd.matrixV() *
                            sv.cwiseInverse().asDiagonal() *
                            svd.matrixU().transpose();
  const ComplexMatrix base = ComplexMatrix::Identity(n, n) / double(n);
  const RealVector p0 = forward_map(set, base);
  RealMatrix matrix_part = b * mb_inv;
  ComplexMatrix offset = base - coords_to_herm(matrix_part * p0);
  return AffineInverse{set.label, n, std::move(matrix_part),
                       std::move(offset)};
}

ComplexMatrix reconstruct(const AffineInverse& inv, const RealVector& p) {
  if (p.size() != inv.matrix_part.cols()) {
    throw ShapeError("reconstruct: probability vector has " +
                     std::to_string(p.size()) + " entries, inverse expects " +
                     std::to_string(inv.matrix_part.cols()));
  }
  return coords_to_herm(inv.matrix_part * p) + inv.offset;
}

//=============================================================================
// Classification
//=============================================================================

namespace {

struct SearchBudget {
  long long nodes = 0;
  bool exhausted = false;
  bool spend() {
    if (exhausted || nodes <= 0) {
      exhausted = true;
      return false;
    }
    --nodes;
    return true;
  }
};

// Backtracking node budget guarding adversarial orthogonality graphs.
constexpr long long kNodeBudget = 50'000'000;

using Adjacency = std::vector<std::vector<char>>;

// Counts the pairwise-orthogonal (n-1)-subsets of cands extending the
// current clique; keeps the first two found for the witness.
void completion_search(const Adjacency& adj, const std::vector<int>& cands,
                       size_t start, int need, std::vector<int>& cur,
                       long long& count,
                       std::vector<std::vector<int>>& first_two,
                       SearchBudget& budget) {
  if (!budget.spend()) return;
  if (need == 0) {
    ++count;
    if (first_two.size() < 2) first_two.push_back(cur);
    return;
  }
  for (size_t i = start; i < cands.size(); ++i) {
    if (static_cast<int>(cands.size() - i) < need) break;
    const int v = cands[i];
    bool ok = true;
    for (int u : cur) {
      if (!adj[u][v]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    cur.push_back(v);
    completion_search(adj, cands, i + 1, need - 1, cur, count, first_two,
                      budget);
    cur.pop_back();
    if (budget.exhausted) return;
  }
}

void enumerate_bases(const Adjacency& adj, int num, int n,
                     std::vector<std::vector<int>>& bases,
                     SearchBudget& budget) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (!budget.spend()) return;
    if (static_cast<int>(cur.size()) == n) {
      bases.push_back(cur);
      return;
    }
    for (int v = start; v < num; ++v) {
      if (num - v < n - static_cast<int>(cur.size())) break;
      bool ok = true;
      for (int u : cur) {
        if (!adj[u][v]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
      if (budget.exhausted) return;
    }
  };
  rec(0);
}

// Exact cover of the vertex set by disjoint bases, first-fail ordering.
bool exact_cover(const std::vector<std::vector<int>>& bases,
                 const std::vector<std::vector<int>>& bases_of_vertex,
                 int num, std::vector<int>& chosen, std::vector<char>& covered,
                 int covered_count, SearchBudget& budget) {
  if (!budget.spend()) return false;
  if (covered_count == num) return true;
  int best = -1;
  std::vector<int> best_usable;
  for (int v = 0; v < num; ++v) {
    if (covered[v]) continue;
    std::vector<int> usable;
    for (int bi : bases_of_vertex[v]) {
      bool free_base = true;
      for (int u : bases[bi]) {
        if (covered[u]) {
          free_base = false;
          break;
        }
      }
      if (free_base) usable.push_back(bi);
    }
    if (usable.empty()) return false;
    if (best < 0 || usable.size() < best_usable.size()) {
      best = v;
      best_usable = std::move(usable);
      if (best_usable.size() == 1) break;
    }
  }
  for (int bi : best_usable) {
    for (int u : bases[bi]) covered[u] = 1;
    chosen.push_back(bi);
    if (exact_cover(bases, bases_of_vertex, num, chosen, covered,
                    covered_count + static_cast<int>(bases[bi].size()),
                    budget)) {
      return true;
    }
    chosen.pop_back();
    for (int u : bases[bi]) covered[u] = 0;
    if (budget.exhausted) return false;
  }
  return false;
}

}  // namespace

Classification classify(const ProjectorSet& set, long long search_limit,
                        const Tolerances& tol) {
  Classification c;
  const int n = set.dim;
  const int nsq = n * n;
  const int total = set.size();
  c.rank = rank_of_projector_span(set, tol);
  c.representative = (c.rank == nsq);
  c.minimal = c.representative && total == nsq;
  if (!c.representative) {
    // Completeness and its refinements are defined for representative sets.
    c.complete = false;
    c.almost_perfect = false;
    c.perfect = false;
    return c;
  }
  if (static_cast<long long>(total) * n > search_limit) {
    c.search_budget_exhausted = true;
    return c;
  }

  // Collapse kets equal up to global phase (they are phase-canonical).
  std::vector<int> rep;
  std::vector<int> owner(total, -1);
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < static_cast<int>(rep.size()); ++j) {
      if ((set.kets[i] - set.kets[rep[j]]).cwiseAbs().maxCoeff() < 1e-9) {
        owner[i] = j;
        break;
      }
    }
    if (owner[i] < 0) {
      owner[i] = static_cast<int>(rep.size());
      rep.push_back(i);
    }
  }
  const int num = static_cast<int>(rep.size());
  c.duplicates_collapsed = total - num;

  Adjacency adj(num, std::vector<char>(num, 0));
  for (int a = 0; a < num; ++a) {
    for (int b = a + 1; b < num; ++b) {
      const double overlap = std::abs(set.kets[rep[a]].dot(set.kets[rep[b]]));
      adj[a][b] = adj[b][a] = overlap < tol.orthogonality ? 1 : 0;
    }
  }

  SearchBudget budget{kNodeBudget};
  std::vector<long long> counts(num, 0);
  bool all_have = true;
  bool all_unique = true;
  for (int a = 0; a < num && !budget.exhausted; ++a) {
    std::vector<int> cands;
    for (int b = 0; b < num; ++b) {
      if (b != a && adj[a][b]) cands.push_back(b);
    }
    std::vector<int> cur;
    std::vector<std::vector<int>> first_two;
    long long count = 0;
    completion_search(adj, cands, 0, n - 1, cur, count, first_two, budget);
    counts[a] = count;
    if (count == 0) all_have = false;
    if (count > 1) {
      all_unique = false;
      if (!c.nonunique_completion) {
        CompletionWitness w;
        w.ket = rep[a];
        for (int v : first_two[0]) w.first.push_back(rep[v]);
        for (int v : first_two[1]) w.second.push_back(rep[v]);
        c.nonunique_completion = std::move(w);
      }
    }
  }
  if (budget.exhausted) {
    c.search_budget_exhausted = true;
    return c;
  }
  c.completion_counts.resize(total);
  for (int i = 0; i < total; ++i) c.completion_counts[i] = counts[owner[i]];
  c.complete = all_have;
  c.perfect = all_have && all_unique;
  if (!all_have) {
    c.almost_perfect = false;
    return c;
  }

  if (num % n != 0) {
    c.almost_perfect = false;
    return c;
  }
  std::vector<std::vector<int>> bases;
  enumerate_bases(adj, num, n, bases, budget);
  if (budget.exhausted) {
    c.search_budget_exhausted = true;
    return c;
  }
  std::vector<std::vector<int>> of_vertex(num);
  for (int bi = 0; bi < static_cast<int>(bases.size()); ++bi) {
    for (int v : bases[bi]) of_vertex[v].push_back(bi);
  }
  std::vector<char> covered(num, 0);
  std::vector<int> chosen;
  const bool found =
      exact_cover(bases, of_vertex, num, chosen, covered, 0, budget);
  if (budget.exhausted) {
    c.search_budget_exhausted = true;
    return c;
  }
  c.almost_perfect = found;
  if (found) {
    for (int bi : chosen) {
      std::vector<int> basis;
      for (int v : bases[bi]) basis.push_back(rep[v]);
      std::sort(basis.begin(), basis.end());
      c.basis_partition.push_back(std::move(basis));
    }
    std::sort(c.basis_partition.begin(), c.basis_partition.end());
  }
  return c;
}

//=============================================================================
// Construction and composition
//=============================================================================

ProjectorSet build_standard_set(int n, bool completed) {
  if (n < 2) throw RangeError("build_standard_set: n must be >= 2");
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<ComplexVector> kets;
  kets.reserve(static_cast<size_t>(completed ? 2 * n * n - n : n * n));
  for (int a = 0; a < n; ++a) {
    ComplexVector v = ComplexVector::Zero(n);
    v[a] = 1.0;
    kets.push_back(std::move(v));
  }
  auto pair_family = [&](Complex second) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        ComplexVector v = ComplexVector::Zero(n);
        v[a] = s;
        v[b] = second * s;
        kets.push_back(std::move(v));
      }
    }
  };
  pair_family(Complex(1.0, 0.0));   // x family
  pair_family(Complex(0.0, 1.0));   // y family
  if (completed) {
    pair_family(Complex(-1.0, 0.0));  // x' family
    pair_family(Complex(0.0, -1.0));  // y' family
  }
  const std::string label =
      (completed ? "standard-complete-n" : "standard-n") + std::to_string(n);
  return make_projector_set(n, std::move(kets), label);
}

ProjectorSet compose_sets(const ProjectorSet& s1, const ProjectorSet& s2) {
  const int dim = s1.dim * s2.dim;
  std::vector<ComplexVector> kets;
  kets.reserve(static_cast<size_t>(s1.size()) * s2.size());
  for (int a = 0; a < s1.size(); ++a) {
    for (int b = 0; b < s2.size(); ++b) {
      ComplexVector v(dim);
      for (int i = 0; i < s1.dim; ++i) {
        v.segment(i * s2.dim, s2.dim) = s1.kets[a][i] * s2.kets[b];
      }
      kets.push_back(std::move(v));
    }
  }
  return make_projector_set(dim, std::move(kets),
                            s1.label + "(x)" + s2.label);
}

RightInverse compose_right_inverse(const RightInverse& w1,
                                   const RightInverse& w2) {
  const int n1 = w1.dim;
  const int n2 = w2.dim;
  const int count1 = static_cast<int>(w1.w.cols());
  const int count2 = static_cast<int>(w2.w.cols());
  const int dim = n1 * n2;
  std::vector<ComplexMatrix> r1, r2;
  r1.reserve(count1);
  r2.reserve(count2);
  for (int a = 0; a < count1; ++a) r1.push_back(coords_to_herm(w1.w.col(a)));
  for (int b = 0; b < count2; ++b) r2.push_back(coords_to_herm(w2.w.col(b)));
  RealMatrix w(coords_dim(dim), count1 * count2);
  for (int a = 0; a < count1; ++a) {
    for (int b = 0; b < count2; ++b) {
      w.col(a * count2 + b) = herm_to_coords(tensor_product(r1[a], r2[b]));
    }
  }
  return RightInverse{w1.set_label + "(x)" + w2.set_label, dim,
                      InverseKind::composed, std::move(w)};
}

}  // namespace pframe
