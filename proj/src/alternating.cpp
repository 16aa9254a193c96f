#include "llds/alternating.hpp"

#include <algorithm>

namespace llds {

bool is_alternating(const Field& F, const Mat& M) {
  if (M.rows != M.cols) return false;
  for (std::size_t i = 0; i < M.rows; ++i) {
    if (M.at(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < M.cols; ++j)
      if (M.at(i, j) != F.neg(M.at(j, i))) return false;
  }
  return true;
}

AltSubspace::AltSubspace(const Field& F, std::size_t n, const std::vector<Mat>& generators)
    : F_(F), n_(n) {
  const std::size_t N = n * (n - 1) / 2;
  Mat V(generators.size(), N);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Mat& M = generators[g];
    if (M.rows != n || M.cols != n) fail(errc::shape_mismatch, "generator is not n x n");
    if (!is_alternating(F_, M)) fail(errc::not_alternating, "generator is not alternating");
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) V.at(g, t++) = M.at(i, j);
  }
  Echelon e = rref(F_, std::move(V));
  canon_ = Mat(e.rank, N);
  for (unsigned i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < N; ++j) canon_.at(i, j) = e.rref.at(i, j);
  basis_.reserve(e.rank);
  for (unsigned i = 0; i < e.rank; ++i) {
    std::vector<fe> row(N);
    for (std::size_t j = 0; j < N; ++j) row[j] = canon_.at(i, j);
    basis_.push_back(unvectorize(row));
  }
}

bool AltSubspace::same_space(const AltSubspace& o) const {
  return F_ == o.F_ && n_ == o.n_ && canon_ == o.canon_;
}

std::vector<fe> AltSubspace::vectorize(const Mat& M) const {
  std::vector<fe> v;
  v.reserve(n_ * (n_ - 1) / 2);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) v.push_back(M.at(i, j));
  return v;
}

Mat AltSubspace::unvectorize(const std::vector<fe>& v) const {
  Mat M(n_, n_);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      M.at(i, j) = v[t];
      M.at(j, i) = F_.neg(v[t]);
      ++t;
    }
  return M;
}

fe pfaffian(const Field& F, const Mat& M) {
  if (M.rows != M.cols || M.rows % 2 != 0) fail(errc::odd_dimension, "pfaffian needs even n");
  if (!is_alternating(F, M)) fail(errc::not_alternating, "pfaffian of a non-alternating matrix");
  const std::size_t n = M.rows;
  if (n > 8) fail(errc::dimension_too_large, "pfaffian capped at n = 8");
  if (n == 0) return F.one();
  if (n == 2) return M.at(0, 1);
  if (n == 4) {
    // af - be + cd in the row-major labelling of the strict upper triangle
    fe af = F.mul(M.at(0, 1), M.at(2, 3));
    fe be = F.mul(M.at(0, 2), M.at(1, 3));
    fe cd = F.mul(M.at(0, 3), M.at(1, 2));
    return F.add(F.sub(af, be), cd);
  }
  // expansion along the first row: sum_j (-1)^j m_{1j} Pf(M with rows/cols 1,j removed)
  fe acc = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (M.at(0, j) == 0) continue;
    Mat sub(n - 2, n - 2);
    std::size_t ri = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (i == j) continue;
      std::size_t cj = 0;
      for (std::size_t c = 1; c < n; ++c) {
        if (c == j) continue;
        sub.at(ri, cj++) = M.at(i, c);
      }
      ++ri;
    }
    fe term = F.mul(M.at(0, j), pfaffian(F, sub));
    acc = (j % 2 == 1) ? F.add(acc, term) : F.sub(acc, term);
  }
  return acc;
}

PairingData pairing_and_orthocomplement(const AltSubspace& V) {
  const Field& F = V.field();
  const std::size_t d = V.dim();
  // the pairing is the standard dot product on the strict-upper coordinates
  Mat gram(d, d);
  std::vector<std::vector<fe>> vecs;
  for (const Mat& A : V.basis()) vecs.push_back(V.vectorize(A));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      fe acc = 0;
      for (std::size_t t = 0; t < vecs[i].size(); ++t)
        acc = F.add(acc, F.mul(vecs[i][t], vecs[j][t]));
      gram.at(i, j) = acc;
    }
  Mat rows(d, V.n() * (V.n() - 1) / 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t t = 0; t < rows.cols; ++t) rows.at(i, t) = vecs[i][t];
  Subspace perp_coords = kernel(F, rows);
  std::vector<Mat> perp_gens;
  for (std::size_t i = 0; i < perp_coords.dim(); ++i) {
    std::vector<fe> v(rows.cols);
    for (std::size_t t = 0; t < rows.cols; ++t) v[t] = perp_coords.basis.at(i, t);
    perp_gens.push_back(V.unvectorize(v));
  }
  return PairingData{std::move(gram), AltSubspace(F, V.n(), perp_gens)};
}

MatrixSpace operator_space_from_generators(const Field& F, std::size_t n,
                                           const std::vector<Mat>& alt_list) {
  const std::size_t m = alt_list.size();
  if (m < 1) fail(errc::bad_params, "need at least one alternating matrix");
  for (const Mat& A : alt_list)
    if (A.rows != n || A.cols != n || !is_alternating(F, A))
      fail(errc::not_alternating, "generator is not an alternating n x n matrix");
  std::vector<Mat> gens;
  gens.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Mat G(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < n; ++c) G.at(i, c) = alt_list[i].at(j, c);
    gens.push_back(std::move(G));
  }
  return MatrixSpace(F, m, n, gens);
}

MatrixSpace operator_space_from_alt(const AltSubspace& H) {
  return operator_space_from_generators(H.field(), H.n(), H.basis());
}

AltSubspace full_alt(const Field& F, std::size_t n) {
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat A(n, n);
      A.at(i, j) = F.one();
      A.at(j, i) = F.neg(F.one());
      gens.push_back(std::move(A));
    }
  return AltSubspace(F, n, gens);
}

MatrixSpace wedge_space(const Field& F, std::size_t n) {
  if (n < 2) fail(errc::bad_params, "wedge space needs n >= 2");
  return operator_space_from_alt(full_alt(F, n));
}

RegularityInfo regularity_checks(const AltSubspace& H) {
  RegularityInfo info;
  const Field& F = H.field();
  Subspace common = kernel(F, vstack(H.basis()));
  info.incompressible = common.dim() == 0;
  // left-regular iff right-regular for alternating maps, and the span of the
  // values is all of the dual of H by independence of the basis
  info.fully_regular = info.incompressible;
  if (!info.incompressible) {
    std::vector<fe> w(H.n());
    for (std::size_t j = 0; j < H.n(); ++j) w[j] = common.basis.at(0, j);
    info.witness = std::move(w);
  }
  return info;
}

AltTransitivity alt_transitivity(const AltSubspace& H, std::uint64_t budget) {
  const Field& F = H.field();
  const std::size_t n = H.n();
  MatrixSpace as_space(F, n, n, H.basis());
  AltTransitivity out{transitive_rank(as_space, budget), std::nullopt, false};
  // recover an attaining x when the scan is exact
  auto total = checked_pow(F.q(), static_cast<unsigned>(n));
  if (total && *total <= budget) {
    ProjectiveEnum pe(F, n);
    std::vector<fe> x;
    while (pe.next(x)) {
      if (rank(F, as_space.evaluation(x)) == out.trk.value) {
        out.attaining = x;
        break;
      }
    }
  }
  unsigned lower = 1 + (n >= 3 ? static_cast<unsigned>((n - 2) * (n - 3) / 2) : 0);
  RegularityInfo reg = regularity_checks(H);
  out.hypothesis_met =
      n >= 2 && reg.incompressible && H.dim() > lower && F.q() >= n - 1;
  if (out.hypothesis_met && out.trk.exact && out.trk.value != n - 1)
    fail(errc::invariant_violation,
         "incompressible space with dim > 1 + C(n-2,2) must have trk = n-1");
  return out;
}

std::optional<AltPrimitivityWitness> alt_primitivity_criterion(const AltSubspace& H,
                                                               std::uint64_t budget) {
  const Field& F = H.field();
  const std::size_t n = H.n();
  auto pc = projective_count(F.q(), static_cast<unsigned>(n));
  if (!pc || *pc > budget) fail(errc::budget_exceeded, "projective scan exceeds budget");
  ProjectiveEnum pe(F, n);
  std::vector<fe> x;
  while (pe.next(x)) {
    // Z_x = {u : x^T A u = 0 for all A in V_phi}; x wedge u lies in W_phi
    // exactly when u is orthogonal to every row x^T A
    Mat rows(H.dim(), n);
    for (std::size_t i = 0; i < H.dim(); ++i) {
      std::vector<fe> r = apply(F, transpose(H.basis()[i]), x);  // (x^T A_i)^T
      for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = r[j];
    }
    Subspace z = kernel(F, rows);
    if (z.dim() < n - 1) continue;
    // x is always in Z_x since x^T A x = 0; pick a hyperplane U0 with
    // x in U0 inside Z_x
    if (z.dim() == n - 1) return AltPrimitivityWitness{x, z};
    // Z_x = K^n (x kills every row): any hyperplane through x works
    Mat phi(1, n);
    std::size_t zc = n;
    for (std::size_t j = 0; j < n; ++j)
      if (x[j] == 0) zc = j;
    if (zc < n) {
      phi.at(0, zc) = 1;
    } else {
      phi.at(0, 0) = x[1];
      phi.at(0, 1) = F.neg(x[0]);
    }
    return AltPrimitivityWitness{x, kernel(F, phi)};
  }
  return std::nullopt;
}

TrilinearResult from_trilinear(const Field& F, std::size_t n, const std::vector<fe>& tensor) {
  if (tensor.size() != n * n * n) fail(errc::shape_mismatch, "tensor must have n^3 entries");
  auto t = [&](std::size_t i, std::size_t j, std::size_t k) {
    return tensor[(i * n + j) * n + k];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if ((i == j || j == k || i == k) && t(i, j, k) != 0)
          fail(errc::not_alternating_form, "nonzero on repeated indices");
        if (t(i, j, k) != F.neg(t(j, i, k)) || t(i, j, k) != F.neg(t(i, k, j)))
          fail(errc::not_alternating_form, "coefficients are not totally antisymmetric");
      }
  std::vector<Mat> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat M(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) M.at(j, k) = t(i, j, k);
    if (!is_alternating(F, M)) fail(errc::not_alternating_form, "slice is not alternating");
    gens.push_back(std::move(M));
  }
  TrilinearResult out{MatrixSpace(F, n, n, gens), false, std::nullopt};
  // regular iff x -> T(x,.,.) is injective: kernel of the n^2 x n matrix
  // whose column i is the vectorized slice for e_i
  Mat stack(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t e = 0; e < n * n; ++e) stack.at(e, i) = gens[i].a[e];
  Subspace kx = kernel(F, stack);
  out.fully_regular = kx.dim() == 0;
  if (!out.fully_regular) {
    std::vector<fe> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = kx.basis.at(0, j);
    out.witness = std::move(w);
  }
  return out;
}

}  // namespace llds
