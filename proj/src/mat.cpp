#include "llds/mat.hpp"

#include <algorithm>

namespace llds {

Mat identity(std::size_t n) {
  Mat I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat jr(std::size_t m, std::size_t n, std::size_t r) {
  Mat J(m, n);
  for (std::size_t i = 0; i < r; ++i) J.at(i, i) = 1;
  return J;
}

Mat add(const Field& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) fail(errc::shape_mismatch, "add");
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
  return C;
}

Mat sub(const Field& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) fail(errc::shape_mismatch, "sub");
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
  return C;
}

Mat scale(const Field& F, fe c, const Mat& A) {
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(c, A.a[i]);
  return C;
}

Mat mul(const Field& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) fail(errc::shape_mismatch, "mul");
  Mat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t t = 0; t < A.cols; ++t) {
      fe v = A.at(i, t);
      if (v == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(t, j)));
    }
  }
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Mat block(const Mat& A, std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) {
  Mat B(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) B.at(i, j) = A.at(r0 + i, c0 + j);
  return B;
}

std::vector<fe> apply(const Field& F, const Mat& A, const std::vector<fe>& x) {
  if (x.size() != A.cols) fail(errc::shape_mismatch, "apply");
  std::vector<fe> y(A.rows, 0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    fe acc = 0;
    for (std::size_t j = 0; j < A.cols; ++j)
      if (x[j] != 0) acc = F.add(acc, F.mul(A.at(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

fe det(const Field& F, Mat A) {
  if (A.rows != A.cols) fail(errc::shape_mismatch, "det of non-square");
  std::size_t n = A.rows;
  fe d = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A.at(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
      d = F.neg(d);
    }
    fe pv = A.at(col, col);
    d = F.mul(d, pv);
    fe ip = F.inv(pv);
    for (std::size_t i = col + 1; i < n; ++i) {
      fe f = F.mul(A.at(i, col), ip);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(col, j)));
    }
  }
  return d;
}

unsigned rank(const Field& F, Mat A) {
  unsigned r = 0;
  std::size_t rows = A.rows, cols = A.cols;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && A.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = col; j < cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
    fe ip = F.inv(A.at(r, col));
    for (std::size_t i = r + 1; i < rows; ++i) {
      fe f = F.mul(A.at(i, col), ip);
      if (f == 0) continue;
      A.at(i, col) = 0;
      for (std::size_t j = col + 1; j < cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
    }
    ++r;
  }
  return r;
}

Echelon rref(const Field& F, Mat A) {
  Echelon out;
  std::size_t rows = A.rows, cols = A.cols;
  unsigned r = 0;
  std::vector<unsigned> pivots;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && A.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
    fe ip = F.inv(A.at(r, col));
    for (std::size_t j = 0; j < cols; ++j) A.at(r, j) = F.mul(A.at(r, j), ip);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      fe f = A.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
    }
    pivots.push_back(static_cast<unsigned>(col));
    ++r;
  }
  out.rref = std::move(A);
  out.rank = r;
  out.pivots = std::move(pivots);
  return out;
}

Subspace zero_subspace(std::size_t ambient) {
  Subspace S;
  S.ambient = ambient;
  S.basis = Mat(0, ambient);
  return S;
}

Subspace full_subspace(std::size_t ambient) {
  Subspace S;
  S.ambient = ambient;
  S.basis = identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) S.pivots.push_back(static_cast<unsigned>(i));
  return S;
}

Subspace row_space(const Field& F, const Mat& A) {
  Echelon e = rref(F, A);
  Subspace S;
  S.ambient = A.cols;
  S.basis = Mat(e.rank, A.cols);
  for (unsigned i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) S.basis.at(i, j) = e.rref.at(i, j);
  S.pivots = e.pivots;
  return S;
}

Subspace col_space(const Field& F, const Mat& A) { return row_space(F, transpose(A)); }

Subspace kernel(const Field& F, const Mat& A) {
  Echelon e = rref(F, A);
  std::size_t n = A.cols;
  std::vector<bool> is_pivot(n, false);
  for (unsigned c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat gens(free_cols.size(), n);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    gens.at(t, fc) = 1;
    for (unsigned i = 0; i < e.rank; ++i)
      gens.at(t, e.pivots[i]) = F.neg(e.rref.at(i, fc));
  }
  // already independent; canonicalize for the RREF invariant
  return row_space(F, gens);
}

bool subspace_contains(const Field& F, const Subspace& S, const std::vector<fe>& v) {
  if (v.size() != S.ambient) fail(errc::shape_mismatch, "subspace_contains");
  std::vector<fe> w = v;
  for (std::size_t i = 0; i < S.dim(); ++i) {
    fe c = w[S.pivots[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < S.ambient; ++j) w[j] = F.sub(w[j], F.mul(c, S.basis.at(i, j)));
  }
  for (fe x : w)
    if (x != 0) return false;
  return true;
}

std::vector<fe> coords_in(const Subspace& S, const std::vector<fe>& v) {
  std::vector<fe> c(S.dim(), 0);
  for (std::size_t i = 0; i < S.dim(); ++i) c[i] = v[S.pivots[i]];
  return c;
}

Mat complement_columns(const Subspace& S) {
  std::vector<bool> is_pivot(S.ambient, false);
  for (unsigned c : S.pivots) is_pivot[c] = true;
  std::size_t cdim = S.ambient - S.dim();
  Mat C(S.ambient, cdim);
  std::size_t t = 0;
  for (std::size_t j = 0; j < S.ambient; ++j) {
    if (is_pivot[j]) continue;
    C.at(j, t) = 1;
    ++t;
  }
  return C;
}

Mat quotient_map(const Field& F, const Subspace& S) {
  // rows = basis of {y : By = 0} for B the basis of S; kernel is exactly S
  Subspace ann = kernel(F, S.basis);
  return ann.basis;
}

std::optional<std::vector<fe>> solve(const Field& F, const Mat& A, const std::vector<fe>& b) {
  if (b.size() != A.rows) fail(errc::shape_mismatch, "solve");
  Mat aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  Echelon e = rref(F, std::move(aug));
  std::vector<fe> x(A.cols, 0);
  for (unsigned i = 0; i < e.rank; ++i) {
    if (e.pivots[i] == A.cols) return std::nullopt;  // pivot in the rhs column
    x[e.pivots[i]] = e.rref.at(i, A.cols);
  }
  return x;
}

bool is_invertible(const Field& F, const Mat& A) {
  return A.rows == A.cols && rank(F, A) == A.rows;
}

Mat inverse(const Field& F, const Mat& A) {
  if (A.rows != A.cols) fail(errc::singular_transform, "inverse of non-square");
  std::size_t n = A.rows;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Echelon e = rref(F, std::move(aug));
  if (e.rank < n || e.pivots[n - 1] >= n) fail(errc::singular_transform, "matrix is singular");
  return block(e.rref, 0, n, n, n);
}

JrFactorization factor_to_jr(const Field& F, const Mat& A) {
  std::size_t m = A.rows, n = A.cols;
  Mat B = A;
  Mat P = identity(m), Q = identity(n);
  auto swap_rows = [&](Mat& M, std::size_t i1, std::size_t i2) {
    for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(i1, j), M.at(i2, j));
  };
  auto swap_cols = [&](Mat& M, std::size_t j1, std::size_t j2) {
    for (std::size_t i = 0; i < M.rows; ++i) std::swap(M.at(i, j1), M.at(i, j2));
  };
  unsigned r = 0;
  for (std::size_t step = 0; step < std::min(m, n); ++step) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = step; i < m && pi == m; ++i)
      for (std::size_t j = step; j < n; ++j)
        if (B.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m) break;
    if (pi != step) {
      swap_rows(B, pi, step);
      swap_rows(P, pi, step);
    }
    if (pj != step) {
      swap_cols(B, pj, step);
      swap_cols(Q, pj, step);
    }
    fe ip = F.inv(B.at(step, step));
    for (std::size_t j = 0; j < n; ++j) B.at(step, j) = F.mul(B.at(step, j), ip);
    for (std::size_t j = 0; j < m; ++j) P.at(step, j) = F.mul(P.at(step, j), ip);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == step) continue;
      fe f = B.at(i, step);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) B.at(i, j) = F.sub(B.at(i, j), F.mul(f, B.at(step, j)));
      for (std::size_t j = 0; j < m; ++j) P.at(i, j) = F.sub(P.at(i, j), F.mul(f, P.at(step, j)));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == step) continue;
      fe f = B.at(step, j);
      if (f == 0) continue;
      for (std::size_t i = 0; i < m; ++i) B.at(i, j) = F.sub(B.at(i, j), F.mul(f, B.at(i, step)));
      for (std::size_t i = 0; i < n; ++i) Q.at(i, j) = F.sub(Q.at(i, j), F.mul(f, Q.at(i, step)));
    }
    ++r;
  }
  return JrFactorization{std::move(P), std::move(Q), r};
}

Mat vstack(const std::vector<Mat>& mats) {
  if (mats.empty()) return Mat(0, 0);
  std::size_t cols = mats[0].cols, rows = 0;
  for (const Mat& M : mats) {
    if (M.cols != cols) fail(errc::shape_mismatch, "vstack");
    rows += M.rows;
  }
  Mat out(rows, cols);
  std::size_t r = 0;
  for (const Mat& M : mats) {
    std::copy(M.a.begin(), M.a.end(), out.a.begin() + r * cols);
    r += M.rows;
  }
  return out;
}

}  // namespace llds
