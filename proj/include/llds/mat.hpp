#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "llds/field.hpp"

namespace llds {

// Dense exact matrix over a Field, row-major.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<fe> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  fe& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  fe at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool is_zero() const {
    for (fe v : a)
      if (v != 0) return false;
    return true;
  }
  bool operator==(const Mat& o) const = default;
};

Mat identity(std::size_t n);
// J_r = [I_r 0; 0 0] of shape m x n.
Mat jr(std::size_t m, std::size_t n, std::size_t r);
Mat add(const Field& F, const Mat& A, const Mat& B);
Mat sub(const Field& F, const Mat& A, const Mat& B);
Mat scale(const Field& F, fe c, const Mat& A);
Mat mul(const Field& F, const Mat& A, const Mat& B);
Mat transpose(const Mat& A);
Mat block(const Mat& A, std::size_t r0, std::size_t c0, std::size_t r, std::size_t c);
std::vector<fe> apply(const Field& F, const Mat& A, const std::vector<fe>& x);

fe det(const Field& F, Mat A);
unsigned rank(const Field& F, Mat A);

struct Echelon {
  Mat rref;
  unsigned rank = 0;
  std::vector<unsigned> pivots;
};
Echelon rref(const Field& F, Mat A);

// A subspace of K^n held by its canonical reduced row-echelon basis: nonzero
// rows, strictly increasing pivots, pivot columns cleared elsewhere.  Two
// Subspace values describe the same subspace iff they compare equal.
struct Subspace {
  std::size_t ambient = 0;
  Mat basis;  // dim x ambient
  std::vector<unsigned> pivots;

  std::size_t dim() const { return basis.rows; }
  bool operator==(const Subspace& o) const = default;
};

Subspace zero_subspace(std::size_t ambient);
Subspace full_subspace(std::size_t ambient);
Subspace row_space(const Field& F, const Mat& A);
Subspace col_space(const Field& F, const Mat& A);
// Right kernel {x : Ax = 0}.
Subspace kernel(const Field& F, const Mat& A);

bool subspace_contains(const Field& F, const Subspace& S, const std::vector<fe>& v);
// Coordinates of v in the RREF basis of S; v must lie in S (they are just the
// pivot-column entries).
std::vector<fe> coords_in(const Subspace& S, const std::vector<fe>& v);
// n x (n - dim S) matrix whose columns are the standard vectors at the
// non-pivot coordinates; together with S they span K^n.
Mat complement_columns(const Subspace& S);
// (n - dim S) x n matrix L with ker L = S; realizes the quotient K^n -> K^n/S.
Mat quotient_map(const Field& F, const Subspace& S);

// One solution of Ax = b, or nullopt if inconsistent.
std::optional<std::vector<fe>> solve(const Field& F, const Mat& A, const std::vector<fe>& b);
Mat inverse(const Field& F, const Mat& A);  // SingularTransform if singular
bool is_invertible(const Field& F, const Mat& A);

// Invertible P (m x m), Q (n x n) with P*A*Q = J_rank(A).
struct JrFactorization {
  Mat P, Q;
  unsigned r = 0;
};
JrFactorization factor_to_jr(const Field& F, const Mat& A);

// Stack rows of all matrices (equal column counts).
Mat vstack(const std::vector<Mat>& mats);

}  // namespace llds
