#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "llds/mat.hpp"
#include "llds/rng.hpp"

using namespace llds;

namespace {

Mat random_mat(const Field& F, std::size_t r, std::size_t c, SplitMix64& rng) {
  Mat M(r, c);
  for (fe& v : M.a) v = rng.below(F.q());
  return M;
}

Mat from_rows(std::size_t r, std::size_t c, std::initializer_list<int> vals, const Field& F) {
  Mat M(r, c);
  std::size_t t = 0;
  for (int v : vals) M.a[t++] = F.from_int(v);
  return M;
}

}  // namespace

TEST_CASE("rank and kernel on pinned examples") {
  Field F = Field::make(5);
  CHECK(rank(F, identity(3)) == 3);
  CHECK(kernel(F, identity(3)).dim() == 0);

  Mat M = from_rows(3, 3, {0, 1, 0, -1, 0, 0, 0, 0, 0}, F);
  CHECK(rank(F, M) == 2);
  Subspace k = kernel(F, M);
  CHECK(k.dim() == 1);
  CHECK(subspace_contains(F, k, {0, 0, 1}));
}

TEST_CASE("rank(M) == rank(M^T) for 500 random matrices per field") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
    Field F = Field::make(p, k);
    SplitMix64 rng = substream(7, p * 100 + k);
    for (int t = 0; t < 500; ++t) {
      Mat M = random_mat(F, 1 + rng.below(5), 1 + rng.below(5), rng);
      CHECK(rank(F, M) == rank(F, transpose(M)));
    }
  }
}

TEST_CASE("rref invariants") {
  Field F = Field::make(3);
  SplitMix64 rng = substream(11, 0);
  for (int t = 0; t < 100; ++t) {
    Mat M = random_mat(F, 1 + rng.below(4), 1 + rng.below(5), rng);
    Echelon e = rref(F, M);
    Echelon e2 = rref(F, e.rref);
    CHECK(e2.rref == e.rref);  // idempotent
    CHECK(e.rank == rank(F, M));
    // rank + kernel dim = n
    CHECK(e.rank + kernel(F, M).dim() == M.cols);
  }
}

TEST_CASE("solve and inverse") {
  Field F = Field::make(7);
  SplitMix64 rng = substream(13, 0);
  for (int t = 0; t < 50; ++t) {
    Mat A = random_mat(F, 3, 3, rng);
    std::vector<fe> x = {rng.below(7), rng.below(7), rng.below(7)};
    std::vector<fe> b = apply(F, A, x);
    auto sol = solve(F, A, b);
    REQUIRE(sol.has_value());
    CHECK(apply(F, A, *sol) == b);
  }
  Mat S(2, 2);
  S.at(0, 0) = 1;
  S.at(1, 0) = 1;  // singular
  CHECK_THROWS_AS(inverse(F, S), error);
  CHECK_FALSE(solve(F, S, {0, 1}).has_value());
}

TEST_CASE("factor_to_jr produces P A Q = J_r") {
  for (auto p : {3ull, 5ull}) {
    Field F = Field::make(p);
    SplitMix64 rng = substream(17, p);
    for (int t = 0; t < 80; ++t) {
      Mat A = random_mat(F, 1 + rng.below(4), 1 + rng.below(4), rng);
      JrFactorization f = factor_to_jr(F, A);
      CHECK(f.r == rank(F, A));
      CHECK(is_invertible(F, f.P));
      CHECK(is_invertible(F, f.Q));
      CHECK(mul(F, f.P, mul(F, A, f.Q)) == jr(A.rows, A.cols, f.r));
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  Field F = Field::make(5);
  SplitMix64 rng = substream(19, 0);
  for (int t = 0; t < 60; ++t) {
    Mat A = random_mat(F, 3, 3, rng), B = random_mat(F, 3, 3, rng);
    CHECK(det(F, mul(F, A, B)) == F.mul(det(F, A), det(F, B)));
  }
}

TEST_CASE("quotient map and complements") {
  Field F = Field::make(3);
  Mat gen(1, 4);
  gen.at(0, 0) = 1;
  gen.at(0, 2) = 2;
  Subspace W = row_space(F, gen);
  Mat L = quotient_map(F, W);
  CHECK(L.rows == 3);
  // kernel of L is exactly W
  Subspace kerL = kernel(F, L);
  CHECK(kerL == W);
  Mat C = complement_columns(W);
  CHECK(C.cols == 3);
  // columns of C together with W span everything
  Mat both(4, 4);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 4; ++i) both.at(i, j) = C.at(i, j);
  for (std::size_t i = 0; i < 4; ++i) both.at(i, 3) = gen.at(0, i);
  CHECK(rank(F, both) == 4);
}
