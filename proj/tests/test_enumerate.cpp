#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "llds/enumerate.hpp"

using namespace llds;

TEST_CASE("vector enumeration is complete and counting-ordered") {
  Field F = Field::make(3);
  VectorEnum ve(F, 3);
  std::vector<fe> v;
  std::uint64_t count = 0;
  std::vector<fe> prev;
  while (ve.next(v)) {
    if (count == 0) CHECK(v == std::vector<fe>{0, 0, 0});
    if (!prev.empty()) CHECK(prev < v);  // lexicographic = base-q counting order
    prev = v;
    ++count;
  }
  CHECK(count == 27);
}

TEST_CASE("projective representatives: first nonzero coordinate is 1") {
  Field F = Field::make(3);
  ProjectiveEnum pe(F, 2);
  std::vector<fe> v;
  std::set<std::vector<fe>> seen;
  while (pe.next(v)) {
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    CHECK(v[lead] == 1);
    seen.insert(v);
  }
  CHECK(seen.size() == 4);  // (q^2-1)/(q-1)
  CHECK(projective_count(3, 2) == 4);
}

TEST_CASE("subspace counts match the Gaussian binomials for n <= 6, q in {2,3}") {
  for (std::uint64_t q : {2ull, 3ull}) {
    Field F = Field::make(q);
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned d = 0; d <= n; ++d) {
        SubspaceEnum se(F, n, d);
        Subspace S;
        std::uint64_t count = 0;
        std::set<std::vector<fe>> canon;
        while (se.next(S)) {
          ++count;
          CHECK(S.dim() == d);
          canon.insert(S.basis.a);
        }
        auto expected = gaussian_binomial(q, n, d);
        REQUIRE(expected.has_value());
        CHECK(count == *expected);
        CHECK(canon.size() == count);  // each subspace exactly once
      }
    }
  }
}

TEST_CASE("pinned subspace counts") {
  CHECK(gaussian_binomial(3, 4, 2) == 130);
  CHECK(gaussian_binomial(3, 6, 3) == 33880);
  CHECK(subspace_count_all(3, 6) == 56632);
  Field F = Field::make(3);
  SubspaceEnum se(F, 4, 2);
  Subspace S;
  std::uint64_t count = 0;
  while (se.next(S)) ++count;
  CHECK(count == 130);
}

TEST_CASE("emitted bases are canonical RREF") {
  Field F = Field::make(2);
  SubspaceEnum se(F, 5, 3);
  Subspace S;
  while (se.next(S)) {
    // pivots strictly increasing, pivot columns cleared elsewhere
    for (std::size_t i = 0; i < S.dim(); ++i) {
      CHECK(S.basis.at(i, S.pivots[i]) == 1);
      for (std::size_t i2 = 0; i2 < S.dim(); ++i2)
        if (i2 != i) CHECK(S.basis.at(i2, S.pivots[i]) == 0);
      if (i + 1 < S.dim()) CHECK(S.pivots[i] < S.pivots[i + 1]);
    }
  }
}

TEST_CASE("seek positions a shard at its ordinal") {
  Field F = Field::make(3);
  // walking from ordinal 10 matches skipping 10 items of a fresh scan
  VectorEnum a(F, 3), b(F, 3);
  std::vector<fe> va, vb;
  for (int i = 0; i < 10; ++i) a.next(va);
  b.seek(10);
  while (a.next(va)) {
    REQUIRE(b.next(vb));
    CHECK(va == vb);
  }
  CHECK_FALSE(b.next(vb));
  b.seek(27);  // one past the end
  CHECK_FALSE(b.next(vb));
}

TEST_CASE("checked_pow overflow reporting") {
  CHECK(checked_pow(5, 3) == 125);
  CHECK_FALSE(checked_pow(3, 50).has_value());
  CHECK_FALSE(gaussian_binomial(7, 40, 20).has_value());
}
