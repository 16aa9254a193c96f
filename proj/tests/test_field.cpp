#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "llds/field.hpp"

using namespace llds;

namespace {

// independent oracle: the set of squares by brute-force squaring
std::set<fe> square_set(const Field& F) {
  std::set<fe> s;
  for (fe a = 0; a < F.q(); ++a) s.insert(F.mul(a, a));
  return s;
}

// independent oracle: the image of P(x) = x^2 + x
std::set<fe> wp_image(const Field& F) {
  std::set<fe> s;
  for (fe a = 0; a < F.q(); ++a) s.insert(F.add(F.mul(a, a), a));
  return s;
}

}  // namespace

TEST_CASE("make_field basics") {
  Field f5 = Field::make(5);
  CHECK(f5.q() == 5);
  CHECK(f5.prime_field());

  Field f4 = Field::make(2, 2);
  CHECK(f4.q() == 4);
  // auto selection scans base-2 counting order: x^2, x^2+1, x^2+x, x^2+x+1
  CHECK(f4.modulus() == std::vector<std::uint64_t>{1, 1});

  CHECK_THROWS_AS(Field::make(4, 1), error);
  CHECK_THROWS_AS(Field::make(2, 63), error);         // 2^63 out of range
  CHECK_THROWS_AS(Field::make(3, 40), error);         // 3^40 out of range
  CHECK_THROWS_AS(Field::make(2, 2, {0, 0}), error);  // x^2 is reducible
}

TEST_CASE("arithmetic examples") {
  Field f5 = Field::make(5);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.pow(2, 4) == 1);
  CHECK_THROWS_AS(f5.inv(0), error);

  Field f4 = Field::make(2, 2);
  // x * x = x + 1 under x^2 + x + 1
  fe x = f4.from_coeffs({0, 1});
  CHECK(f4.mul(x, x) == f4.from_coeffs({1, 1}));
  CHECK(f4.add(x, x) == 0);
}

TEST_CASE("field axioms on several fields") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1},
                      {3, 1},
                      {5, 1},
                      {7, 1},
                      {2, 2},
                      {2, 3},
                      {3, 2},
                      {5, 2}}) {
    Field F = Field::make(p, k);
    for (fe a = 1; a < F.q(); ++a) {
      CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.pow(a, F.q() - 1) == F.one());
    }
    for (fe a = 0; a < F.q(); ++a)
      for (fe b = 0; b < F.q(); ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.sub(F.add(a, b), b) == a);
      }
  }
}

TEST_CASE("is_square agrees with brute force for q <= 49") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1},
                      {3, 1},
                      {5, 1},
                      {7, 1},
                      {11, 1},
                      {13, 1},
                      {17, 1},
                      {19, 1},
                      {23, 1},
                      {29, 1},
                      {31, 1},
                      {37, 1},
                      {41, 1},
                      {43, 1},
                      {47, 1},
                      {2, 2},
                      {2, 3},
                      {2, 4},
                      {2, 5},
                      {3, 2},
                      {3, 3},
                      {5, 2},
                      {7, 2}}) {
    Field F = Field::make(p, k);
    std::set<fe> squares = square_set(F);
    for (fe a = 0; a < F.q(); ++a) CHECK(F.is_square(a) == (squares.count(a) > 0));
  }
  Field f5 = Field::make(5);
  CHECK_FALSE(f5.is_square(2));
  CHECK(f5.is_square(4));
  CHECK(f5.least_nonsquare() == 2);
  Field f4 = Field::make(2, 2);
  for (fe a = 0; a < 4; ++a) CHECK(f4.is_square(a));
}

TEST_CASE("arf classes against the P-image oracle, q in {2,4,8}") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {2, 3}}) {
    Field F = Field::make(p, k);
    std::set<fe> img = wp_image(F);
    CHECK(img.size() == F.q() / 2);  // index-2 subgroup
    for (fe a = 0; a < F.q(); ++a) {
      CHECK((F.arf_class(a) == Field::Arf::trivial) == (img.count(a) > 0));
      for (fe b = 0; b < F.q(); ++b) {
        bool same = F.arf_class(a) == F.arf_class(b);
        CHECK(same == (img.count(F.sub(a, b)) > 0));
      }
    }
  }
  Field f2 = Field::make(2);
  CHECK(f2.arf_class(0) == Field::Arf::trivial);
  CHECK(f2.arf_class(1) == Field::Arf::nontrivial);
  CHECK_THROWS_AS(Field::make(5).arf_class(1), error);
}

TEST_CASE("coefficient round trips and large prime fields") {
  Field F = Field::make(3, 2);
  for (fe a = 0; a < F.q(); ++a) CHECK(F.from_coeffs(F.coeffs(a)) == a);
  CHECK_THROWS_AS(F.from_coeffs({3, 0}), error);

  Field big = Field::make(4611686018427387847ull);  // prime below 2^62
  fe a = 4611686018427387846ull;
  CHECK(big.mul(a, big.inv(a)) == 1);
  CHECK(big.from_int(-1) == a);
}

TEST_CASE("extension embedding preserves arithmetic") {
  Field f4 = Field::make(2, 2);
  FieldExtension ext = extend_field(f4, 2);  // GF(16)
  CHECK(ext.big.q() == 16);
  for (fe a = 0; a < 4; ++a)
    for (fe b = 0; b < 4; ++b) {
      CHECK(ext.embed(f4.add(a, b)) == ext.big.add(ext.embed(a), ext.embed(b)));
      CHECK(ext.embed(f4.mul(a, b)) == ext.big.mul(ext.embed(a), ext.embed(b)));
    }
}
