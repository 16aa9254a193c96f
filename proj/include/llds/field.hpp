#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "llds/errors.hpp"

namespace llds {

// Element of GF(p^k), packed as the ordinal of its coefficient vector
// (c_0, ..., c_{k-1}), ascending powers: value = sum c_i * p^i.  For a prime
// field this is just the residue.  Valid range is [0, q).
using fe = std::uint64_t;

bool is_prime_u64(std::uint64_t n);

// Arithmetic context for GF(p^k).  Immutable after construction; all
// operations are pure, so contexts and elements can be shared freely
// between threads.
class Field {
public:
  Field() = default;  // empty placeholder; assign a made field before use
  // Auto modulus: the lexicographically smallest irreducible monic degree-k
  // polynomial over GF(p), coefficient vectors scanned in base-p counting
  // order.  Requires p prime and p^k < 2^63.
  static Field make(std::uint64_t p, unsigned k = 1);
  // Explicit modulus, given as c_0..c_{k-1} (the monic leading x^k term is
  // implicit).  Must be irreducible over GF(p).
  static Field make(std::uint64_t p, unsigned k, const std::vector<std::uint64_t>& modulus);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return mod_; }
  bool prime_field() const { return k_ == 1; }
  bool char2() const { return p_ == 2; }

  fe zero() const { return 0; }
  fe one() const { return 1; }

  fe add(fe a, fe b) const;
  fe sub(fe a, fe b) const;
  fe neg(fe a) const;
  fe mul(fe a, fe b) const;
  fe inv(fe a) const;  // DivisionByZero on 0
  fe pow(fe a, std::uint64_t e) const;

  // Reduce an integer into the prime subfield.
  fe from_int(std::int64_t v) const;
  // Coefficient-vector interface (ascending powers, values in [0,p)).
  fe from_coeffs(const std::vector<std::uint64_t>& c) const;
  std::vector<std::uint64_t> coeffs(fe a) const;

  // True iff a = y^2 for some y.  In characteristic 2 the Frobenius is
  // bijective on a finite field, so every element is a square.
  bool is_square(fe a) const;
  // Smallest non-square in ordinal order; odd q only.
  fe least_nonsquare() const;

  // Class of a in K / P(K), P(x) = x^2 + x.  Characteristic 2 only; the two
  // classes are separated by the absolute trace.
  enum class Arf { trivial, nontrivial };
  Arf arf_class(fe a) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string describe() const;  // "GF(5)", "GF(2^2)", ...

private:
  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> mod_;  // c_0..c_{k-1}
};

// GF(q^e) living over a base GF(p^k), with the subfield embedding resolved.
// Used by the generic-rank evaluation path; the big field is just another
// Field, so all matrix routines work over it unchanged.
struct FieldExtension {
  Field big;
  unsigned e = 1;
  std::vector<fe> embed_table;  // ordinal in base field -> element of big; empty when identity
  fe embed(fe a) const { return embed_table.empty() ? a : embed_table[a]; }
};

FieldExtension extend_field(const Field& base, unsigned e);

}  // namespace llds
