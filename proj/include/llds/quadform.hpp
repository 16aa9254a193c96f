#pragma once

#include <optional>

#include "llds/alternating.hpp"

namespace llds {

// Quadratic form q(x) = sum_{i<=j} c_ij x_i x_j with upper-triangular
// coefficient storage; valid in every characteristic.
struct QuadForm {
  Field F;
  std::size_t n = 0;
  std::vector<fe> c;  // index of (i,j), i <= j: i*n - i*(i-1)/2 + (j-i)

  QuadForm(const Field& field, std::size_t dim) : F(field), n(dim), c(dim * (dim + 1) / 2, 0) {}
  std::size_t idx(std::size_t i, std::size_t j) const { return i * n - i * (i - 1) / 2 + (j - i); }
  fe& at(std::size_t i, std::size_t j) { return c[idx(i, j)]; }
  fe at(std::size_t i, std::size_t j) const { return c[idx(i, j)]; }
  fe eval(const std::vector<fe>& x) const;
  bool is_zero() const;
  // lambda * (q composed with the column substitution P)
  QuadForm transform(const Mat& P, fe lambda) const;
};

// Pf restricted to a subspace of Mata_4, expanded exactly in the coordinates
// of the given basis: diagonal from Pf(v_i), off-diagonal by polarization.
QuadForm restrict_pfaffian(const AltSubspace& V);

struct SimilarityClass {
  enum class Kind { D0, D1, R } kind = Kind::D0;
  // R payload: odd characteristic, the discriminant class representative
  // (1 or the least non-square); characteristic 2, the canonical Arf
  // representative (0, or the least element with nontrivial class).
  fe delta = 0;
  bool char2 = false;
  // set when a degenerate nonzero form lands in D1 only because the
  // Frobenius is onto: the D2(t) family is vacuous over finite fields
  bool d2_collapsed = false;
  std::string tag() const;
  bool operator==(const SimilarityClass& o) const {
    return kind == o.kind && delta == o.delta && char2 == o.char2;
  }
};

// Similarity class of a 2-dimensional form.  Over finite fields of
// characteristic 2 the D2 family is vacuous (Frobenius is onto), so a
// degenerate nonzero form lands in D1.
SimilarityClass classify_dim2(const QuadForm& q);

struct TernaryClass {
  unsigned rank = 0;
  // rank 2: discriminant class of the regular part (similarity-invariant);
  // rank 3: the two discriminant classes merge under scaling over a finite
  // field, so the canonical representative is always 1.
  fe disc = 0;
  bool char2 = false;
  std::string tag() const;
  bool operator==(const TernaryClass& o) const = default;
};

// Similarity invariants of a 3-dimensional form over odd characteristic; in
// characteristic 2 the normalized decomposition tag [a,b] | <c>.
TernaryClass classify_dim3(const QuadForm& q);

bool totally_isotropic(const AltSubspace& V);

// Congruence of subspaces of Mata_4 with dim <= 3, through the Witt
// similarity criterion: outside the lagrangian case, congruent iff the
// restricted pfaffian forms are similar; the two lagrangian orbits are told
// apart by incompressibility.
bool subspaces_congruent(const AltSubspace& V1, const AltSubspace& V2,
                         std::uint64_t budget = kDefaultBudget);

}  // namespace llds
