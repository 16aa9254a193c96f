#pragma once

#include <optional>

#include "llds/matspace.hpp"

namespace llds {

bool is_alternating(const Field& F, const Mat& M);

// Subspace of alternating n x n matrices, canonicalized through the RREF of
// the strict-upper-triangle vectorization (pairs (i,j), i < j, in
// lexicographic order).  In characteristic 2 "alternating" means symmetric
// with zero diagonal, which the constructor enforces explicitly.
class AltSubspace {
public:
  AltSubspace(const Field& F, std::size_t n, const std::vector<Mat>& generators);

  const Field& field() const { return F_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& canonical() const { return canon_; }
  bool same_space(const AltSubspace& o) const;

  std::vector<fe> vectorize(const Mat& M) const;  // strict upper triangle
  Mat unvectorize(const std::vector<fe>& v) const;

private:
  Field F_;
  std::size_t n_;
  std::vector<Mat> basis_;
  Mat canon_;
};

// Pfaffian of an alternating matrix of even size: entry (1,2) for n = 2, the
// closed af - be + cd formula for n = 4, first-row Laplace expansion in
// general (n <= 8).  Satisfies det M = Pf(M)^2.
fe pfaffian(const Field& F, const Mat& M);

struct PairingData {
  Mat gram;          // Gram matrix of <A|B> = sum_{i<j} a_ij b_ij on the basis
  AltSubspace perp;  // orthocomplement inside Mata_n
};
PairingData pairing_and_orthocomplement(const AltSubspace& V);

// The operator space {[X^T A_1; ...; X^T A_m] : X in K^n} spanned by the
// canonical X = e_1..e_n.  The row order follows the canonical basis of H.
MatrixSpace operator_space_from_alt(const AltSubspace& H);
// Same construction against an explicit ordered list of alternating
// matrices; used where the row order matters (catalog transcriptions).
MatrixSpace operator_space_from_generators(const Field& F, std::size_t n,
                                           const std::vector<Mat>& alt_list);

// Operator space of the standard pairing (x,y) -> x wedge y on K^n: shape
// C(n,2) x n, upper-rank n-1.
MatrixSpace wedge_space(const Field& F, std::size_t n);
AltSubspace full_alt(const Field& F, std::size_t n);  // Mata_n, lexicographic basis

struct RegularityInfo {
  bool incompressible = false;
  bool fully_regular = false;
  std::optional<std::vector<fe>> witness;  // common kernel vector when compressible
};
RegularityInfo regularity_checks(const AltSubspace& H);

struct AltTransitivity {
  RankInfo trk;
  std::optional<std::vector<fe>> attaining;  // an x with dim Hx = trk
  bool hypothesis_met = false;               // incompressible, dim > 1 + C(n-2,2), q >= n-1
};
// trk of H acting by x -> Hx; an incompressible space with
// dim > 1 + C(n-2,2) over a field with q >= n-1 must reach trk = n-1, and a
// miss throws InvariantViolation.
AltTransitivity alt_transitivity(const AltSubspace& H, std::uint64_t budget = kDefaultBudget);

struct AltPrimitivityWitness {
  std::vector<fe> x;
  Subspace u0;  // hyperplane with x in U0 and x wedge U0 inside W_phi
};
// Non-primitivity criterion for the operator space of V_phi = H: a witness
// pair (x, U0) with W_phi containing x wedge U0 exists iff the space is
// non-primitive (under the stated dimension/cardinality hypotheses).
std::optional<AltPrimitivityWitness> alt_primitivity_criterion(
    const AltSubspace& H, std::uint64_t budget = kDefaultBudget);

struct TrilinearResult {
  MatrixSpace space;
  bool fully_regular = false;
  std::optional<std::vector<fe>> witness;  // kernel vector when not regular
};
// Operator space x -> matrix of T(x,.,.) of an alternating trilinear form
// given by its dense coefficient tensor t[i][j][k] (size n^3, row-major).
TrilinearResult from_trilinear(const Field& F, std::size_t n, const std::vector<fe>& tensor);

}  // namespace llds
