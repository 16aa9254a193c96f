#pragma once

#include <optional>

#include "llds/matspace.hpp"

namespace llds {

struct IndexInfo {
  unsigned lld_index = 0;     // c: min over nonzero x of dim{f in S : f(x) = 0}
  unsigned defect_index = 0;  // n - urk(S)
  bool exact = true;
  std::string method = "exhaustive";
};
// Exact when q^n fits the budget; otherwise the LLD index is the minimum
// over a seeded sample of x (an upper bound for the true index, tagged).
IndexInfo indices(const MatrixSpace& S, std::uint64_t budget = kDefaultBudget,
                  std::uint64_t seed = kDefaultSeed);

struct MinimalityResult {
  bool minimal = false;
  std::optional<MatrixSpace> witness;  // a c-LLD hyperplane when not minimal
};
// S minimal among c-LLD spaces iff no linear hyperplane of S is c-LLD.
MinimalityResult minimal_clld(const MatrixSpace& S, unsigned c,
                              std::uint64_t budget = kDefaultBudget);

struct PrimitivityResult {
  bool value = false;
  std::string reason;                      // set when false
  std::optional<std::vector<fe>> witness;  // dual vector of the failing hyperplane / quotient
  bool hypothesis_met = true;              // #K > urk advisory
};
PrimitivityResult semiprimitive(const MatrixSpace& S, std::uint64_t budget = kDefaultBudget,
                                std::uint64_t seed = kDefaultSeed);
PrimitivityResult primitive(const MatrixSpace& S, std::uint64_t budget = kDefaultBudget,
                            std::uint64_t seed = kDefaultSeed);

struct ColumnPropertyMode {
  bool exact = true;
  unsigned trials = 0;
  std::uint64_t seed = kDefaultSeed;
  static ColumnPropertyMode exact_mode() { return {}; }
  static ColumnPropertyMode randomized(unsigned trials, std::uint64_t seed) {
    return {false, trials, seed};
  }
};
struct ColumnPropertyResult {
  bool value = false;
  bool exact = true;
  std::uint64_t scanned = 0;
  std::optional<Subspace> witness;  // W with a non-defective induced lower space
};
// Exact mode iterates every proper subspace W of K^m, takes the maximal
// admissible right block U2 = {x : Sx <= W}, and requires the induced space
// K^n/U2 -> K^m/W to be defective.  Maximality of U2 suffices: shrinking U2
// only widens the lower block by columns that cannot raise its rank to the
// full width.
ColumnPropertyResult column_property(const MatrixSpace& S,
                                     ColumnPropertyMode mode = ColumnPropertyMode::exact_mode(),
                                     std::uint64_t budget = kDefaultBudget);

struct FlandersReport {
  bool pass = false;
  unsigned r = 0;
  std::uint64_t checked = 0;
  bool enumerated_all = true;  // false: basis + pairwise sums (+ triples in char 2)
  bool hypothesis_met = true;  // #K > r advisory
  std::string failure;         // "D != 0" or "B A^k C != 0 at k=..."
  std::optional<Mat> violator;
};
// Verifies D(M) = 0 and B(M) A(M)^k C(M) = 0 for k <= min(m,n) on every
// enumerated element of a space containing J_r.  The k range is capped by
// Cayley-Hamilton.
FlandersReport flanders_atkinson_check(const MatrixSpace& S, unsigned r,
                                       std::uint64_t budget = kDefaultBudget);

struct BlockShape {
  unsigned r = 0, s = 0;  // zero lower-right block of shape (m-r) x (n-s)
  Mat P, Q;               // witnesses; apply_equivalence(S,P,Q) exhibits the block
};
struct DecompositionInequality {
  RankInfo urk_lower;  // B block, (m-r) x s
  RankInfo urk_upper;  // C block, r x (n-s)
  RankInfo urk_space;
  bool holds = false;
};
DecompositionInequality decomposition_inequality(const MatrixSpace& S, const BlockShape& shape,
                                                 std::uint64_t budget = kDefaultBudget);

struct RReduced {
  MatrixSpace space;  // equivalent space containing J_r
  Mat P, Q;
  unsigned r = 0;
  bool r_exact = true;
};
RReduced r_reduce_normalize(const MatrixSpace& S, std::uint64_t budget = kDefaultBudget,
                            std::uint64_t seed = kDefaultSeed);

struct OneDimSplit {
  MatrixSpace space;    // (1,q)-decomposed equivalent space
  unsigned q_cols = 0;  // minimal q
  MatrixSpace h_block;  // (m-1) x q lower-left block space
  Mat P, Q;
};
OneDimSplit one_dim_split(const MatrixSpace& S, const std::vector<fe>& x,
                          std::uint64_t budget = kDefaultBudget);

struct ThinDecomposition {
  MatrixSpace transformed;  // r-reduced, carrying the thin block pattern
  unsigned p = 0, s = 0, t = 0, r = 0;
  std::vector<Mat> alt_mats;             // B_1..B_s, alternating p x p
  std::optional<MatrixSpace> h_block;    // present when t > 0
  bool h_column_property_checked = false;
  bool bound_holds = false;  // m <= C(p+1,2) + C(r-p+1,2)
  Mat P, Q;
};
ThinDecomposition thin_decomposition(const MatrixSpace& S, const Mat& A,
                                     const std::vector<fe>& x,
                                     std::uint64_t budget = kDefaultBudget);

struct ColinearityResult {
  bool holds = false;
  std::vector<fe> alpha;  // coefficients against the canonical basis of S
  unsigned p = 0;
};
// Decides existence of a linear form alpha with A(M) C(M) = alpha(M) C(M)
// for every M in the r-reduced space S (r = n-1), by polarizing into a
// linear system over the basis pairs.
ColinearityResult colinearity_hypothesis(const MatrixSpace& S,
                                         std::uint64_t budget = kDefaultBudget);

struct CoreSplit {
  MatrixSpace transformed;  // [D ?; 0 H] pattern with D of the alternating kind
  unsigned s = 0, p = 0;
  MatrixSpace d_block;                 // s x (p+1)
  std::vector<Mat> certificate;        // Gram tensors of the alternating map, one per D row
  std::optional<MatrixSpace> h_block;  // (m-s) x (n-p-1) when s < m
  std::optional<bool> h_column_property;  // randomized check result, when run
  Mat P, Q;
};
CoreSplit alternating_core_split(const MatrixSpace& S, const std::vector<fe>& alpha,
                                 std::uint64_t budget = kDefaultBudget,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace llds
