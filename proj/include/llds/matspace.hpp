#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llds/enumerate.hpp"
#include "llds/mat.hpp"

namespace llds {

// Enumeration cap per quantifier; exact claims always state the method used.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 1;

// A linear space of m x n matrices given by a basis.  The canonical form is
// the RREF of the row-major vectorization of the generators, so two
// MatrixSpace values describe the same subspace iff their canonical forms
// are equal.  Immutable after construction.
class MatrixSpace {
public:
  MatrixSpace(const Field& F, std::size_t m, std::size_t n, const std::vector<Mat>& generators);

  const Field& field() const { return F_; }
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& canonical() const { return canon_; }

  Mat element(const std::vector<fe>& coeffs) const;
  bool contains(const Mat& M) const;
  bool same_space(const MatrixSpace& other) const;
  // Image of x under the space: the m x d matrix [A_1 x | ... | A_d x].
  Mat evaluation(const std::vector<fe>& x) const;

private:
  Field F_;
  std::size_t m_, n_;
  std::vector<Mat> basis_;
  Mat canon_;
};

struct RankInfo {
  unsigned value = 0;
  bool exact = true;
  std::string method = "exhaustive";  // "exhaustive" | "generic-extension" | "sampled"
  unsigned trials = 0;
  std::uint64_t seed = 0;
  unsigned ext_degree = 1;
  // Base-field maximum when it had to be sampled; equals `value` on the
  // exhaustive path.  The generic rank argument makes `value` the upper rank
  // over any field with more than `value` elements; over the ground field it
  // is only an upper bound when q <= value.
  std::optional<unsigned> base_observed;
};

RankInfo upper_rank(const MatrixSpace& S, std::uint64_t budget = kDefaultBudget,
                    std::uint64_t seed = kDefaultSeed);
RankInfo transitive_rank(const MatrixSpace& S, std::uint64_t budget = kDefaultBudget,
                         std::uint64_t seed = kDefaultSeed);

// Exact decision of "some element has rank >= threshold", by randomized
// witness search with an exhaustive fallback.  Throws BudgetExceeded when the
// fallback would overrun the budget.
bool upper_rank_at_least(const MatrixSpace& S, unsigned threshold,
                         std::uint64_t budget = kDefaultBudget,
                         std::uint64_t seed = kDefaultSeed);

// (kernel of S, essential range of S): the common kernel of the basis and the
// sum of the images.
std::pair<Subspace, Subspace> kernel_and_essential_range(const MatrixSpace& S);

struct Reduction {
  MatrixSpace space;       // the reduced space, shape m' x n'
  Mat row_projection;      // m' x m, realizes V -> V0 coordinates
  Mat col_section;         // n x n', splits K^n -> K^n / U0
};
Reduction reduce(const MatrixSpace& S);

// The dual operator space S^ = {f -> f(x)} in Mat_{m,d}, written against the
// canonical basis of S.
MatrixSpace dual_hat(const MatrixSpace& S);
MatrixSpace transpose_space(const MatrixSpace& S);
MatrixSpace apply_equivalence(const MatrixSpace& S, const Mat& P, const Mat& Q);

struct RankDistribution {
  std::map<unsigned, std::uint64_t> counts;
  bool exact = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Equivalence-invariant summary.  Equal fingerprints are necessary for the
// equivalence of two spaces, never claimed sufficient.
struct Fingerprint {
  std::size_t m = 0, n = 0, d = 0;
  unsigned urk = 0, trk = 0;
  unsigned lld_index = 0;     // c: min over nonzero x of dim{f : f(x) = 0}
  unsigned defect_index = 0;  // n - urk
  unsigned kernel_dim = 0, essrange_dim = 0;
  bool urk_exact = true, trk_exact = true;
  RankDistribution ranks;

  bool equals(const Fingerprint& o) const;
  std::string brief() const;  // "(m,n,d,urk,trk,c)"
};

Fingerprint fingerprint(const MatrixSpace& S, std::uint64_t budget = kDefaultBudget,
                        std::uint64_t seed = kDefaultSeed);

}  // namespace llds
