#include "llds/matspace.hpp"

#include <algorithm>

#include "llds/rng.hpp"

namespace llds {

namespace {

Mat vectorize_rows(const std::vector<Mat>& mats, std::size_t m, std::size_t n) {
  Mat V(mats.size(), m * n);
  for (std::size_t i = 0; i < mats.size(); ++i)
    std::copy(mats[i].a.begin(), mats[i].a.end(), V.a.begin() + i * m * n);
  return V;
}

Mat unvectorize(const Mat& V, std::size_t row, std::size_t m, std::size_t n) {
  Mat M(m, n);
  for (std::size_t t = 0; t < m * n; ++t) M.a[t] = V.at(row, t);
  return M;
}

}  // namespace

MatrixSpace::MatrixSpace(const Field& F, std::size_t m, std::size_t n,
                         const std::vector<Mat>& generators)
    : F_(F), m_(m), n_(n) {
  for (const Mat& G : generators)
    if (G.rows != m || G.cols != n)
      fail(errc::shape_mismatch, "generator shape differs from declared m x n");
  Echelon e = rref(F_, vectorize_rows(generators, m, n));
  canon_ = Mat(e.rank, m * n);
  for (unsigned i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < m * n; ++j) canon_.at(i, j) = e.rref.at(i, j);
  basis_.reserve(e.rank);
  for (unsigned i = 0; i < e.rank; ++i) basis_.push_back(unvectorize(canon_, i, m, n));
}

Mat MatrixSpace::element(const std::vector<fe>& coeffs) const {
  if (coeffs.size() != basis_.size()) fail(errc::shape_mismatch, "coefficient count != dim");
  Mat M(m_, n_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t t = 0; t < M.a.size(); ++t)
      M.a[t] = F_.add(M.a[t], F_.mul(coeffs[i], basis_[i].a[t]));
  }
  return M;
}

bool MatrixSpace::contains(const Mat& M) const {
  if (M.rows != m_ || M.cols != n_) return false;
  Mat stacked(canon_.rows + 1, m_ * n_);
  std::copy(canon_.a.begin(), canon_.a.end(), stacked.a.begin());
  std::copy(M.a.begin(), M.a.end(), stacked.a.begin() + canon_.rows * m_ * n_);
  return rank(F_, stacked) == canon_.rows;
}

bool MatrixSpace::same_space(const MatrixSpace& other) const {
  return F_ == other.F_ && m_ == other.m_ && n_ == other.n_ && canon_ == other.canon_;
}

Mat MatrixSpace::evaluation(const std::vector<fe>& x) const {
  Mat E(m_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    std::vector<fe> y = apply(F_, basis_[j], x);
    for (std::size_t i = 0; i < m_; ++i) E.at(i, j) = y[i];
  }
  return E;
}

namespace {

// Max rank over the nonzero elements, scanning projective coefficient
// vectors (rank is invariant under scaling).  Optionally stops early once
// `stop_at` is reached, and can fill an exact histogram over all q^d
// elements.
unsigned scan_max_rank(const MatrixSpace& S, unsigned stop_at,
                       std::map<unsigned, std::uint64_t>* histogram) {
  const Field& F = S.field();
  unsigned best = 0;
  if (histogram) (*histogram)[0] += 1;  // zero element
  ProjectiveEnum pe(F, S.dim());
  std::vector<fe> c;
  while (pe.next(c)) {
    unsigned r = rank(F, S.element(c));
    if (histogram) (*histogram)[r] += F.q() - 1;
    best = std::max(best, r);
    if (!histogram && best >= stop_at) break;
  }
  return best;
}

unsigned random_coeff_rank(const MatrixSpace& S, SplitMix64& rng) {
  std::vector<fe> c(S.dim());
  for (fe& v : c) v = rng.below(S.field().q());
  return rank(S.field(), S.element(c));
}

}  // namespace

RankInfo upper_rank(const MatrixSpace& S, std::uint64_t budget, std::uint64_t seed) {
  RankInfo info;
  const unsigned cap = static_cast<unsigned>(std::min(S.m(), S.n()));
  if (S.dim() == 0 || cap == 0) return info;
  auto total = checked_pow(S.field().q(), static_cast<unsigned>(S.dim()));
  if (total && *total <= budget) {
    info.value = scan_max_rank(S, cap, nullptr);
    return info;
  }
  // Generic evaluation over GF(q^e) with q^e > min(m,n): the generic matrix
  // attains the upper rank once the field has more than urk elements, and
  // repetition drives the miss probability to (cap/q^e)^trials.
  info.exact = false;
  info.method = "generic-extension";
  info.seed = seed;
  info.trials = 8;
  unsigned e = 1;
  {
    unsigned __int128 qe = S.field().q();
    while (qe <= cap) {
      qe *= S.field().q();
      ++e;
    }
  }
  info.ext_degree = e;
  SplitMix64 rng = substream(seed, 0x75726b);
  unsigned best = 0;
  if (e == 1) {
    for (unsigned t = 0; t < info.trials && best < cap; ++t)
      best = std::max(best, random_coeff_rank(S, rng));
    info.base_observed = best;
  } else {
    FieldExtension ext = extend_field(S.field(), e);
    std::vector<Mat> lifted;
    lifted.reserve(S.dim());
    for (const Mat& A : S.basis()) {
      Mat L(A.rows, A.cols);
      for (std::size_t t = 0; t < A.a.size(); ++t) L.a[t] = ext.embed(A.a[t]);
      lifted.push_back(std::move(L));
    }
    MatrixSpace big(ext.big, S.m(), S.n(), lifted);
    SplitMix64 rng2 = substream(seed, 0x75726c);
    for (unsigned t = 0; t < info.trials && best < cap; ++t)
      best = std::max(best, random_coeff_rank(big, rng2));
    // observed base-field maximum, for the q <= urk caveat
    unsigned base_best = 0;
    for (unsigned t = 0; t < info.trials && base_best < cap; ++t)
      base_best = std::max(base_best, random_coeff_rank(S, rng));
    info.base_observed = base_best;
  }
  info.value = best;
  return info;
}

bool upper_rank_at_least(const MatrixSpace& S, unsigned threshold, std::uint64_t budget,
                         std::uint64_t seed) {
  if (threshold == 0) return true;
  const unsigned cap = static_cast<unsigned>(std::min(S.m(), S.n()));
  if (S.dim() == 0 || threshold > cap) return false;
  const Field& F = S.field();
  // cheap randomized witness search first
  SplitMix64 rng = substream(seed, 0x61746c);
  for (unsigned t = 0; t < 24; ++t)
    if (random_coeff_rank(S, rng) >= threshold) return true;
  auto total = checked_pow(F.q(), static_cast<unsigned>(S.dim()));
  if (!total || *total > budget)
    fail(errc::budget_exceeded,
         "element scan needs " + (total ? std::to_string(*total) : std::string(">2^64")) +
             " items, budget " + std::to_string(budget));
  return scan_max_rank(S, threshold, nullptr) >= threshold;
}

RankInfo transitive_rank(const MatrixSpace& S, std::uint64_t budget, std::uint64_t seed) {
  RankInfo info;
  if (S.dim() == 0 || S.n() == 0) return info;
  const Field& F = S.field();
  const unsigned cap = static_cast<unsigned>(std::min(S.m(), S.dim()));
  auto total = checked_pow(F.q(), static_cast<unsigned>(S.n()));
  if (total && *total <= budget) {
    unsigned best = 0;
    ProjectiveEnum pe(F, S.n());
    std::vector<fe> x;
    while (pe.next(x) && best < cap) best = std::max(best, rank(F, S.evaluation(x)));
    info.value = best;
    return info;
  }
  info.exact = false;
  info.method = "sampled";
  info.seed = seed;
  info.trials = 64;
  SplitMix64 rng = substream(seed, 0x74726b);
  unsigned best = 0;
  std::vector<fe> x(S.n());
  for (unsigned t = 0; t < info.trials && best < cap; ++t) {
    for (fe& v : x) v = rng.below(F.q());
    best = std::max(best, rank(F, S.evaluation(x)));
  }
  info.value = best;
  return info;
}

std::pair<Subspace, Subspace> kernel_and_essential_range(const MatrixSpace& S) {
  const Field& F = S.field();
  if (S.dim() == 0) return {full_subspace(S.n()), zero_subspace(S.m())};
  Subspace ker = kernel(F, vstack(S.basis()));
  std::vector<Mat> cols;
  cols.reserve(S.dim());
  for (const Mat& A : S.basis()) cols.push_back(transpose(A));
  Subspace ess = row_space(F, vstack(cols));
  return {ker, ess};
}

Reduction reduce(const MatrixSpace& S) {
  const Field& F = S.field();
  auto [ker, ess] = kernel_and_essential_range(S);
  Mat section = complement_columns(ker);                 // n x n'
  Mat proj(ess.dim(), S.m());                            // picks V0 coordinates
  for (std::size_t i = 0; i < ess.dim(); ++i) proj.at(i, ess.pivots[i]) = 1;
  std::vector<Mat> reduced;
  reduced.reserve(S.dim());
  for (const Mat& A : S.basis()) reduced.push_back(mul(F, proj, mul(F, A, section)));
  MatrixSpace R(F, ess.dim(), S.n() - ker.dim(), reduced);
  if (R.dim() != S.dim()) fail(errc::invariant_violation, "reduction changed dim");
  return Reduction{std::move(R), std::move(proj), std::move(section)};
}

MatrixSpace dual_hat(const MatrixSpace& S) {
  const Field& F = S.field();
  std::vector<Mat> gens;
  gens.reserve(S.n());
  std::vector<fe> e(S.n(), 0);
  for (std::size_t i = 0; i < S.n(); ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = F.one();
    gens.push_back(S.evaluation(e));
  }
  return MatrixSpace(F, S.m(), S.dim(), gens);
}

MatrixSpace transpose_space(const MatrixSpace& S) {
  std::vector<Mat> gens;
  gens.reserve(S.dim());
  for (const Mat& A : S.basis()) gens.push_back(transpose(A));
  return MatrixSpace(S.field(), S.n(), S.m(), gens);
}

MatrixSpace apply_equivalence(const MatrixSpace& S, const Mat& P, const Mat& Q) {
  const Field& F = S.field();
  if (!is_invertible(F, P) || !is_invertible(F, Q))
    fail(errc::singular_transform, "equivalence transforms must be invertible");
  if (P.cols != S.m() || Q.rows != S.n()) fail(errc::shape_mismatch, "transform shapes");
  std::vector<Mat> gens;
  gens.reserve(S.dim());
  for (const Mat& A : S.basis()) gens.push_back(mul(F, P, mul(F, A, Q)));
  return MatrixSpace(F, S.m(), S.n(), gens);
}

bool Fingerprint::equals(const Fingerprint& o) const {
  if (m != o.m || n != o.n || d != o.d || urk != o.urk || trk != o.trk ||
      lld_index != o.lld_index || defect_index != o.defect_index || kernel_dim != o.kernel_dim ||
      essrange_dim != o.essrange_dim)
    return false;
  if (ranks.exact && o.ranks.exact && ranks.counts != o.ranks.counts) return false;
  return true;
}

std::string Fingerprint::brief() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) + "," +
         std::to_string(urk) + "," + std::to_string(trk) + "," + std::to_string(lld_index) + ")";
}

Fingerprint fingerprint(const MatrixSpace& S, std::uint64_t budget, std::uint64_t seed) {
  const Field& F = S.field();
  Fingerprint fp;
  fp.m = S.m();
  fp.n = S.n();
  fp.d = S.dim();

  RankInfo u = upper_rank(S, budget, seed);
  fp.urk = u.value;
  fp.urk_exact = u.exact;
  fp.defect_index = static_cast<unsigned>(S.n()) - std::min<unsigned>(u.value, S.n());

  // trk and the LLD index come from the same scan over x: the annihilator of
  // x has dim d - rank(evaluation(x)).
  if (S.n() == 0) {
    fp.trk = 0;
    fp.lld_index = static_cast<unsigned>(S.dim());
  } else {
    RankInfo t = transitive_rank(S, budget, seed);
    fp.trk = t.value;
    fp.trk_exact = t.exact;
    unsigned max_eval_rank = 0;
    auto total = checked_pow(F.q(), static_cast<unsigned>(S.n()));
    if (total && *total <= budget) {
      max_eval_rank = t.value;  // exhaustive scan already found the max over nonzero x
    } else {
      max_eval_rank = t.value;  // sampled; tagged by trk_exact=false
    }
    fp.lld_index = static_cast<unsigned>(S.dim()) - std::min<unsigned>(max_eval_rank, S.dim());
  }

  auto [ker, ess] = kernel_and_essential_range(S);
  fp.kernel_dim = static_cast<unsigned>(ker.dim());
  fp.essrange_dim = static_cast<unsigned>(ess.dim());

  auto total = checked_pow(F.q(), static_cast<unsigned>(S.dim()));
  if (S.dim() == 0) {
    fp.ranks.exact = true;
    fp.ranks.counts[0] = 1;
  } else if (total && *total <= budget) {
    fp.ranks.exact = true;
    scan_max_rank(S, 0, &fp.ranks.counts);
  } else {
    fp.ranks.exact = false;
    fp.ranks.samples = 1000;
    fp.ranks.seed = seed;
    SplitMix64 rng = substream(seed, 0x686973);
    std::vector<fe> c(S.dim());
    for (std::uint64_t t = 0; t < fp.ranks.samples; ++t) {
      for (fe& v : c) v = rng.below(F.q());
      fp.ranks.counts[rank(F, S.element(c))] += 1;
    }
  }
  return fp;
}

}  // namespace llds
