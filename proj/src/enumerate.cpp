#include "llds/enumerate.hpp"

namespace llds {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::optional<u64> checked_pow(u64 q, unsigned n) {
  u128 r = 1;
  for (unsigned i = 0; i < n; ++i) {
    r *= q;
    if (r > UINT64_MAX) return std::nullopt;
  }
  return static_cast<u64>(r);
}

std::optional<u64> projective_count(u64 q, unsigned n) {
  auto qn = checked_pow(q, n);
  if (!qn) return std::nullopt;
  return (*qn - 1) / (q - 1);
}

std::optional<u64> gaussian_binomial(u64 q, unsigned n, unsigned d) {
  if (d > n) return 0;
  // G(n,d) = G(n-1,d-1) + q^d G(n-1,d); overflow-checked DP
  std::vector<std::vector<u128>> g(n + 1, std::vector<u128>(d + 1, 0));
  for (unsigned i = 0; i <= n; ++i) g[i][0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= d && j <= i; ++j) {
      u128 qd = 1;
      for (unsigned t = 0; t < j; ++t) {
        qd *= q;
        if (qd > UINT64_MAX) return std::nullopt;
      }
      u128 v = g[i - 1][j - 1] + qd * g[i - 1][j];
      if (v > UINT64_MAX) return std::nullopt;
      g[i][j] = v;
    }
  }
  return static_cast<u64>(g[n][d]);
}

std::optional<u64> subspace_count_all(u64 q, unsigned n) {
  u128 total = 0;
  for (unsigned d = 0; d <= n; ++d) {
    auto g = gaussian_binomial(q, n, d);
    if (!g) return std::nullopt;
    total += *g;
    if (total > UINT64_MAX) return std::nullopt;
  }
  return static_cast<u64>(total);
}

VectorEnum::VectorEnum(const Field& F, std::size_t n) : F_(&F), n_(n), cur_(n, 0) {}

void VectorEnum::reset() {
  std::fill(cur_.begin(), cur_.end(), 0);
  done_ = false;
  first_ = true;
}

void VectorEnum::seek(std::uint64_t ordinal) {
  reset();
  for (std::size_t i = n_; i-- > 0;) {
    cur_[i] = ordinal % F_->q();
    ordinal /= F_->q();
  }
  done_ = ordinal != 0;  // past the end
}

bool VectorEnum::next(std::vector<fe>& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    out = cur_;
    return true;
  }
  // increment with the last coordinate as the fastest digit
  std::size_t i = n_;
  while (i > 0) {
    --i;
    if (cur_[i] + 1 < F_->q()) {
      ++cur_[i];
      std::fill(cur_.begin() + i + 1, cur_.end(), 0);
      out = cur_;
      return true;
    }
  }
  done_ = true;
  return false;
}

ProjectiveEnum::ProjectiveEnum(const Field& F, std::size_t n)
    : F_(&F), n_(n), lead_(n), tail_(F, 0) {
  reset();
}

void ProjectiveEnum::reset() {
  done_ = n_ == 0;
  if (!done_) {
    lead_ = n_ - 1;
    tail_ = VectorEnum(*F_, n_ - 1 - lead_);
  }
}

bool ProjectiveEnum::next(std::vector<fe>& out) {
  while (!done_) {
    std::vector<fe> t;
    if (tail_.next(t)) {
      out.assign(n_, 0);
      out[lead_] = F_->one();
      for (std::size_t j = 0; j < t.size(); ++j) out[lead_ + 1 + j] = t[j];
      return true;
    }
    if (lead_ == 0) {
      done_ = true;
      return false;
    }
    --lead_;
    tail_ = VectorEnum(*F_, n_ - 1 - lead_);
  }
  return false;
}

SubspaceEnum::SubspaceEnum(const Field& F, std::size_t n, std::size_t d)
    : F_(&F), n_(n), d_(d) {
  reset();
}

void SubspaceEnum::reset() {
  done_ = d_ > n_;
  fresh_pattern_ = true;
  pivots_.clear();
  for (std::size_t i = 0; i < d_; ++i) pivots_.push_back(static_cast<unsigned>(i));
  if (!done_) compute_free_slots();
}

void SubspaceEnum::compute_free_slots() {
  free_slots_.clear();
  std::vector<bool> is_pivot(n_, false);
  for (unsigned c : pivots_) is_pivot[c] = true;
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = pivots_[i] + 1; j < n_; ++j)
      if (!is_pivot[j]) free_slots_.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j)});
  free_vals_.assign(free_slots_.size(), 0);
}

bool SubspaceEnum::next(Subspace& out) {
  if (done_) return false;
  if (d_ == 0) {
    out = zero_subspace(n_);
    done_ = true;
    return true;
  }
  if (!fresh_pattern_) {
    // advance the free-entry counter (last slot fastest)
    std::size_t i = free_vals_.size();
    bool carried = true;
    while (i > 0) {
      --i;
      if (free_vals_[i] + 1 < F_->q()) {
        ++free_vals_[i];
        std::fill(free_vals_.begin() + i + 1, free_vals_.end(), 0);
        carried = false;
        break;
      }
    }
    if (carried) {
      // next pivot pattern in lexicographic order
      std::size_t i2 = d_;
      bool moved = false;
      while (i2 > 0) {
        --i2;
        unsigned limit = static_cast<unsigned>(n_ - d_ + i2);
        if (pivots_[i2] < limit) {
          ++pivots_[i2];
          for (std::size_t j = i2 + 1; j < d_; ++j) pivots_[j] = pivots_[j - 1] + 1;
          moved = true;
          break;
        }
      }
      if (!moved) {
        done_ = true;
        return false;
      }
      compute_free_slots();
    }
  }
  fresh_pattern_ = false;
  out.ambient = n_;
  out.basis = Mat(d_, n_);
  out.pivots = pivots_;
  for (std::size_t i = 0; i < d_; ++i) out.basis.at(i, pivots_[i]) = 1;
  for (std::size_t t = 0; t < free_slots_.size(); ++t)
    out.basis.at(free_slots_[t].first, free_slots_[t].second) = free_vals_[t];
  return true;
}

}  // namespace llds
