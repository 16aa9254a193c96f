#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "llds/mat.hpp"

namespace llds {

// q^n, nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, unsigned n);
// Number of points of P(K^n): (q^n - 1) / (q - 1).
std::optional<std::uint64_t> projective_count(std::uint64_t q, unsigned n);
// Gaussian binomial [n choose d]_q: number of d-dim subspaces of K^n.
std::optional<std::uint64_t> gaussian_binomial(std::uint64_t q, unsigned n, unsigned d);
// Total number of subspaces of K^n of every dimension 0..n.
std::optional<std::uint64_t> subspace_count_all(std::uint64_t q, unsigned n);

// All vectors of K^n in base-q counting order: the first coordinate is the
// most significant digit, element values ordered by their ordinals.
// Single-consumer; sharded scans re-create one per shard with an offset.
class VectorEnum {
public:
  VectorEnum(const Field& F, std::size_t n);
  bool next(std::vector<fe>& out);
  void reset();
  // Positions the iterator at the given ordinal (0-based counting order).
  void seek(std::uint64_t ordinal);

private:
  const Field* F_;
  std::size_t n_;
  std::vector<fe> cur_;
  bool done_ = false, first_ = true;
};

// Projective representatives: first nonzero coordinate equal to 1, emitted in
// the base-q counting order of the full vector enumeration.
class ProjectiveEnum {
public:
  ProjectiveEnum(const Field& F, std::size_t n);
  bool next(std::vector<fe>& out);
  void reset();

private:
  const Field* F_;
  std::size_t n_;
  std::size_t lead_;  // counts down from n-1
  VectorEnum tail_;
  bool done_ = false;
};

// All d-dimensional subspaces of K^n, each exactly once, as canonical RREF
// bases.  Pivot patterns run in lexicographic order; for a fixed pattern the
// free entries run in base-q counting order (row-major, first slot most
// significant).
class SubspaceEnum {
public:
  SubspaceEnum(const Field& F, std::size_t n, std::size_t d);
  bool next(Subspace& out);
  void reset();

private:
  void compute_free_slots();
  const Field* F_;
  std::size_t n_, d_;
  std::vector<unsigned> pivots_;
  std::vector<std::pair<unsigned, unsigned>> free_slots_;
  std::vector<fe> free_vals_;
  bool done_ = false, fresh_pattern_ = true;
};

}  // namespace llds
