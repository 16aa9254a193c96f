#pragma once

#include <string>
#include <vector>

#include "llds/catalog.hpp"
#include "llds/lldstruct.hpp"
#include "llds/quadform.hpp"

namespace llds {

struct VerifyItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Entries of the catalog that build over F (vacuous classes and wrong
// characteristics skipped), with wedge at its default n = 4.
std::vector<CatalogEntry> buildable_entries(const Field& F);

// Expected records: fingerprints, semi-primitivity, primitivity, minimality.
std::vector<VerifyItem> verify_catalog(const Field& F, std::uint64_t budget = kDefaultBudget,
                                       std::uint64_t seed = kDefaultSeed);
// trk S = urk S^, urk S = trk S^, and fingerprint(S^^) = fingerprint(reduce S).
std::vector<VerifyItem> verify_duality(const Field& F, std::uint64_t budget = kDefaultBudget,
                                       std::uint64_t seed = kDefaultSeed);
// Flanders-Atkinson identities on the r-reduced normalizations.
std::vector<VerifyItem> verify_flanders(const Field& F, std::uint64_t budget = kDefaultBudget,
                                        std::uint64_t seed = kDefaultSeed);
// Atkinson-Lloyd essential-range bounds and the transitive-rank bounds.
std::vector<VerifyItem> verify_bounds(const Field& F, std::uint64_t budget = kDefaultBudget,
                                      std::uint64_t seed = kDefaultSeed);

struct ConjectureSearch {
  unsigned trials = 0;
  unsigned incompressible = 0;
  unsigned semiprimitive = 0;
  unsigned violations = 0;
  std::vector<std::string> violation_details;
};
// Samples subspaces of Mata_{r+1}(F), keeps the incompressible ones, builds
// their operator spaces, filters the semi-primitive ones and tests
// trk <= floor((urk+1)^2/4).
ConjectureSearch search_conjecture(const Field& F, unsigned r, unsigned trials,
                                   std::uint64_t seed, std::uint64_t budget = kDefaultBudget);

}  // namespace llds
