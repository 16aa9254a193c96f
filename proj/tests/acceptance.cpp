// Acceptance suite: one pass/fail line per criterion, exact checks only.
// Exits nonzero if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "llds/catalog.hpp"
#include "llds/cli.hpp"
#include "llds/lldstruct.hpp"
#include "llds/quadform.hpp"
#include "llds/rng.hpp"
#include "llds/spacefile.hpp"
#include "llds/verify.hpp"

using namespace llds;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs <= limit_seconds;
  if (!in_time) detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion-%02d %-34s %7.2fs%s%s\n", pass ? "PASS" : "FAIL", number,
              label.c_str(), secs, detail.empty() ? "" : " :: ", detail.c_str());
  std::fflush(stdout);
}

Mat random_alternating(const Field& F, std::size_t n, SplitMix64& rng) {
  Mat M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      fe v = rng.below(F.q());
      M.at(i, j) = v;
      M.at(j, i) = F.neg(v);
    }
  return M;
}

unsigned binom2(unsigned a) { return a < 2 ? 0u : a * (a - 1) / 2; }

bool all_pass(const std::vector<VerifyItem>& items, std::string& detail) {
  for (const VerifyItem& it : items)
    if (!it.pass) {
      detail += it.name + " (" + it.detail + ") ";
      return false;
    }
  return true;
}

}  // namespace

int main() {
  // 1. det M = Pf(M)^2, 1000 seeded random alternating 4x4 per field
  criterion(1, "pfaffian-identity", 1.0, [](std::string& detail) {
    for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {7, 1}, {2, 2}}) {
      Field F = Field::make(p, k);
      SplitMix64 rng = substream(2024, p * 8 + k);
      for (int t = 0; t < 1000; ++t) {
        Mat M = random_alternating(F, 4, rng);
        fe pf = pfaffian(F, M);
        if (det(F, M) != F.mul(pf, pf)) {
          detail = "mismatch over " + F.describe();
          return false;
        }
      }
    }
    return true;
  });

  // 2. Mata3 suite over GF(3) and GF(5)
  criterion(2, "mata3-suite", 1.0, [](std::string& detail) {
    for (std::uint64_t p : {3ull, 5ull}) {
      Field F = Field::make(p);
      MatrixSpace S = *build_entry("mat3-alt", F, {}).space;
      Fingerprint fp = fingerprint(S);
      if (fp.brief() != "(3,3,3,2,2,1)" || !fp.urk_exact || !fp.trk_exact) {
        detail = "fingerprint " + fp.brief() + " over " + F.describe();
        return false;
      }
      if (!minimal_clld(S, 1).minimal) {
        detail = "not minimal over " + F.describe();
        return false;
      }
      if (!semiprimitive(S).value || !primitive(S).value) {
        detail = "primitivity flags over " + F.describe();
        return false;
      }
      if (!fingerprint(dual_hat(S)).equals(fp)) {
        detail = "dual fingerprint differs over " + F.describe();
        return false;
      }
    }
    return true;
  });

  // 3. catalog expected records over GF(5) and GF(7)
  criterion(3, "catalog-claims", 30.0, [](std::string& detail) {
    for (std::uint64_t p : {5ull, 7ull}) {
      if (!all_pass(verify_catalog(Field::make(p)), detail)) return false;
    }
    return true;
  });

  // 4. duality involution and rank duality on every catalog entry over GF(5)
  criterion(4, "duality-involution", 30.0, [](std::string& detail) {
    return all_pass(verify_duality(Field::make(5)), detail);
  });

  // 5. Flanders-Atkinson on the r-reduced normalizations, q > r
  criterion(5, "flanders-atkinson", 30.0, [](std::string& detail) {
    for (std::uint64_t p : {5ull, 7ull}) {
      if (!all_pass(verify_flanders(Field::make(p)), detail)) return false;
    }
    return true;
  });

  // 6. exact column property: wedge(3), wedge(4) over GF(3); Mat_{2,2} fails
  criterion(6, "column-property-exact", 300.0, [](std::string& detail) {
    Field F = Field::make(3);
    if (!column_property(wedge_space(F, 3)).value) {
      detail = "wedge(3)";
      return false;
    }
    ColumnPropertyResult w4 = column_property(wedge_space(F, 4));
    if (!w4.value || w4.scanned < 56000) {
      detail = "wedge(4) scanned " + std::to_string(w4.scanned);
      return false;
    }
    std::vector<Mat> gens;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Mat E(2, 2);
        E.at(i, j) = 1;
        gens.push_back(E);
      }
    ColumnPropertyResult full = column_property(MatrixSpace(F, 2, 2, gens));
    if (full.value || !full.witness || full.witness->dim() != 0) {
      detail = "Mat_{2,2} witness";
      return false;
    }
    return true;
  });

  // 7. Atkinson-Lloyd bounds; wedge(5)/GF(7) attains m = 10 = C(5,2) at r = 4
  criterion(7, "atkinson-lloyd-bounds", 10.0, [](std::string& detail) {
    for (const CatalogEntry& e : buildable_entries(Field::make(5))) {
      if (!e.space) continue;
      RankInfo u = upper_rank(*e.space);
      if (e.space->m() > binom2(u.value + 1)) {
        detail = e.id;
        return false;
      }
    }
    Field f7 = Field::make(7);
    MatrixSpace w5 = wedge_space(f7, 5);
    RankInfo u = upper_rank(w5);
    if (w5.m() != 10 || u.value != 4 || w5.m() != binom2(u.value + 1)) {
      detail = "wedge(5) equality";
      return false;
    }
    return true;
  });

  // 8. 200 seeded incompressible subspaces with dim > 1 + C(n-2,2): trk = n-1
  criterion(8, "transitivity-samples", 60.0, [](std::string& detail) {
    Field F = Field::make(5);
    SplitMix64 rng = substream(88, 0);
    int done = 0;
    while (done < 200) {
      std::size_t n = (rng.below(2) == 0) ? 4 : 5;
      unsigned lower = 1 + binom2(static_cast<unsigned>(n) - 2);
      std::size_t full = n * (n - 1) / 2;
      std::size_t d = lower + 1 + rng.below(full - lower);
      std::vector<Mat> gens;
      for (std::size_t i = 0; i < d; ++i) gens.push_back(random_alternating(F, n, rng));
      AltSubspace V(F, n, gens);
      if (V.dim() <= lower) continue;
      if (!regularity_checks(V).incompressible) continue;
      AltTransitivity t = alt_transitivity(V);
      if (!t.trk.exact || t.trk.value != n - 1) {
        detail = "sample " + std::to_string(done);
        return false;
      }
      ++done;
    }
    return true;
  });

  // 9. constructive decompositions on wedge(4)/GF(5)
  criterion(9, "constructive-decompositions", 10.0, [](std::string& detail) {
    Field F = Field::make(5);
    MatrixSpace w4 = wedge_space(F, 4);
    RReduced rr = r_reduce_normalize(w4);
    ThinDecomposition td = thin_decomposition(rr.space, jr(6, 4, 3), {0, 0, 0, 1});
    if (td.p != 3 || !td.bound_holds ||
        6 != binom2(td.p + 1) + binom2(td.r - td.p + 1)) {
      detail = "thin: p=" + std::to_string(td.p);
      return false;
    }
    ColinearityResult col = colinearity_hypothesis(rr.space);
    if (!col.holds) {
      detail = "colinearity";
      return false;
    }
    CoreSplit cs = alternating_core_split(rr.space, col.alpha);
    if (cs.s != rr.space.m()) {
      detail = "core: s=" + std::to_string(cs.s);
      return false;
    }
    for (const Mat& G : cs.certificate)
      if (!is_alternating(F, G)) {
        detail = "certificate not alternating";
        return false;
      }
    if (!fingerprint(cs.transformed).equals(fingerprint(w4))) {
      detail = "fingerprint not preserved";
      return false;
    }
    return true;
  });

  // 10. quadratic classifier: table classes, orbit oracle, A1-A5 separation
  criterion(10, "quadratic-classifier", 120.0, [](std::string& detail) {
    Field F = Field::make(5);
    auto tag_of = [&](const char* id) {
      return classify_dim2(restrict_pfaffian(*build_entry(id, F, {}).alt)).tag();
    };
    if (tag_of("plane-D0") != "D0" || tag_of("plane-D1") != "D1" ||
        tag_of("plane-R") != "R(2)" || tag_of("plane-hyperbolic") != "R(1)") {
      detail = "plane tags";
      return false;
    }
    // exhaustive GL2 x scalar orbit oracle over all 125 coefficient triples
    std::map<std::vector<fe>, std::string> orbit_tag;
    for (fe a = 0; a < 5; ++a)
      for (fe c = 0; c < 5; ++c)
        for (fe b = 0; b < 5; ++b) {
          QuadForm q(F, 2);
          q.at(0, 0) = a;
          q.at(0, 1) = c;
          q.at(1, 1) = b;
          // orbit canonical representative by brute force
          std::vector<fe> best{a, c, b};
          for (fe lam = 1; lam < 5; ++lam)
            for (fe p00 = 0; p00 < 5; ++p00)
              for (fe p01 = 0; p01 < 5; ++p01)
                for (fe p10 = 0; p10 < 5; ++p10)
                  for (fe p11 = 0; p11 < 5; ++p11) {
                    if (F.sub(F.mul(p00, p11), F.mul(p01, p10)) == 0) continue;
                    Mat P(2, 2);
                    P.at(0, 0) = p00;
                    P.at(0, 1) = p01;
                    P.at(1, 0) = p10;
                    P.at(1, 1) = p11;
                    QuadForm t = q.transform(P, lam);
                    std::vector<fe> key{t.at(0, 0), t.at(0, 1), t.at(1, 1)};
                    if (key < best) best = key;
                  }
          std::string tag = classify_dim2(q).tag();
          auto it = orbit_tag.find(best);
          if (it == orbit_tag.end()) {
            for (const auto& [k, v] : orbit_tag)
              if (v == tag) {
                detail = "distinct orbits share tag " + tag;
                return false;
              }
            orbit_tag[best] = tag;
          } else if (it->second != tag) {
            detail = "orbit split by tags";
            return false;
          }
        }
    // A1 vs A2 by incompressibility; A3/A4/A5 by restricted rank
    std::vector<AltSubspace> as;
    for (const char* id : {"a1", "a2", "a3", "a4", "a5"})
      as.push_back(*build_entry(id, F, {}).alt);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        if (subspaces_congruent(as[i], as[j])) {
          detail = "a" + std::to_string(i + 1) + " ~ a" + std::to_string(j + 1);
          return false;
        }
    if (regularity_checks(as[0]).incompressible == regularity_checks(as[1]).incompressible) {
      detail = "a1/a2 incompressibility";
      return false;
    }
    for (unsigned i = 0; i < 3; ++i)
      if (classify_dim3(restrict_pfaffian(as[2 + i])).rank != i + 1) {
        detail = "a" + std::to_string(3 + i) + " rank";
        return false;
      }
    return true;
  });

  // 11. rank bound battery plus the seeded conjecture search
  criterion(11, "rank-bound-battery", 120.0, [](std::string& detail) {
    Field F = Field::make(5);
    if (!all_pass(verify_bounds(F), detail)) return false;
    // bounds on the sampled semi-primitive pipeline of criterion 8
    SplitMix64 rng = substream(88, 0);
    int done = 0;
    while (done < 200) {
      std::size_t n = (rng.below(2) == 0) ? 4 : 5;
      unsigned lower = 1 + binom2(static_cast<unsigned>(n) - 2);
      std::size_t full = n * (n - 1) / 2;
      std::size_t d = lower + 1 + rng.below(full - lower);
      std::vector<Mat> gens;
      for (std::size_t i = 0; i < d; ++i) gens.push_back(random_alternating(F, n, rng));
      AltSubspace V(F, n, gens);
      if (V.dim() <= lower) continue;
      if (!regularity_checks(V).incompressible) continue;
      ++done;
      MatrixSpace S = operator_space_from_alt(V);
      RankInfo u = upper_rank(S);
      if (F.q() <= u.value) continue;
      if (!semiprimitive(S).value) continue;
      unsigned r = u.value;
      unsigned trk = transitive_rank(S).value;
      if (trk > 1 + binom2(r) || trk > 3 + binom2(r - 1) ||
          trk > 6 + binom2(r >= 2 ? r - 2 : 0)) {
        detail = "sampled space violates a bound";
        return false;
      }
    }
    ConjectureSearch cs = search_conjecture(F, 3, 1000, 42);
    if (cs.violations != 0) {
      detail = "conjecture violations " + std::to_string(cs.violations);
      return false;
    }
    return true;
  });

  // 12. CLI determinism and byte-exact round trips
  criterion(12, "cli-determinism", 10.0, [](std::string& detail) {
    for (auto [p, k] :
         {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}, {7, 1}, {2, 2}}) {
      Field F = Field::make(p, k);
      for (const CatalogEntry& e : buildable_entries(F)) {
        std::string first = e.space ? emit_space_file(*e.space) : emit_space_file(*e.alt);
        SpaceFile parsed = parse_space_file(first);
        std::string second =
            parsed.is_alt ? emit_space_file(*parsed.alt) : emit_space_file(*parsed.space);
        if (first != second) {
          detail = "round trip " + e.id;
          return false;
        }
      }
    }
    for (std::vector<std::string> argv :
         {std::vector<std::string>{"catalog", "list"},
          {"verify", "bounds", "--field", "5", "--seed", "3"},
          {"search", "conjecture", "--r", "3", "--field", "5", "--trials", "60", "--seed", "9"}}) {
      std::ostringstream o1, e1, o2, e2;
      int c1 = dispatch(argv, o1, e1);
      int c2 = dispatch(argv, o2, e2);
      if (c1 != c2 || o1.str() != o2.str() || e1.str() != e2.str()) {
        detail = "nondeterministic report for " + argv[0];
        return false;
      }
    }
    return true;
  });

  if (failures == 0) std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
