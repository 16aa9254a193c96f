#include "llds/catalog.hpp"

#include <sstream>

namespace llds {

namespace {

// Wedge combination: sum of tagged A_{i,j} = E_{i,j} - E_{j,i} terms,
// 1-based indices, coefficient tag one of +1, -1, +delta, -delta.
struct WedgeTerm {
  int i, j;
  int tag;  // +1, -1, +2 => +delta, -2 => -delta
};
using WedgeCombo = std::vector<WedgeTerm>;

Mat wedge_combo(const Field& F, std::size_t n, const WedgeCombo& combo, fe delta) {
  Mat M(n, n);
  for (const WedgeTerm& t : combo) {
    fe c = F.one();
    if (t.tag == +2 || t.tag == -2) c = delta;
    if (t.tag < 0) c = F.neg(c);
    M.at(t.i - 1, t.j - 1) = F.add(M.at(t.i - 1, t.j - 1), c);
    M.at(t.j - 1, t.i - 1) = F.sub(M.at(t.j - 1, t.i - 1), c);
  }
  return M;
}

std::vector<Mat> wedge_combos(const Field& F, std::size_t n, const std::vector<WedgeCombo>& cs,
                              fe delta) {
  std::vector<Mat> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(wedge_combo(F, n, c, delta));
  return out;
}

}  // namespace

std::vector<Mat> expand_generic_rows(const Field& F, const std::vector<std::string>& rows,
                                     fe delta) {
  const std::size_t m = rows.size();
  std::size_t n = 0;
  {
    std::istringstream is(rows[0]);
    std::string tok;
    while (is >> tok) ++n;
  }
  std::vector<Mat> gens(4, Mat(m, n));
  for (std::size_t i = 0; i < m; ++i) {
    std::istringstream is(rows[i]);
    std::string tok;
    std::size_t j = 0;
    while (is >> tok) {
      if (j >= n) fail(errc::bad_params, "ragged generic matrix row");
      // grammar: term (('+'|'-') term)*, term = ['-'] ['D'] symbol | '0'
      std::size_t pos = 0;
      bool neg = false;
      bool pending = true;
      while (pos < tok.size()) {
        char ch = tok[pos];
        if (ch == '+') {
          neg = false;
          pending = true;
          ++pos;
          continue;
        }
        if (ch == '-') {
          neg = true;
          pending = true;
          ++pos;
          continue;
        }
        if (ch == '0') {
          ++pos;
          pending = false;
          continue;
        }
        fe coeff = F.one();
        if (ch == 'D') {
          coeff = delta;
          ++pos;
          if (pos >= tok.size()) fail(errc::bad_params, "dangling delta in " + tok);
          ch = tok[pos];
        }
        if (ch < 'a' || ch > 'd') fail(errc::bad_params, "bad symbol in " + tok);
        if (!pending) fail(errc::bad_params, "missing operator in " + tok);
        if (neg) coeff = F.neg(coeff);
        Mat& G = gens[static_cast<std::size_t>(ch - 'a')];
        G.at(i, j) = F.add(G.at(i, j), coeff);
        neg = false;
        pending = false;
        ++pos;
      }
      ++j;
    }
    if (j != n) fail(errc::bad_params, "ragged generic matrix row");
  }
  return gens;
}

namespace {

struct TableEntry {
  std::vector<std::string> rows;       // generic-matrix display
  std::vector<WedgeCombo> plane;       // P, when the entry names one
  std::vector<WedgeCombo> vphi;        // P-perp / defining subspace of Mata_4
  bool object_is_alt = false;          // a1..a5: the object is the alt subspace itself
};

// D tags: +2 = +delta, -2 = -delta
const WedgeCombo A12{{1, 2, 1}};
const WedgeCombo A13{{1, 3, 1}};
const WedgeCombo A14{{1, 4, 1}};
const WedgeCombo A23{{2, 3, 1}};
const WedgeCombo A24{{2, 4, 1}};
const WedgeCombo A34{{3, 4, 1}};

TableEntry table_for(const std::string& id, bool char2) {
  TableEntry t;
  if (id == "sixdim") {
    t.rows = {"-b a 0 0", "-c 0 a 0", "-d 0 0 a", "0 -c b 0", "0 -d 0 b", "0 0 -d c"};
    t.vphi = {A12, A13, A14, A23, A24, A34};
  } else if (id == "fivedim-i") {
    t.rows = {"-b a 0 0", "-c 0 a 0", "-d 0 0 a", "0 -c b 0", "0 -d 0 b"};
    t.plane = {A34};
    t.vphi = {A12, A13, A14, A23, A24};
  } else if (id == "fivedim-ii") {
    t.rows = {"-b a -d c", "-c 0 a 0", "-d 0 0 a", "0 -c b 0", "0 -d 0 b"};
    t.plane = {{{1, 2, 1}, {3, 4, -1}}};
    t.vphi = {{{1, 2, 1}, {3, 4, 1}}, A13, A14, A23, A24};
  } else if (id == "plane-D0") {
    t.rows = {"-b a 0 0", "-c 0 a 0", "-d 0 0 a", "0 -c b 0"};
    t.plane = {A24, A34};
    t.vphi = {A12, A13, A14, A23};
  } else if (id == "plane-D1") {
    t.rows = {"-b a d -c", "-c 0 a 0", "0 -c b 0", "0 -d 0 b"};
    t.plane = {{{1, 2, 1}, {3, 4, 1}}, A14};
    t.vphi = {{{1, 2, 1}, {3, 4, -1}}, A13, A23, A24};
  } else if (id == "plane-R" && !char2) {
    t.rows = {"-b a d -c", "-c 0 a 0", "-d Dc -Db a", "0 -d 0 b"};
    t.plane = {{{1, 2, 1}, {3, 4, 1}}, {{2, 3, 1}, {1, 4, 2}}};
    t.vphi = {{{1, 2, 1}, {3, 4, -1}}, A13, {{1, 4, 1}, {2, 3, -2}}, A24};
  } else if (id == "plane-R" && char2) {
    t.rows = {"b+c a a 0", "Db d+Da 0 b", "d c b a", "d 0 d a+c"};
    t.plane = {{{1, 4, 1}, {2, 3, 1}, {3, 4, 1}}, {{1, 3, 1}, {2, 4, 2}, {1, 2, 1}}};
    t.vphi = {{{1, 2, 1}, {1, 3, 1}}, {{1, 2, 2}, {2, 4, 1}},
              {{1, 4, 1}, {2, 3, 1}}, {{1, 4, 1}, {3, 4, 1}}};
  } else if (id == "plane-hyperbolic") {
    t.rows = {"-b a 0 0", "-c 0 a 0", "0 -d 0 b", "0 0 -d c"};
    t.plane = {A14, A23};
    t.vphi = {A12, A13, A24, A34};
  } else if (id == "lld4-D1") {
    t.rows = {"0 a b 0", "-a 0 c d", "-b -c 0 -a", "0 -d a 0"};
    t.vphi = {{{1, 2, 1}, {3, 4, -1}}, A13, A23, A24};
  } else if (id == "lld4-R" && !char2) {
    t.rows = {"0 a b c", "-a 0 -Dc d", "-b Dc 0 -a", "-c -d a 0"};
    t.vphi = {{{1, 2, 1}, {3, 4, -1}}, A13, {{1, 4, 1}, {2, 3, -2}}, A24};
  } else if (id == "lld4-R" && char2) {
    t.rows = {"0 a+Db a c+d", "a+Db 0 c b", "a c 0 d", "c+d b d 0"};
    t.vphi = {{{1, 2, 1}, {1, 3, 1}}, {{1, 2, 2}, {2, 4, 1}},
              {{1, 4, 1}, {2, 3, 1}}, {{1, 4, 1}, {3, 4, 1}}};
  } else if (id == "a1") {
    t.rows = {"0 a b c", "-a 0 0 0", "-b 0 0 0", "-c 0 0 0"};
    t.vphi = {A12, A13, A14};
    t.object_is_alt = true;
  } else if (id == "a2") {
    t.rows = {"0 0 0 0", "0 0 a b", "0 -a 0 c", "0 -b -c 0"};
    t.vphi = {A23, A24, A34};
    t.object_is_alt = true;
  } else if (id == "a3") {
    t.rows = {"0 a b c", "-a 0 c 0", "-b -c 0 0", "-c 0 0 0"};
    t.vphi = {A12, A13, {{1, 4, 1}, {2, 3, 1}}};
    t.object_is_alt = true;
  } else if (id == "a4") {
    t.rows = {"0 a b 0", "-a 0 0 c", "-b 0 0 0", "0 -c 0 0"};
    t.vphi = {A12, A13, A24};
    t.object_is_alt = true;
  } else if (id == "a5") {
    t.rows = {"0 a b 0", "-a 0 0 c", "-b 0 0 a", "0 -c -a 0"};
    t.vphi = {{{1, 2, 1}, {3, 4, 1}}, A13, A24};
    t.object_is_alt = true;
  } else {
    fail(errc::unknown_id, id);
  }
  return t;
}

ExpectedRecord alt_kind_record(unsigned m, const std::string& tag, bool prim) {
  ExpectedRecord e;
  e.m = m;
  e.n = 4;
  e.d = 4;
  e.urk = 3;
  e.trk = 3;
  e.lld_index = 1;
  e.semiprimitive = true;
  e.primitive = prim;
  e.minimal = true;  // an alternating-kind space is equivalent to its dual
  e.class_tag = tag;
  return e;
}

}  // namespace

std::vector<EntryDescriptor> list_entries() {
  return {
      {"wedge", "standard pairing x^y on K^n, shape C(n,2) x n", false, true, false},
      {"mat3-alt", "Mata_3(K): the upper-rank-2 primitive space", false, false, false},
      {"sixdim", "6x4 space of the full Mata_4 (wedge on K^4)", false, false, false},
      {"fivedim-i", "5x4 space orthogonal to a rank-2 line", false, false, false},
      {"fivedim-ii", "5x4 space orthogonal to a rank-4 line", false, false, false},
      {"plane-D0", "4x4 semi-primitive space, isotropic plane, non-primitive", false, false,
       false},
      {"plane-D1", "4x4 primitive space, rank-1 pfaffian plane", false, false, false},
      {"plane-R", "4x4 primitive space, regular pfaffian plane R(delta)", true, false, false},
      {"plane-D2", "regular-degenerate plane class, vacuous over finite fields", true, false,
       true},
      {"plane-hyperbolic", "4x4 primitive space, hyperbolic plane", false, false, false},
      {"lld4-D1", "4-dim minimal LLD space of alternating matrices, type D1", false, false,
       false},
      {"lld4-R", "4-dim minimal LLD space of alternating matrices, type R(delta)", true, false,
       false},
      {"lld4-D2", "minimal LLD class D2(t), vacuous over finite fields", true, false, true},
      {"a1", "lagrangian x^U, incompressible", false, false, false},
      {"a2", "lagrangian Mata_3 corner, compressible", false, false, false},
      {"a3", "3-dim subspace with pfaffian restriction of rank 1", false, false, false},
      {"a4", "3-dim subspace with pfaffian restriction of rank 2", false, false, false},
      {"a5", "3-dim subspace with pfaffian restriction of rank 3", false, false, false},
      {"k-vee-mata3", "K v Mata_3(K): 7-dim ambient of the non-primitive case", false, false,
       false},
  };
}

CatalogEntry build_entry(const std::string& id, const Field& F, const EntryParams& params) {
  CatalogEntry entry;
  entry.id = id;
  entry.field = F;

  auto pick_delta = [&](bool required) -> fe {
    if (params.delta) {
      fe dlt = *params.delta;
      if (F.char2()) {
        if (F.arf_class(dlt) != Field::Arf::nontrivial)
          fail(errc::bad_params, "delta must have nontrivial Arf class");
      } else if (F.is_square(dlt)) {
        fail(errc::bad_params, "delta must be a non-square");
      }
      return dlt;
    }
    if (!required) return 0;
    if (F.char2()) {
      for (fe t = 1; t < F.q(); ++t)
        if (F.arf_class(t) == Field::Arf::nontrivial) return t;
      fail(errc::invariant_violation, "no nontrivial Arf class");
    }
    return F.least_nonsquare();
  };

  if (id == "wedge") {
    std::uint64_t n = params.n.value_or(4);
    if (n < 2) fail(errc::bad_params, "wedge needs n >= 2");
    entry.space = wedge_space(F, n);
    ExpectedRecord e;
    e.m = static_cast<unsigned>(n * (n - 1) / 2);
    e.n = static_cast<unsigned>(n);
    e.d = static_cast<unsigned>(n);
    e.urk = static_cast<unsigned>(n - 1);
    e.trk = e.urk;
    e.lld_index = 1;
    e.semiprimitive = true;
    e.primitive = n >= 3;
    e.minimal = true;
    e.class_tag = "wedge";
    entry.expected = e;
    return entry;
  }
  if (id == "mat3-alt") {
    std::vector<Mat> gens;
    for (int i = 1; i <= 2; ++i)
      for (int j = i + 1; j <= 3; ++j) gens.push_back(wedge_combo(F, 3, {{i, j, 1}}, 0));
    entry.space = MatrixSpace(F, 3, 3, gens);
    ExpectedRecord e;
    e.m = e.n = e.d = 3;
    e.urk = e.trk = 2;
    e.lld_index = 1;
    e.semiprimitive = true;
    e.primitive = true;
    e.minimal = true;
    e.class_tag = "mat3";
    entry.expected = e;
    return entry;
  }
  if (id == "k-vee-mata3") {
    std::vector<Mat> gens;
    for (int j = 0; j < 4; ++j) {
      Mat M(4, 4);
      M.at(0, j) = F.one();
      gens.push_back(std::move(M));
    }
    for (int i = 2; i <= 3; ++i)
      for (int j = i + 1; j <= 4; ++j) gens.push_back(wedge_combo(F, 4, {{i, j, 1}}, 0));
    entry.space = MatrixSpace(F, 4, 4, gens);
    ExpectedRecord e;
    e.m = e.n = 4;
    e.d = 7;
    e.urk = 3;
    e.trk = 3;
    e.lld_index = 4;
    e.semiprimitive = true;
    e.primitive = false;
    e.class_tag = "k-vee-mata3";
    entry.expected = e;
    return entry;
  }
  if (id == "plane-D2" || id == "lld4-D2") {
    if (!F.char2()) fail(errc::bad_params, "D2 classes require characteristic 2");
    fail(errc::vacuous_class,
         "D2(t) needs t outside K^[2]; no element of K\\K^[2] exists over a finite field");
  }

  const bool needs_delta = id == "plane-R" || id == "lld4-R";
  entry.delta = pick_delta(needs_delta);
  TableEntry tab = table_for(id, F.char2());
  entry.generic_rows = tab.rows;

  if (tab.object_is_alt) {
    entry.alt = AltSubspace(F, 4, wedge_combos(F, 4, tab.vphi, entry.delta));
    ExpectedRecord e;
    e.m = 4;  // ambient
    e.n = 4;
    e.d = 3;
    e.class_tag = id == "a1"   ? "lagrangian-incompressible"
                  : id == "a2" ? "lagrangian-compressible"
                  : id == "a3" ? "pf-rank-1"
                  : id == "a4" ? "pf-rank-2"
                               : "pf-rank-3";
    entry.expected = e;
    return entry;
  }

  if (id.rfind("lld4-", 0) == 0) {
    std::vector<Mat> gens = wedge_combos(F, 4, tab.vphi, entry.delta);
    entry.space = MatrixSpace(F, 4, 4, gens);
    entry.alt = AltSubspace(F, 4, gens);
    ExpectedRecord e;
    e.m = e.n = e.d = 4;
    e.urk = 4;
    e.trk = 3;
    e.lld_index = 1;
    e.semiprimitive = false;  // not defective, so condition (i) cannot hold
    e.primitive = false;
    e.minimal = true;
    e.class_tag = id;
    entry.expected = e;
    return entry;
  }

  // alternating-kind operator spaces from V_phi = P-perp, rows in table order
  std::vector<Mat> vphi_list = wedge_combos(F, 4, tab.vphi, entry.delta);
  entry.space = operator_space_from_generators(F, 4, vphi_list);
  AltSubspace vphi(F, 4, vphi_list);
  if (!tab.plane.empty()) entry.alt = AltSubspace(F, 4, wedge_combos(F, 4, tab.plane, entry.delta));
  bool prim = id != "plane-D0";
  entry.expected = alt_kind_record(static_cast<unsigned>(vphi.dim()),
                                   id == "plane-R" ? "R(" + std::to_string(entry.delta) + ")" : id,
                                   prim);
  return entry;
}

}  // namespace llds
