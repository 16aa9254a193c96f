#include "llds/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "llds/catalog.hpp"
#include "llds/lldstruct.hpp"
#include "llds/quadform.hpp"
#include "llds/report.hpp"
#include "llds/spacefile.hpp"
#include "llds/verify.hpp"

namespace llds {

namespace {

constexpr const char* kUsage =
    "usage: llds <command> ...\n"
    "  analyze <file>\n"
    "  check {lld|minimal|semiprimitive|primitive|column|flanders} <file>\n"
    "        [--c C] [--r R] [--budget B] [--seed S] [--trials T]\n"
    "  dual <file> -o <out>\n"
    "  reduce <file> -o <out>\n"
    "  split {thin|core|onedim} <file> [--x CSV] [--elem CSV] -o <out>\n"
    "  quadclass <file>\n"
    "  catalog list\n"
    "  catalog emit <id> --field P [--ext K] [--delta D] [--n N] -o <out>\n"
    "  verify {catalog|duality|flanders|bounds|all} [--field P] [--ext K]\n"
    "  search conjecture --r R --field Q --trials N --seed S\n"
    "common flags: --budget B (default 1000000), --seed S (default 1), --json\n";

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;
  bool json = false;
};

Args parse_args(const std::vector<std::string>& argv) {
  Args a;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    const std::string& s = argv[i];
    if (s == "--json") {
      a.json = true;
    } else if (s.rfind("--", 0) == 0) {
      if (i + 1 >= argv.size()) fail(errc::usage_error, "flag " + s + " needs a value");
      a.flags[s.substr(2)] = argv[++i];
    } else if (s == "-o") {
      if (i + 1 >= argv.size()) fail(errc::usage_error, "-o needs a path");
      a.flags["out"] = argv[++i];
    } else {
      a.positional.push_back(s);
    }
  }
  return a;
}

std::uint64_t flag_u64(const Args& a, const std::string& key, std::uint64_t dflt) {
  auto it = a.flags.find(key);
  if (it == a.flags.end()) return dflt;
  if (it->second.empty() || it->second.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::usage_error, "--" + key + " wants an integer");
  return std::stoull(it->second);
}

std::string require_out(const Args& a) {
  auto it = a.flags.find("out");
  if (it == a.flags.end()) fail(errc::usage_error, "missing -o <out>");
  return it->second;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::syntax_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::syntax_error, "cannot write " + path);
  out << data;
}

std::vector<fe> parse_csv_vector(const Field& F, const std::string& csv) {
  std::vector<fe> out;
  std::string part;
  std::istringstream is(csv);
  while (std::getline(is, part, ',')) {
    if (F.prime_field()) {
      out.push_back(std::stoull(part) % F.p());
    } else {
      std::vector<std::uint64_t> cs;
      std::string c;
      std::istringstream ps(part);
      while (std::getline(ps, c, ':')) cs.push_back(std::stoull(c));
      out.push_back(F.from_coeffs(cs));
    }
  }
  return out;
}

std::string join_vec(const Field& F, const std::vector<fe>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    if (F.prime_field()) {
      out += std::to_string(v[i]);
    } else {
      auto cs = F.coeffs(v[i]);
      for (std::size_t t = 0; t < cs.size(); ++t) {
        if (t) out += ':';
        out += std::to_string(cs[t]);
      }
    }
  }
  return out;
}

std::string dist_str(const RankDistribution& rd) {
  std::string out;
  for (const auto& [r, c] : rd.counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(r) + ":" + std::to_string(c);
  }
  return out;
}

void put_rank(Report& rep, const std::string& prefix, const RankInfo& ri) {
  rep.put(prefix, ri.value);
  rep.put(prefix + "-method", ri.method);
  if (!ri.exact) {
    rep.put(prefix + "-trials", ri.trials);
    rep.put(prefix + "-seed", ri.seed);
    rep.put(prefix + "-ext-degree", ri.ext_degree);
  }
}

Field field_from_flags(const Args& a) {
  std::uint64_t p = flag_u64(a, "field", 5);
  unsigned k = static_cast<unsigned>(flag_u64(a, "ext", 1));
  return Field::make(p, k);
}

MatrixSpace need_space(const SpaceFile& sf) {
  if (!sf.space) fail(errc::usage_error, "this command wants a 'space' file, not 'alt'");
  return *sf.space;
}

int finish(Report& rep, const Args& a, std::ostream& out, bool pass) {
  out << (a.json ? rep.json() : rep.tsv());
  return pass ? 0 : 1;
}

// auto-scan witnesses for the thin/core splits
std::pair<Mat, std::vector<fe>> find_rank_witness(const MatrixSpace& S, unsigned r,
                                                  std::uint64_t budget) {
  ProjectiveEnum pe(S.field(), S.dim());
  std::vector<fe> c;
  std::uint64_t used = 0;
  while (pe.next(c)) {
    if (++used > budget) break;
    Mat M = S.element(c);
    if (rank(S.field(), M) == r) {
      Subspace kerm = kernel(S.field(), M);
      std::vector<fe> x(S.n());
      for (std::size_t j = 0; j < S.n(); ++j) x[j] = kerm.basis.at(0, j);
      return {std::move(M), std::move(x)};
    }
  }
  fail(errc::budget_exceeded, "no maximal-rank element found within budget");
}

int run_analyze(const Args& a, std::ostream& out) {
  std::string text = slurp(a.positional[1]);
  SpaceFile sf = parse_space_file(text);
  std::uint64_t budget = flag_u64(a, "budget", kDefaultBudget);
  std::uint64_t seed = flag_u64(a, "seed", kDefaultSeed);
  Report rep;
  rep.put("command", "analyze");
  rep.put("input", a.positional[1]);
  rep.put("input-digest", hex64(fnv1a64(text)));
  rep.put("field", sf.field.describe());
  rep.put("budget", budget);
  rep.put("seed", seed);
  MatrixSpace S = sf.is_alt ? MatrixSpace(sf.field, sf.alt->n(), sf.alt->n(), sf.alt->basis())
                            : *sf.space;
  Fingerprint fp = fingerprint(S, budget, seed);
  rep.put("m", fp.m);
  rep.put("n", fp.n);
  rep.put("d", fp.d);
  rep.put("kernel-dim", fp.kernel_dim);
  rep.put("essrange-dim", fp.essrange_dim);
  put_rank(rep, "urk", upper_rank(S, budget, seed));
  rep.put_bool("urk-exact", fp.urk_exact);
  put_rank(rep, "trk", transitive_rank(S, budget, seed));
  rep.put_bool("trk-exact", fp.trk_exact);
  rep.put("lld-index", fp.lld_index);
  rep.put("defect-index", fp.defect_index);
  rep.put("fingerprint", fp.brief());
  rep.put("rank-dist", dist_str(fp.ranks));
  rep.put_bool("rank-dist-exact", fp.ranks.exact);
  if (!fp.ranks.exact) {
    rep.put("rank-dist-samples", fp.ranks.samples);
    rep.put("rank-dist-seed", fp.ranks.seed);
  }
  return finish(rep, a, out, true);
}

int run_check(const Args& a, std::ostream& out) {
  if (a.positional.size() < 3) fail(errc::usage_error, "check wants a mode and a file");
  const std::string& mode = a.positional[1];
  std::string text = slurp(a.positional[2]);
  SpaceFile sf = parse_space_file(text);
  MatrixSpace S = sf.is_alt ? MatrixSpace(sf.field, sf.alt->n(), sf.alt->n(), sf.alt->basis())
                            : *sf.space;
  std::uint64_t budget = flag_u64(a, "budget", kDefaultBudget);
  std::uint64_t seed = flag_u64(a, "seed", kDefaultSeed);
  Report rep;
  rep.put("command", "check " + mode);
  rep.put("input", a.positional[2]);
  rep.put("input-digest", hex64(fnv1a64(text)));
  rep.put("budget", budget);
  bool pass = false;
  if (mode == "lld") {
    unsigned c = static_cast<unsigned>(flag_u64(a, "c", 1));
    IndexInfo info = indices(S, budget, seed);
    rep.put("c", c);
    rep.put("lld-index", info.lld_index);
    rep.put("defect-index", info.defect_index);
    rep.put("method", info.method);
    rep.put_bool("exact", info.exact);
    pass = info.lld_index >= c;
  } else if (mode == "minimal") {
    unsigned c = static_cast<unsigned>(flag_u64(a, "c", 1));
    MinimalityResult mr = minimal_clld(S, c, budget);
    rep.put("c", c);
    pass = mr.minimal;
    if (mr.witness) rep.put("witness-hyperplane-dim", mr.witness->dim());
  } else if (mode == "semiprimitive" || mode == "primitive") {
    PrimitivityResult pr = mode == "primitive" ? primitive(S, budget, seed)
                                               : semiprimitive(S, budget, seed);
    pass = pr.value;
    rep.put_bool("hypothesis-met", pr.hypothesis_met);
    if (!pr.value) {
      rep.put("reason", pr.reason);
      if (pr.witness) rep.put("witness", join_vec(sf.field, *pr.witness));
    }
  } else if (mode == "column") {
    ColumnPropertyMode cm = ColumnPropertyMode::exact_mode();
    if (a.flags.count("trials"))
      cm = ColumnPropertyMode::randomized(static_cast<unsigned>(flag_u64(a, "trials", 64)), seed);
    ColumnPropertyResult cr = column_property(S, cm, budget);
    pass = cr.value;
    rep.put_bool("exact", cr.exact);
    rep.put("scanned", cr.scanned);
    if (!cr.exact) {
      rep.put("trials", cm.trials);
      rep.put("seed", seed);
    }
    if (cr.witness) {
      rep.put("witness-dim", cr.witness->dim());
      std::string rows;
      for (std::size_t i = 0; i < cr.witness->dim(); ++i) {
        if (i) rows += ';';
        std::vector<fe> row(cr.witness->ambient);
        for (std::size_t j = 0; j < cr.witness->ambient; ++j) row[j] = cr.witness->basis.at(i, j);
        rows += join_vec(sf.field, row);
      }
      rep.put("witness", rows);
    }
  } else if (mode == "flanders") {
    unsigned r = static_cast<unsigned>(flag_u64(a, "r", upper_rank(S, budget, seed).value));
    FlandersReport fr = flanders_atkinson_check(S, r, budget);
    pass = fr.pass;
    rep.put("r", fr.r);
    rep.put("checked", fr.checked);
    rep.put_bool("enumerated-all", fr.enumerated_all);
    rep.put_bool("hypothesis-met", fr.hypothesis_met);
    if (!fr.pass) rep.put("failure", fr.failure);
  } else {
    fail(errc::usage_error, "unknown check mode " + mode);
  }
  rep.put_bool("result", pass);
  return finish(rep, a, out, pass);
}

int run_dual_or_reduce(const Args& a, std::ostream& out, bool dual) {
  std::string text = slurp(a.positional[1]);
  SpaceFile sf = parse_space_file(text);
  MatrixSpace S = need_space(sf);
  std::string opath = require_out(a);
  MatrixSpace R = dual ? dual_hat(S) : reduce(S).space;
  write_file(opath, emit_space_file(R));
  Report rep;
  rep.put("command", dual ? "dual" : "reduce");
  rep.put("input", a.positional[1]);
  rep.put("input-digest", hex64(fnv1a64(text)));
  rep.put("output", opath);
  rep.put("m", R.m());
  rep.put("n", R.n());
  rep.put("d", R.dim());
  return finish(rep, a, out, true);
}

int run_split(const Args& a, std::ostream& out) {
  if (a.positional.size() < 3) fail(errc::usage_error, "split wants a mode and a file");
  const std::string& mode = a.positional[1];
  std::string text = slurp(a.positional[2]);
  SpaceFile sf = parse_space_file(text);
  MatrixSpace S = need_space(sf);
  std::uint64_t budget = flag_u64(a, "budget", kDefaultBudget);
  std::uint64_t seed = flag_u64(a, "seed", kDefaultSeed);
  std::string opath = require_out(a);
  Report rep;
  rep.put("command", "split " + mode);
  rep.put("input", a.positional[2]);
  rep.put("input-digest", hex64(fnv1a64(text)));
  rep.put("budget", budget);
  if (mode == "onedim") {
    std::vector<fe> x;
    if (a.flags.count("x")) {
      x = parse_csv_vector(sf.field, a.flags.at("x"));
    } else {
      // scan for a vector with dim Sx = 1
      ProjectiveEnum pe(sf.field, S.n());
      std::vector<fe> cand;
      bool found = false;
      while (pe.next(cand)) {
        if (rank(sf.field, S.evaluation(cand)) == 1) {
          x = cand;
          found = true;
          break;
        }
      }
      if (!found) fail(errc::bad_witness, "no vector with dim Sx = 1 exists");
    }
    OneDimSplit od = one_dim_split(S, x, budget);
    write_file(opath, emit_space_file(od.space));
    rep.put("x", join_vec(sf.field, x));
    rep.put("q", od.q_cols);
    rep.put("h-m", od.h_block.m());
    rep.put("h-n", od.h_block.n());
    rep.put("output", opath);
    return finish(rep, a, out, true);
  }
  // thin/core need a maximal-rank element
  RankInfo u = upper_rank(S, budget, seed);
  if (mode == "thin") {
    Mat A;
    std::vector<fe> x;
    if (a.flags.count("elem")) {
      A = S.element(parse_csv_vector(sf.field, a.flags.at("elem")));
      if (a.flags.count("x")) {
        x = parse_csv_vector(sf.field, a.flags.at("x"));
      } else {
        Subspace kerm = kernel(sf.field, A);
        if (kerm.dim() == 0) fail(errc::bad_witness, "supplied element has trivial kernel");
        x.resize(S.n());
        for (std::size_t j = 0; j < S.n(); ++j) x[j] = kerm.basis.at(0, j);
      }
    } else {
      std::tie(A, x) = find_rank_witness(S, u.value, budget);
    }
    ThinDecomposition td = thin_decomposition(S, A, x, budget);
    write_file(opath, emit_space_file(td.transformed));
    rep.put("p", td.p);
    rep.put("s", td.s);
    rep.put("t", td.t);
    rep.put("r", td.r);
    rep.put_bool("bound-holds", td.bound_holds);
    rep.put_bool("h-column-property-checked", td.h_column_property_checked);
    rep.put("output", opath);
    return finish(rep, a, out, true);
  }
  if (mode == "core") {
    RReduced rr = S.contains(jr(S.m(), S.n(), u.value))
                      ? RReduced{S, identity(S.m()), identity(S.n()), u.value, u.exact}
                      : r_reduce_normalize(S, budget, seed);
    ColinearityResult col = colinearity_hypothesis(rr.space, budget);
    rep.put("p", col.p);
    rep.put_bool("colinearity", col.holds);
    if (!col.holds) {
      rep.put_bool("result", false);
      return finish(rep, a, out, false);
    }
    CoreSplit cs = alternating_core_split(rr.space, col.alpha, budget, seed);
    write_file(opath, emit_space_file(cs.transformed));
    rep.put("s", cs.s);
    rep.put("certificate-size", cs.certificate.size());
    if (cs.h_column_property) rep.put_bool("h-column-property", *cs.h_column_property);
    rep.put("output", opath);
    return finish(rep, a, out, true);
  }
  fail(errc::usage_error, "unknown split mode " + mode);
}

int run_quadclass(const Args& a, std::ostream& out) {
  std::string text = slurp(a.positional[1]);
  SpaceFile sf = parse_space_file(text);
  if (!sf.alt) fail(errc::usage_error, "quadclass wants an 'alt' file");
  Report rep;
  rep.put("command", "quadclass");
  rep.put("input", a.positional[1]);
  rep.put("input-digest", hex64(fnv1a64(text)));
  QuadForm q = restrict_pfaffian(*sf.alt);
  rep.put("dim", q.n);
  rep.put_bool("totally-isotropic", q.is_zero());
  if (q.n == 2) {
    rep.put("class", classify_dim2(q).tag());
  } else if (q.n == 3) {
    rep.put("class", classify_dim3(q).tag());
  } else {
    rep.put("class", "dim " + std::to_string(q.n) + " (no classifier)");
  }
  return finish(rep, a, out, true);
}

int run_catalog(const Args& a, std::ostream& out) {
  if (a.positional.size() < 2) fail(errc::usage_error, "catalog wants list|emit");
  const std::string& mode = a.positional[1];
  Report rep;
  if (mode == "list") {
    rep.put("command", "catalog list");
    for (const EntryDescriptor& d : list_entries()) rep.put(d.id, d.summary);
    return finish(rep, a, out, true);
  }
  if (mode == "emit") {
    if (a.positional.size() < 3) fail(errc::usage_error, "catalog emit wants an id");
    const std::string& id = a.positional[2];
    Field F = field_from_flags(a);
    EntryParams params;
    if (a.flags.count("delta")) params.delta = parse_csv_vector(F, a.flags.at("delta")).at(0);
    if (a.flags.count("n")) params.n = flag_u64(a, "n", 4);
    CatalogEntry e = build_entry(id, F, params);
    std::string opath = require_out(a);
    std::string payload = e.space ? emit_space_file(*e.space) : emit_space_file(*e.alt);
    write_file(opath, payload);
    rep.put("command", "catalog emit");
    rep.put("id", id);
    rep.put("field", F.describe());
    if (a.flags.count("delta") || e.delta != 0) rep.put("delta", e.delta);
    rep.put("class-tag", e.expected.class_tag);
    rep.put("output", opath);
    return finish(rep, a, out, true);
  }
  fail(errc::usage_error, "unknown catalog mode " + mode);
}

int run_verify(const Args& a, std::ostream& out) {
  if (a.positional.size() < 2) fail(errc::usage_error, "verify wants a suite");
  const std::string& suite = a.positional[1];
  Field F = field_from_flags(a);
  std::uint64_t budget = flag_u64(a, "budget", kDefaultBudget);
  std::uint64_t seed = flag_u64(a, "seed", kDefaultSeed);
  Report rep;
  rep.put("command", "verify " + suite);
  rep.put("field", F.describe());
  rep.put("budget", budget);
  rep.put("seed", seed);
  std::vector<std::pair<std::string, std::vector<VerifyItem>>> groups;
  if (suite == "catalog" || suite == "all") groups.push_back({"catalog", verify_catalog(F, budget, seed)});
  if (suite == "duality" || suite == "all") groups.push_back({"duality", verify_duality(F, budget, seed)});
  if (suite == "flanders" || suite == "all") groups.push_back({"flanders", verify_flanders(F, budget, seed)});
  if (suite == "bounds" || suite == "all") groups.push_back({"bounds", verify_bounds(F, budget, seed)});
  if (groups.empty()) fail(errc::usage_error, "unknown suite " + suite);
  bool all_pass = true;
  for (const auto& [gname, items] : groups) {
    for (const VerifyItem& it : items) {
      rep.put(gname + "/" + it.name, it.pass ? "pass" : "FAIL " + it.detail);
      all_pass &= it.pass;
    }
  }
  rep.put_bool("result", all_pass);
  return finish(rep, a, out, all_pass);
}

int run_search(const Args& a, std::ostream& out) {
  if (a.positional.size() < 2 || a.positional[1] != "conjecture")
    fail(errc::usage_error, "search wants 'conjecture'");
  unsigned r = static_cast<unsigned>(flag_u64(a, "r", 3));
  Field F = field_from_flags(a);
  unsigned trials = static_cast<unsigned>(flag_u64(a, "trials", 1000));
  std::uint64_t seed = flag_u64(a, "seed", kDefaultSeed);
  std::uint64_t budget = flag_u64(a, "budget", kDefaultBudget);
  ConjectureSearch cs = search_conjecture(F, r, trials, seed, budget);
  Report rep;
  rep.put("command", "search conjecture");
  rep.put("r", r);
  rep.put("field", F.describe());
  rep.put("trials", trials);
  rep.put("seed", seed);
  rep.put("budget", budget);
  rep.put("incompressible-samples", cs.incompressible);
  rep.put("semiprimitive-samples", cs.semiprimitive);
  rep.put("violations", cs.violations);
  for (const std::string& v : cs.violation_details) rep.put("violation", v);
  rep.put_bool("result", cs.violations == 0);
  return finish(rep, a, out, cs.violations == 0);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Args a = parse_args(args);
    if (a.positional.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& cmd = a.positional[0];
    if (cmd == "analyze" && a.positional.size() >= 2) return run_analyze(a, out);
    if (cmd == "check") return run_check(a, out);
    if (cmd == "dual" && a.positional.size() >= 2) return run_dual_or_reduce(a, out, true);
    if (cmd == "reduce" && a.positional.size() >= 2) return run_dual_or_reduce(a, out, false);
    if (cmd == "split") return run_split(a, out);
    if (cmd == "quadclass" && a.positional.size() >= 2) return run_quadclass(a, out);
    if (cmd == "catalog") return run_catalog(a, out);
    if (cmd == "verify") return run_verify(a, out);
    if (cmd == "search") return run_search(a, out);
    err << kUsage;
    return 2;
  } catch (const error& e) {
    if (e.code() == errc::usage_error) {
      err << "error: " << e.what() << "\n" << kUsage;
      return 2;
    }
    Report rep;
    rep.put("error", errc_name(e.code()));
    rep.put("detail", e.what());
    out << rep.tsv();
    return 1;
  }
}

}  // namespace llds
