#include "llds/spacefile.hpp"

#include <fstream>
#include <sstream>

namespace llds {

namespace {

struct TokenStream {
  std::vector<std::pair<std::string, std::size_t>> tokens;  // token, line number
  std::size_t pos = 0;

  bool done() const { return pos >= tokens.size(); }
  std::pair<std::string, std::size_t> peek() const { return tokens[pos]; }
  std::string take(const char* what) {
    if (done()) fail(errc::syntax_error, std::string("unexpected end of file, wanted ") + what);
    return tokens[pos++].first;
  }
  std::size_t line() const { return done() ? 0 : tokens[pos].second; }
};

TokenStream tokenize(const std::string& text) {
  TokenStream ts;
  std::size_t line_no = 1;
  std::string cur;
  bool comment = false;
  auto flush = [&] {
    if (!cur.empty()) {
      ts.tokens.push_back({cur, line_no});
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      comment = false;
      ++line_no;
      continue;
    }
    if (comment) continue;
    if (ch == '#') {
      flush();
      comment = true;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      flush();
      continue;
    }
    cur += ch;
  }
  flush();
  return ts;
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::syntax_error, "line " + std::to_string(line) + ": expected integer, got '" + tok +
                                 "'");
  return std::stoull(tok);
}

fe parse_token(const Field& F, const std::string& tok, std::size_t line) {
  if (F.prime_field()) {
    std::uint64_t v = parse_u64(tok, line);
    if (v >= F.p())
      fail(errc::value_out_of_range,
           "line " + std::to_string(line) + ": token " + tok + " not in [0," +
               std::to_string(F.p()) + ")");
    return v;
  }
  std::vector<std::uint64_t> cs;
  std::string part;
  std::istringstream is(tok);
  while (std::getline(is, part, ':')) cs.push_back(parse_u64(part, line));
  if (cs.size() != F.k())
    fail(errc::syntax_error,
         "line " + std::to_string(line) + ": extension token needs " + std::to_string(F.k()) +
             " coefficients");
  for (std::uint64_t c : cs)
    if (c >= F.p())
      fail(errc::value_out_of_range, "line " + std::to_string(line) + ": coefficient too large");
  return F.from_coeffs(cs);
}

std::string emit_token(const Field& F, fe v) {
  if (F.prime_field()) return std::to_string(v);
  auto cs = F.coeffs(v);
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(cs[i]);
  }
  return out;
}

}  // namespace

std::string field_header(const Field& F) {
  std::string h = "field " + std::to_string(F.p());
  if (!F.prime_field()) {
    h += " " + std::to_string(F.k());
    for (std::uint64_t c : F.modulus()) h += " " + std::to_string(c);
  }
  return h;
}

SpaceFile parse_space_file(const std::string& text) {
  TokenStream ts = tokenize(text);
  if (ts.take("magic") != "llds" || ts.take("version") != "1")
    fail(errc::syntax_error, "missing 'llds 1' magic");
  if (ts.take("field keyword") != "field") fail(errc::syntax_error, "expected 'field'");
  std::uint64_t p = parse_u64(ts.take("p"), ts.line());
  Field F = Field::make(p, 1);
  {
    // optional extension: "k c0 ... c{k-1}" before the shape keyword
    if (!ts.done() && ts.peek().first != "space" && ts.peek().first != "alt") {
      unsigned k = static_cast<unsigned>(parse_u64(ts.take("k"), ts.line()));
      std::vector<std::uint64_t> cs;
      for (unsigned i = 0; i < k; ++i) cs.push_back(parse_u64(ts.take("modulus"), ts.line()));
      F = Field::make(p, k, cs);
    }
  }
  std::string kind = ts.take("kind");
  SpaceFile out{F, false, std::nullopt, std::nullopt};
  if (kind == "space") {
    std::size_t m = parse_u64(ts.take("m"), ts.line());
    std::size_t n = parse_u64(ts.take("n"), ts.line());
    std::size_t d = parse_u64(ts.take("d"), ts.line());
    std::vector<Mat> mats;
    for (std::size_t t = 0; t < d; ++t) {
      if (ts.take("matrix keyword") != "matrix") fail(errc::syntax_error, "expected 'matrix'");
      Mat M(m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) M.at(i, j) = parse_token(F, ts.take("entry"), ts.line());
      mats.push_back(std::move(M));
    }
    if (!ts.done()) fail(errc::syntax_error, "trailing tokens after the last matrix");
    out.space = MatrixSpace(F, m, n, mats);
    return out;
  }
  if (kind == "alt") {
    std::size_t n = parse_u64(ts.take("n"), ts.line());
    std::size_t d = parse_u64(ts.take("d"), ts.line());
    std::vector<Mat> mats;
    for (std::size_t t = 0; t < d; ++t) {
      if (ts.take("matrix keyword") != "matrix") fail(errc::syntax_error, "expected 'matrix'");
      Mat M(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M.at(i, j) = parse_token(F, ts.take("entry"), ts.line());
      if (!is_alternating(F, M))
        fail(errc::shape_mismatch, "matrix under 'alt' header is not alternating");
      mats.push_back(std::move(M));
    }
    if (!ts.done()) fail(errc::syntax_error, "trailing tokens after the last matrix");
    out.is_alt = true;
    out.alt = AltSubspace(F, n, mats);
    return out;
  }
  fail(errc::syntax_error, "kind must be 'space' or 'alt', got '" + kind + "'");
}

SpaceFile load_space_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::syntax_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_space_file(ss.str());
}

namespace {
std::string emit_common(const Field& F, const std::string& shape_line,
                        const std::vector<Mat>& basis) {
  std::string out = "llds 1\n" + field_header(F) + "\n" + shape_line + "\n";
  for (const Mat& M : basis) {
    out += "matrix\n";
    for (std::size_t i = 0; i < M.rows; ++i) {
      for (std::size_t j = 0; j < M.cols; ++j) {
        if (j) out += ' ';
        out += emit_token(F, M.at(i, j));
      }
      out += '\n';
    }
  }
  return out;
}
}  // namespace

std::string emit_space_file(const MatrixSpace& S) {
  return emit_common(S.field(),
                     "space " + std::to_string(S.m()) + " " + std::to_string(S.n()) + " " +
                         std::to_string(S.dim()),
                     S.basis());
}

std::string emit_space_file(const AltSubspace& V) {
  return emit_common(V.field(),
                     "alt " + std::to_string(V.n()) + " " + std::to_string(V.dim()), V.basis());
}

}  // namespace llds
