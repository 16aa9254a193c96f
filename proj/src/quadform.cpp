#include "llds/quadform.hpp"

#include <algorithm>

namespace llds {

fe QuadForm::eval(const std::vector<fe>& x) const {
  if (x.size() != n) fail(errc::shape_mismatch, "eval");
  fe acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      acc = F.add(acc, F.mul(at(i, j), F.mul(x[i], x[j])));
  return acc;
}

bool QuadForm::is_zero() const {
  for (fe v : c)
    if (v != 0) return false;
  return true;
}

QuadForm QuadForm::transform(const Mat& P, fe lambda) const {
  if (P.rows != n || P.cols != n) fail(errc::shape_mismatch, "transform");
  QuadForm out(F, n);
  // q'(x) = lambda * q(Px): evaluate on e_i and polarize on e_i + e_j
  std::vector<std::vector<fe>> cols(n, std::vector<fe>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = P.at(i, j);
  std::vector<fe> qe(n);
  for (std::size_t i = 0; i < n; ++i) {
    qe[i] = eval(cols[i]);
    out.at(i, i) = F.mul(lambda, qe[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<fe> s(n);
      for (std::size_t t = 0; t < n; ++t) s[t] = F.add(cols[i][t], cols[j][t]);
      fe cross = F.sub(F.sub(eval(s), qe[i]), qe[j]);
      out.at(i, j) = F.mul(lambda, cross);
    }
  return out;
}

QuadForm restrict_pfaffian(const AltSubspace& V) {
  if (V.n() != 4) fail(errc::wrong_ambient, "pfaffian restriction lives in Mata_4");
  const Field& F = V.field();
  const std::size_t d = V.dim();
  if (d > 6) fail(errc::dimension_too_large, "dim <= 6 expected");
  QuadForm q(F, d);
  std::vector<fe> pf(d);
  for (std::size_t i = 0; i < d; ++i) {
    pf[i] = pfaffian(F, V.basis()[i]);
    q.at(i, i) = pf[i];
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      fe s = pfaffian(F, add(F, V.basis()[i], V.basis()[j]));
      q.at(i, j) = F.sub(F.sub(s, pf[i]), pf[j]);
    }
  return q;
}

namespace {

// Diagonalize a symmetric bilinear form over odd characteristic; returns the
// diagonal entries.
std::vector<fe> diagonalize_odd(const Field& F, Mat G) {
  const std::size_t n = G.rows;
  std::vector<fe> diag;
  std::vector<bool> used(n, false);
  Mat cur = G;
  // operate on the Gram matrix by simultaneous row/col elimination
  for (std::size_t step = 0; step < n; ++step) {
    // find a nonzero diagonal entry, creating one if needed
    std::size_t piv = n;
    for (std::size_t i = step; i < n; ++i)
      if (cur.at(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // all remaining diagonal zero: look for g_ij != 0 and add row/col j to i
      std::size_t bi = n, bj = n;
      for (std::size_t i = step; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (cur.at(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) break;  // remaining block is zero
      for (std::size_t t = 0; t < n; ++t)
        cur.at(bi, t) = F.add(cur.at(bi, t), cur.at(bj, t));
      for (std::size_t t = 0; t < n; ++t)
        cur.at(t, bi) = F.add(cur.at(t, bi), cur.at(t, bj));
      piv = bi;
    }
    if (piv != step) {
      for (std::size_t t = 0; t < n; ++t) std::swap(cur.at(piv, t), cur.at(step, t));
      for (std::size_t t = 0; t < n; ++t) std::swap(cur.at(t, piv), cur.at(t, step));
    }
    fe a = cur.at(step, step);
    fe ia = F.inv(a);
    for (std::size_t i = step + 1; i < n; ++i) {
      fe f = F.mul(cur.at(i, step), ia);
      if (f == 0) continue;
      for (std::size_t t = 0; t < n; ++t)
        cur.at(i, t) = F.sub(cur.at(i, t), F.mul(f, cur.at(step, t)));
      for (std::size_t t = 0; t < n; ++t)
        cur.at(t, i) = F.sub(cur.at(t, i), F.mul(f, cur.at(t, step)));
    }
    diag.push_back(a);
  }
  return diag;  // only the nonzero pivots are listed
}

Mat gram_odd(const QuadForm& q) {
  const Field& F = q.F;
  fe half = F.inv(F.from_int(2));
  Mat G(q.n, q.n);
  for (std::size_t i = 0; i < q.n; ++i) {
    G.at(i, i) = q.at(i, i);
    for (std::size_t j = i + 1; j < q.n; ++j) {
      fe h = F.mul(half, q.at(i, j));
      G.at(i, j) = h;
      G.at(j, i) = h;
    }
  }
  return G;
}

fe disc_class_rep(const Field& F, fe disc) {
  return F.is_square(disc) ? F.one() : F.least_nonsquare();
}

}  // namespace

std::string SimilarityClass::tag() const {
  switch (kind) {
    case Kind::D0: return "D0";
    case Kind::D1: return "D1";
    case Kind::R: return "R(" + std::to_string(delta) + ")";
  }
  return "?";
}

SimilarityClass classify_dim2(const QuadForm& q) {
  if (q.n != 2) fail(errc::wrong_dimension, "classify_dim2 wants dim 2");
  const Field& F = q.F;
  SimilarityClass out;
  out.char2 = F.char2();
  if (q.is_zero()) {
    out.kind = SimilarityClass::Kind::D0;
    return out;
  }
  if (!F.char2()) {
    std::vector<fe> diag = diagonalize_odd(F, gram_odd(q));
    if (diag.size() <= 1) {
      out.kind = SimilarityClass::Kind::D1;
      return out;
    }
    out.kind = SimilarityClass::Kind::R;
    out.delta = disc_class_rep(F, F.mul(diag[0], diag[1]));
    return out;
  }
  // characteristic 2: the polar form of ax^2 + bxy + cy^2 is b * (x1 y2 + x2 y1)
  fe b = q.at(0, 1);
  if (b == 0) {
    // nonzero with zero polar form: a square of a linear form since the
    // Frobenius is onto, i.e. the D2 family is vacuous over finite fields
    out.kind = SimilarityClass::Kind::D1;
    out.d2_collapsed = q.at(0, 0) != 0 && q.at(1, 1) != 0;
    return out;
  }
  // normalize to [a', b'] with middle coefficient 1; Arf class of a'b'
  fe a = q.at(0, 0), cc = q.at(1, 1);
  fe ib = F.inv(b);
  fe arf_arg = F.mul(F.mul(a, cc), F.mul(ib, ib));
  out.kind = SimilarityClass::Kind::R;
  if (F.arf_class(arf_arg) == Field::Arf::trivial) {
    out.delta = 0;
  } else {
    fe rep = 0;
    for (fe t = 1; t < F.q(); ++t)
      if (F.arf_class(t) == Field::Arf::nontrivial) {
        rep = t;
        break;
      }
    out.delta = rep;
  }
  return out;
}

std::string TernaryClass::tag() const {
  if (char2) return "char2[" + std::to_string(rank) + "," + std::to_string(disc) + "]";
  if (rank == 3) return "rank3";
  if (rank == 2) return "rank2(" + std::to_string(disc) + ")";
  return "rank" + std::to_string(rank);
}

TernaryClass classify_dim3(const QuadForm& q) {
  if (q.n != 3) fail(errc::wrong_dimension, "classify_dim3 wants dim 3");
  const Field& F = q.F;
  TernaryClass out;
  out.char2 = F.char2();
  if (!F.char2()) {
    std::vector<fe> diag = diagonalize_odd(F, gram_odd(q));
    out.rank = static_cast<unsigned>(diag.size());
    if (out.rank == 2) {
      out.disc = disc_class_rep(F, F.mul(diag[0], diag[1]));
    } else if (out.rank == 3) {
      // lambda q scales the discriminant class by lambda, so the two classes
      // collapse into one similarity orbit; report the canonical 1
      out.disc = F.one();
    }
    return out;
  }
  // characteristic 2 normalized tag: [a,b] | <c>; report (polar rank + radical
  // rank, Arf payload) with the radical collapsed by perfectness
  fe b01 = q.at(0, 1), b02 = q.at(0, 2), b12 = q.at(1, 2);
  Mat polar(3, 3);
  polar.at(0, 1) = b01;
  polar.at(1, 0) = b01;
  polar.at(0, 2) = b02;
  polar.at(2, 0) = b02;
  polar.at(1, 2) = b12;
  polar.at(2, 1) = b12;
  unsigned pr = rank(F, polar);  // 0 or 2
  if (pr == 0) {
    // purely quasilinear: q = (linear)^2; rank <= 1 over a perfect field
    out.rank = q.is_zero() ? 0 : 1;
    out.disc = 0;
    return out;
  }
  // split off the regular plane: choose coordinates so the polar form pairs
  // e_i with e_j; the complement vector carries <c>
  std::size_t i = 0, j = 1;
  if (b01 != 0) {
    i = 0;
    j = 1;
  } else if (b02 != 0) {
    i = 0;
    j = 2;
  } else {
    i = 1;
    j = 2;
  }
  std::size_t k = 3 - i - j;
  fe bij = q.at(std::min(i, j), std::max(i, j));
  // radical vector: v = e_k + s e_i + t e_j with polar(v, e_i) = polar(v, e_j) = 0
  fe bik = q.at(std::min(i, k), std::max(i, k));
  fe bjk = q.at(std::min(j, k), std::max(j, k));
  fe ibij = F.inv(bij);
  fe s = F.mul(bjk, ibij);  // kills pairing with e_j via e_i coefficient
  fe t = F.mul(bik, ibij);
  std::vector<fe> v(3, 0);
  v[k] = F.one();
  v[i] = s;
  v[j] = t;
  fe cval = q.eval(v);
  // Arf class of the regular part [a,b] after normalizing the middle to 1
  std::vector<fe> ei(3, 0), ej(3, 0);
  ei[i] = F.one();
  ej[j] = F.one();
  fe a = q.eval(ei), c2 = q.eval(ej);
  fe arf_arg = F.mul(F.mul(a, c2), F.mul(ibij, ibij));
  out.rank = 2 + (cval != 0 ? 1 : 0);
  if (out.rank == 3) {
    // with a nonzero radical term the shear z -> z + t y shifts b by c t^2,
    // which sweeps all of K over a perfect field: one similarity class
    out.disc = 0;
  } else {
    out.disc = (F.arf_class(arf_arg) == Field::Arf::nontrivial ? 1 : 0);
  }
  return out;
}

bool totally_isotropic(const AltSubspace& V) {
  if (V.n() != 4) fail(errc::wrong_ambient, "isotropy test lives in Mata_4");
  return restrict_pfaffian(V).is_zero();
}

bool subspaces_congruent(const AltSubspace& V1, const AltSubspace& V2, std::uint64_t budget) {
  (void)budget;
  if (V1.n() != 4 || V2.n() != 4) fail(errc::wrong_ambient, "congruence test lives in Mata_4");
  if (V1.dim() > 3 || V2.dim() > 3) fail(errc::dimension_too_large, "dims <= 3 only");
  if (V1.dim() != V2.dim()) return false;
  if (V1.field() != V2.field()) fail(errc::shape_mismatch, "different fields");
  const std::size_t d = V1.dim();
  bool lag1 = d == 3 && totally_isotropic(V1);
  bool lag2 = d == 3 && totally_isotropic(V2);
  if (lag1 != lag2) return false;
  if (lag1) {
    // the two lagrangian orbits are separated by incompressibility
    return regularity_checks(V1).incompressible == regularity_checks(V2).incompressible;
  }
  QuadForm q1 = restrict_pfaffian(V1), q2 = restrict_pfaffian(V2);
  switch (d) {
    case 0: return true;
    case 1: return (q1.at(0, 0) == 0) == (q2.at(0, 0) == 0);
    case 2: return classify_dim2(q1) == classify_dim2(q2);
    default: return classify_dim3(q1) == classify_dim3(q2);
  }
}

}  // namespace llds
