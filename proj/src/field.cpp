#include "llds/field.hpp"

#include <algorithm>
#include <array>

namespace llds {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// --- dense polynomials over GF(p), ascending coefficients -----------------

using Poly = std::vector<u64>;

void ptrim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmod(Poly a, const Poly& f, u64 p) {
  // f monic
  ptrim(a);
  while (a.size() >= f.size()) {
    u64 c = a.back();
    std::size_t shift = a.size() - f.size();
    if (c != 0) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        u64& t = a[shift + i];
        t = (t + p - mulmod(c, f[i], p) % p) % p;
      }
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + u128(a[i]) * b[j]) % p;
  }
  return pmod(std::move(r), f, p);
}

Poly ppowmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, u64 p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // make b monic before reducing
    u64 lead = b.back();
    if (lead != 1) {
      u64 il = powmod(lead, p - 2, p);
      for (u64& c : b) c = mulmod(c, il, p);
    }
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Monic polynomial x^k + sum c_i x^i from the low coefficients.
Poly monic_from(const std::vector<u64>& low, unsigned k) {
  Poly f(low.begin(), low.end());
  f.resize(k + 1, 0);
  f[k] = 1;
  return f;
}

bool poly_irreducible(const std::vector<u64>& low, unsigned k, u64 p) {
  if (k == 1) return true;
  Poly f = monic_from(low, k);
  // x^(p^k) == x mod f, and gcd(x^(p^(k/l)) - x, f) = 1 for prime l | k
  u64 pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  Poly x{0, 1};
  Poly xq = ppowmod(x, pk, f, p);
  Poly diff = xq;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  ptrim(diff);
  if (!diff.empty()) return false;
  for (unsigned l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool lprime = true;
    for (unsigned t = 2; t * t <= l; ++t)
      if (l % t == 0) lprime = false;
    if (!lprime) continue;
    u64 e = 1;
    for (unsigned i = 0; i < k / l; ++i) e *= p;
    Poly g = ppowmod(x, e, f, p);
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    ptrim(g);
    Poly d = pgcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % s == 0) return n == s;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::make(u64 p, unsigned k) {
  if (!is_prime_u64(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  if (k < 1) fail(errc::bad_params, "extension degree must be >= 1");
  u128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q >= (u128(1) << 63)) fail(errc::field_too_large, "p^k must be < 2^63");
  }
  if (k == 1) {
    Field F;
    F.p_ = p;
    F.k_ = 1;
    F.q_ = p;
    F.mod_ = {0};  // x + 0 placeholder; never used for k = 1
    return F;
  }
  // scan coefficient vectors in base-p counting order
  u64 pk_low = 1;
  for (unsigned i = 0; i < k; ++i) pk_low *= p;
  for (u64 t = 0; t < pk_low; ++t) {
    std::vector<u64> low(k);
    u64 v = t;
    for (unsigned i = 0; i < k; ++i) {
      low[i] = v % p;
      v /= p;
    }
    if (poly_irreducible(low, k, p)) return make(p, k, low);
  }
  fail(errc::reducible_modulus, "no irreducible polynomial found");  // unreachable
}

Field Field::make(u64 p, unsigned k, const std::vector<u64>& modulus) {
  if (!is_prime_u64(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  if (k < 1) fail(errc::bad_params, "extension degree must be >= 1");
  u128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q >= (u128(1) << 63)) fail(errc::field_too_large, "p^k must be < 2^63");
  }
  if (modulus.size() != k) fail(errc::bad_params, "modulus must list k low coefficients");
  for (u64 c : modulus)
    if (c >= p) fail(errc::value_out_of_range, "modulus coefficient not reduced mod p");
  if (k > 1 && !poly_irreducible(modulus, k, p))
    fail(errc::reducible_modulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  Field F;
  F.p_ = p;
  F.k_ = k;
  F.q_ = static_cast<u64>(q);
  F.mod_ = modulus;
  return F;
}

namespace {
// decode/encode packed ordinals; buffers sized for k <= 62
struct Digits {
  std::array<u64, 64> c{};
};

inline void decode(u64 a, u64 p, unsigned k, Digits& d) {
  for (unsigned i = 0; i < k; ++i) {
    d.c[i] = a % p;
    a /= p;
  }
}

inline u64 encode(const Digits& d, u64 p, unsigned k) {
  u64 a = 0;
  for (unsigned i = k; i-- > 0;) a = a * p + d.c[i];
  return a;
}
}  // namespace

fe Field::add(fe a, fe b) const {
  if (k_ == 1) {
    fe s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Digits x, y;
  decode(a, p_, k_, x);
  decode(b, p_, k_, y);
  for (unsigned i = 0; i < k_; ++i) {
    u64 s = x.c[i] + y.c[i];
    x.c[i] = s >= p_ ? s - p_ : s;
  }
  return encode(x, p_, k_);
}

fe Field::sub(fe a, fe b) const { return add(a, neg(b)); }

fe Field::neg(fe a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Digits x;
  decode(a, p_, k_, x);
  for (unsigned i = 0; i < k_; ++i) x.c[i] = x.c[i] == 0 ? 0 : p_ - x.c[i];
  return encode(x, p_, k_);
}

fe Field::mul(fe a, fe b) const {
  if (k_ == 1) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  Digits x, y;
  decode(a, p_, k_, x);
  decode(b, p_, k_, y);
  std::array<u64, 128> prod{};
  for (unsigned i = 0; i < k_; ++i) {
    if (x.c[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + u128(x.c[i]) * y.c[j]) % p_;
  }
  // reduce by the monic modulus: x^k = -(c_{k-1} x^{k-1} + ... + c_0)
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    u64 c = prod[i];
    if (c == 0) {
      if (i == k_) break;
      continue;
    }
    prod[i] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      u64 t = mulmod(c, mod_[j], p_);
      prod[i - k_ + j] = (prod[i - k_ + j] + p_ - t) % p_;
    }
    if (i == k_) break;
  }
  Digits z;
  for (unsigned i = 0; i < k_; ++i) z.c[i] = prod[i];
  return encode(z, p_, k_);
}

fe Field::pow(fe a, u64 e) const {
  fe r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

fe Field::inv(fe a) const {
  if (a == 0) fail(errc::division_by_zero, "inverse of zero in " + describe());
  return pow(a, q_ - 2);
}

fe Field::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  return static_cast<fe>(m);
}

fe Field::from_coeffs(const std::vector<u64>& c) const {
  if (c.size() > k_) fail(errc::value_out_of_range, "too many coefficients");
  Digits d;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) fail(errc::value_out_of_range, "coefficient not reduced mod p");
    d.c[i] = c[i];
  }
  return encode(d, p_, k_);
}

std::vector<u64> Field::coeffs(fe a) const {
  Digits d;
  decode(a, p_, k_, d);
  return std::vector<u64>(d.c.begin(), d.c.begin() + k_);
}

bool Field::is_square(fe a) const {
  if (a == 0 || char2()) return true;
  return pow(a, (q_ - 1) / 2) == one();
}

fe Field::least_nonsquare() const {
  if (char2()) fail(errc::wrong_characteristic, "every element of " + describe() + " is a square");
  for (fe a = 2; a < q_; ++a)
    if (!is_square(a)) return a;
  fail(errc::invariant_violation, "no non-square found");
}

Field::Arf Field::arf_class(fe a) const {
  if (!char2()) fail(errc::wrong_characteristic, "Arf classes require characteristic 2");
  // absolute trace separates K / P(K)
  fe tr = 0;
  fe t = a;
  for (unsigned i = 0; i < k_; ++i) {
    tr = add(tr, t);
    t = mul(t, t);
  }
  return tr == 0 ? Arf::trivial : Arf::nontrivial;
}

std::string Field::describe() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

FieldExtension extend_field(const Field& base, unsigned e) {
  FieldExtension ext;
  ext.e = e;
  if (e <= 1) {
    ext.big = base;
    return ext;
  }
  ext.big = Field::make(base.p(), base.k() * e);
  if (base.prime_field()) return ext;  // constants embed as themselves
  // Map the base generator to a root of the base modulus in the big field.
  // Only ever needed for small base fields, so a direct scan is fine.
  if (ext.big.q() > (1ull << 22))
    fail(errc::budget_exceeded, "extension too large to embed by root scan");
  const Field& B = ext.big;
  fe root = 0;
  bool found = false;
  for (fe cand = 0; cand < B.q() && !found; ++cand) {
    // evaluate x^k + sum mod_[i] x^i at cand
    fe acc = B.pow(cand, base.k());
    fe xp = B.one();
    for (unsigned i = 0; i < base.k(); ++i) {
      acc = B.add(acc, B.mul(B.from_int(static_cast<std::int64_t>(base.modulus()[i])), xp));
      xp = B.mul(xp, cand);
    }
    if (acc == 0) {
      root = cand;
      found = true;
    }
  }
  if (!found) fail(errc::invariant_violation, "base modulus has no root in extension");
  ext.embed_table.resize(base.q());
  for (fe a = 0; a < base.q(); ++a) {
    auto cs = base.coeffs(a);
    fe acc = 0, xp = B.one();
    for (unsigned i = 0; i < base.k(); ++i) {
      acc = B.add(acc, B.mul(B.from_int(static_cast<std::int64_t>(cs[i])), xp));
      xp = B.mul(xp, root);
    }
    ext.embed_table[a] = acc;
  }
  return ext;
}

}  // namespace llds
