#pragma once

// Dense univariate polynomials over Z, Q, and Z/m with complete factorization
// over the rationals: squarefree split, Cantor-Zassenhaus factorization modulo
// a small prime, quadratic Hensel lifting to a coefficient bound, and subset
// recombination.  Also hosts the cheap necessary check that a one-relation
// presentation can define an integral domain.
//
// Polynomials are ascending coefficient vectors as in discriminant.hpp; the
// zero polynomial is the empty vector.

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "disceq/discriminant.hpp"
#include "disceq/ring.hpp"
#include "disceq/util.hpp"

namespace disceq {

// ---- integer-coefficient helpers ----------------------------------------------

inline Int zp_content(const std::vector<Int>& f) {
  Int g = 0;
  for (const Int& c : f) g = gcd(g, c);
  return g;
}

// divide out the content and force a positive leading coefficient
inline std::vector<Int> zp_primitive(std::vector<Int> f) {
  up_trim(f);
  if (f.empty()) return f;
  Int g = zp_content(f);
  if (f.back() < 0) g = -g;
  if (g != 1)
    for (Int& c : f) c = exact_div(c, g);
  return f;
}

// long division by a monic divisor; stays in Z throughout
inline std::pair<std::vector<Int>, std::vector<Int>> zp_divmod_monic(
    std::vector<Int> f, const std::vector<Int>& g) {
  int dg = up_deg(g);
  require(dg >= 0 && g.back() == 1, "DomainError",
          "monic polynomial division needs a monic divisor");
  int df = up_deg(f);
  if (df < dg) return {{}, std::move(f)};
  std::vector<Int> q(static_cast<size_t>(df - dg) + 1, Int(0));
  for (int k = df; k >= dg; k--) {
    Int c = f[static_cast<size_t>(k)];
    if (c == 0) continue;
    q[static_cast<size_t>(k - dg)] = c;
    for (int j = 0; j <= dg; j++)
      f[static_cast<size_t>(k - dg + j)] -= c * g[static_cast<size_t>(j)];
  }
  up_trim(f);
  up_trim(q);
  return {std::move(q), std::move(f)};
}

// rational division with remainder, divisor nonzero
inline std::pair<std::vector<Rat>, std::vector<Rat>> qp_divmod(
    std::vector<Rat> f, const std::vector<Rat>& g) {
  int dg = up_deg(g);
  require(dg >= 0, "DomainError", "polynomial division by zero");
  int df = up_deg(f);
  std::vector<Rat> q(df >= dg ? static_cast<size_t>(df - dg) + 1 : 0, Rat(0));
  for (int k = df; k >= dg; k--) {
    Rat c = f[static_cast<size_t>(k)] / g[static_cast<size_t>(dg)];
    if (c == 0) continue;
    q[static_cast<size_t>(k - dg)] = c;
    for (int j = 0; j <= dg; j++)
      f[static_cast<size_t>(k - dg + j)] -= c * g[static_cast<size_t>(j)];
  }
  up_trim(f);
  up_trim(q);
  return {std::move(q), std::move(f)};
}

// quotient when g divides f over Q and the quotient has integer coefficients
inline std::optional<std::vector<Int>> zp_divide_exact(
    const std::vector<Int>& f, const std::vector<Int>& g) {
  std::vector<Rat> fq(f.begin(), f.end()), gq(g.begin(), g.end());
  up_trim(fq);
  up_trim(gq);
  if (up_deg(gq) < 0) return std::nullopt;
  auto [q, r] = qp_divmod(std::move(fq), gq);
  if (!r.empty()) return std::nullopt;
  std::vector<Int> out;
  out.reserve(q.size());
  for (const Rat& c : q) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(Int(c.get_num()));
  }
  return out;
}

// primitive gcd over Z (computed by the Euclidean algorithm over Q)
inline std::vector<Int> zp_gcd(const std::vector<Int>& a,
                               const std::vector<Int>& b) {
  std::vector<Rat> f(a.begin(), a.end()), g(b.begin(), b.end());
  up_trim(f);
  up_trim(g);
  while (!g.empty()) {
    std::vector<Rat> r = up_mod(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (f.empty()) return {};
  Int den = 1;
  for (const Rat& c : f) den = lcm(den, Int(c.get_den()));
  std::vector<Int> z;
  z.reserve(f.size());
  for (const Rat& c : f) {
    Rat s = c * Rat(den);
    z.push_back(Int(s.get_num()));
  }
  return zp_primitive(std::move(z));
}

// ---- arithmetic modulo m (m a prime or a prime power) --------------------------

namespace qdetail {

using P = std::vector<Int>;

inline Int inv_mod(const Int& a, const Int& m) {
  auto [g, u, v] = gcd_ext(fmod(a, m), m);
  (void)v;
  require(g == 1, "DomainError", "element not invertible modulo m");
  return fmod(u, m);
}

inline P norm(P f, const Int& m) {
  for (Int& c : f) c = fmod(c, m);
  up_trim(f);
  return f;
}

inline P add(const P& a, const P& b, const Int& m) {
  return norm(up_add(a, b), m);
}

inline P sub(const P& a, const P& b, const Int& m) {
  P nb = up_neg(b);
  return norm(up_add(a, nb), m);
}

inline P mul(const P& a, const P& b, const Int& m) {
  return norm(up_mul(a, b, Int(0)), m);
}

inline P scale(P f, const Int& c, const Int& m) {
  for (Int& x : f) x = fmod(x * c, m);
  up_trim(f);
  return f;
}

// division with remainder; lc(g) must be invertible modulo m.  Every Hensel
// call divides by a monic polynomial, so this also works for prime powers.
inline void divmod(const P& f, const P& g, const Int& m, P& q, P& r) {
  int dg = up_deg(g);
  require(dg >= 0, "DomainError", "modular polynomial division by zero");
  Int il = inv_mod(g[static_cast<size_t>(dg)], m);
  r = norm(f, m);
  int df = up_deg(r);
  q.assign(df >= dg ? static_cast<size_t>(df - dg) + 1 : 0, Int(0));
  for (int k = df; k >= dg; k--) {
    Int c = fmod(r[static_cast<size_t>(k)] * il, m);
    if (c == 0) continue;
    q[static_cast<size_t>(k - dg)] = c;
    for (int j = 0; j <= dg; j++)
      r[static_cast<size_t>(k - dg + j)] =
          fmod(r[static_cast<size_t>(k - dg + j)] - c * g[static_cast<size_t>(j)], m);
  }
  up_trim(q);
  up_trim(r);
}

inline P make_monic(P f, const Int& p) {
  up_trim(f);
  if (f.empty() || f.back() == 1) return f;
  Int il = inv_mod(f.back(), p);
  return scale(std::move(f), il, p);
}

// monic gcd over F_p
inline P gcd_fp(P a, P b, const Int& p) {
  a = norm(std::move(a), p);
  b = norm(std::move(b), p);
  while (!b.empty()) {
    P q, r;
    divmod(a, b, p, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

inline P mulmod(const P& a, const P& b, const P& f, const Int& p) {
  P q, r;
  divmod(mul(a, b, p), f, p, q, r);
  return r;
}

inline P powmod(P base, const Int& e, const P& f, const Int& p) {
  P q, r;
  divmod(norm(std::move(base), p), f, p, q, r);
  base = std::move(r);
  P acc{Int(1)};
  size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nb; i-- > 0;) {
    acc = mulmod(acc, acc, f, p);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      acc = mulmod(acc, base, f, p);
  }
  return acc;
}

// extended Euclid over F_p: (monic gcd, u, v) with u*a + v*b = gcd
inline std::tuple<P, P, P> gcd_ext_fp(P a, P b, const Int& p) {
  P r0 = norm(std::move(a), p), r1 = norm(std::move(b), p);
  P s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
  while (!r1.empty()) {
    P q, r;
    divmod(r0, r1, p, q, r);
    P s2 = sub(s0, mul(q, s1, p), p);
    P t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.empty() && r0.back() != 1) {
    Int il = inv_mod(r0.back(), p);
    r0 = scale(std::move(r0), il, p);
    s0 = scale(std::move(s0), il, p);
    t0 = scale(std::move(t0), il, p);
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

// distinct-degree split of a monic squarefree f over F_p: pairs
// (d, product of all irreducible factors of degree d), d ascending
inline std::vector<std::pair<int, P>> ddf(P f, const Int& p) {
  std::vector<std::pair<int, P>> out;
  P x{Int(0), Int(1)};
  P h = x;
  int d = 0;
  while (up_deg(f) > 0 && 2 * (d + 1) <= up_deg(f)) {
    d++;
    h = powmod(h, p, f, p);  // x^(p^d) mod f
    P g = gcd_fp(sub(h, x, p), f, p);
    if (up_deg(g) > 0) {
      out.push_back({d, g});
      P q, r;
      divmod(f, g, p, q, r);
      require(r.empty(), "InternalError", "distinct-degree split not exact");
      f = std::move(q);
      if (up_deg(f) > 0) {
        P qq, rr;
        divmod(h, f, p, qq, rr);
        h = std::move(rr);
      }
    }
  }
  if (up_deg(f) > 0) out.push_back({up_deg(f), std::move(f)});
  return out;
}

// equal-degree splitting (Cantor-Zassenhaus, p odd): f monic, a product of
// deg(f)/d distinct irreducible factors all of degree d
inline void edf(P f, int d, const Int& p, Rng& rng, std::vector<P>& out) {
  int n = up_deg(f);
  if (n == d) {
    out.push_back(std::move(f));
    return;
  }
  Int e = (pow_ui(p, static_cast<unsigned long>(d)) - 1) / 2;
  long pm = p.get_si();
  for (;;) {
    P r(static_cast<size_t>(n), Int(0));
    for (Int& c : r) c = Int(rng.range(0, pm - 1));
    up_trim(r);
    if (up_deg(r) < 1) continue;
    P g = gcd_fp(r, f, p);
    if (up_deg(g) <= 0) {
      P s = powmod(r, e, f, p);
      s = sub(s, P{Int(1)}, p);
      g = gcd_fp(s, f, p);
    }
    if (up_deg(g) > 0 && up_deg(g) < n) {
      P q, rem;
      divmod(f, g, p, q, rem);
      require(rem.empty(), "InternalError", "equal-degree split not exact");
      edf(std::move(g), d, p, rng, out);
      edf(std::move(q), d, p, rng, out);
      return;
    }
  }
}

// all monic irreducible factors of a monic squarefree f over F_p (p odd)
inline std::vector<P> factor_fp_squarefree(const P& f, const Int& p, Rng& rng) {
  std::vector<P> out;
  for (auto& [d, g] : ddf(f, p)) {
    if (up_deg(g) == d)
      out.push_back(g);
    else
      edf(g, d, p, rng, out);
  }
  return out;
}

// one quadratic Hensel step: from f = g*h and s*g + t*h = 1 (mod m), with f,
// g, h monic, to the same congruences mod m^2.  Updates g, h, s, t in place.
inline void hensel_step(const P& f, P& g, P& h, P& s, P& t, const Int& m) {
  Int m2 = m * m;
  int dg0 = up_deg(g), dh0 = up_deg(h);
  P e = sub(norm(f, m2), mul(g, h, m2), m2);
  P q, r;
  divmod(mul(s, e, m2), h, m2, q, r);
  g = add(g, add(mul(t, e, m2), mul(q, g, m2), m2), m2);
  h = add(h, r, m2);
  P b = sub(add(mul(s, g, m2), mul(t, h, m2), m2), P{Int(1)}, m2);
  P c, d;
  divmod(mul(s, b, m2), h, m2, c, d);
  s = sub(s, d, m2);
  t = sub(sub(t, mul(t, b, m2), m2), mul(c, g, m2), m2);
  require(up_deg(g) == dg0 && g.back() == 1 && up_deg(h) == dh0 && h.back() == 1,
          "InternalError", "Hensel step drifted off the expected degrees");
}

// lift a monic factor g of the monic f from mod p to mod p^(2^j) >= bound,
// against the complementary factor comp; returns the lift and the modulus
// reached (the same for every factor, since it depends only on p and bound)
inline std::pair<P, Int> lift_factor(const P& f, P g, P comp, const Int& p,
                                     const Int& bound) {
  auto [d, s, t] = gcd_ext_fp(g, comp, p);
  require(up_deg(d) == 0, "InternalError", "modular factors not coprime");
  Int m = p;
  while (m < bound) {
    hensel_step(f, g, comp, s, t, m);
    m *= m;
  }
  return {std::move(g), std::move(m)};
}

inline std::pair<std::vector<P>, Int> lift_all(const P& f,
                                               const std::vector<P>& fac,
                                               const Int& p, const Int& bound) {
  std::vector<P> out;
  Int mfin = p;
  for (size_t i = 0; i < fac.size(); i++) {
    P comp{Int(1)};
    for (size_t j = 0; j < fac.size(); j++)
      if (j != i) comp = mul(comp, fac[j], p);
    auto [g, m] = lift_factor(f, fac[i], comp, p, bound);
    out.push_back(std::move(g));
    mfin = std::move(m);
  }
  return {std::move(out), std::move(mfin)};
}

inline Int sym_coeff(const Int& c, const Int& m) {
  return 2 * c > m ? c - m : c;  // representative in (-m/2, m/2]
}

// Zassenhaus recombination: f monic squarefree over Z, pool = the Hensel
// lifts mod m of its irreducible factors mod p, with m beyond twice the
// factor-coefficient bound.  Returns the monic irreducible factors over Z.
inline std::vector<P> recombine(P f, std::vector<P> pool, const Int& m) {
  std::vector<P> out;
  int card = 1;
  while (2 * card <= static_cast<int>(pool.size())) {
    std::vector<int> idx(static_cast<size_t>(card));
    for (int i = 0; i < card; i++) idx[static_cast<size_t>(i)] = i;
    bool hit = false;
    for (;;) {
      P prod{Int(1)};
      for (int i : idx) prod = mul(prod, pool[static_cast<size_t>(i)], m);
      P cand(prod.size());
      for (size_t k = 0; k < prod.size(); k++) cand[k] = sym_coeff(prod[k], m);
      up_trim(cand);
      auto [q, r] = zp_divmod_monic(f, cand);
      if (up_deg(r) < 0) {
        out.push_back(std::move(cand));
        f = std::move(q);
        std::vector<P> rest;
        for (int j = 0; j < static_cast<int>(pool.size()); j++)
          if (std::find(idx.begin(), idx.end(), j) == idx.end())
            rest.push_back(std::move(pool[static_cast<size_t>(j)]));
        pool = std::move(rest);
        hit = true;
        break;
      }
      int i = card - 1;
      while (i >= 0 &&
             idx[static_cast<size_t>(i)] ==
                 static_cast<int>(pool.size()) - card + i)
        i--;
      if (i < 0) break;
      idx[static_cast<size_t>(i)]++;
      for (int j = i + 1; j < card; j++)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    if (hit)
      card = 1;
    else
      card++;
  }
  if (up_deg(f) > 0)
    out.push_back(std::move(f));
  else
    require(up_deg(f) == 0 && f[0] == 1, "InternalError",
            "recombination left a nontrivial constant");
  return out;
}

}  // namespace qdetail

// ---- factorization over Z and Q -------------------------------------------------

// irreducible factors (primitive, positive leading coefficient) of a primitive
// squarefree polynomial with positive leading coefficient and degree >= 1
inline std::vector<std::vector<Int>> factor_squarefree_primitive(
    std::vector<Int> f) {
  up_trim(f);
  int n = up_deg(f);
  require(n >= 1 && f.back() > 0, "DomainError",
          "factorization input must be primitive with a positive lead");
  if (n == 1) return {std::move(f)};

  // monic transform F(x) = a^(n-1) f(x/a); trivial when f is already monic
  Int a = f.back();
  std::vector<Int> F = f;
  if (a != 1) {
    F[static_cast<size_t>(n)] = 1;
    Int pw = 1;
    for (int i = n - 1; i >= 0; i--) {
      F[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] * pw;
      pw *= a;
    }
  }

  // pick an odd prime with squarefree reduction
  Int p = 0;
  for (Int cand = 3;; cand += 2) {
    if (!is_prime(cand)) continue;
    qdetail::P fb = qdetail::norm(F, cand);
    if (up_deg(fb) != n) continue;
    qdetail::P fd = qdetail::norm(up_derivative(F), cand);
    if (up_deg(qdetail::gcd_fp(fb, fd, cand)) == 0) {
      p = cand;
      break;
    }
  }

  Rng rng(0x5eedULL * 2654435761ULL + p.get_ui());
  auto facp = qdetail::factor_fp_squarefree(qdetail::norm(F, p), p, rng);
  if (facp.size() == 1) return {std::move(f)};  // irreducible mod p

  // factor-coefficient bound: |G_i| <= binom(n, n/2) * ||F||_2 for monic G | F
  Int s2 = 0;
  for (const Int& c : F) s2 += c * c;
  Int nrm;
  mpz_sqrt(nrm.get_mpz_t(), s2.get_mpz_t());
  nrm += 1;
  Int bound = 2 * binomial(Int(n), static_cast<unsigned long>(n / 2)) * nrm + 1;

  auto [lifted, m] = qdetail::lift_all(F, facp, p, bound);
  auto facs = qdetail::recombine(F, std::move(lifted), m);

  // map factors of F back through x -> a*x and take primitive parts
  std::vector<std::vector<Int>> out;
  for (auto& G : facs) {
    if (a != 1) {
      Int pw = 1;
      for (size_t i = 0; i < G.size(); i++) {
        G[i] *= pw;
        pw *= a;
      }
      G = zp_primitive(std::move(G));
    }
    out.push_back(std::move(G));
  }

  std::vector<Int> prod{Int(1)};
  for (const auto& g : out) prod = up_mul(prod, g, Int(0));
  up_trim(prod);
  require(prod == f, "InternalError", "factor product does not reproduce input");
  return out;
}

struct ZFactorUnit {
  std::vector<Int> poly;  // primitive irreducible, positive leading coefficient
  int mult = 0;
};

// complete factorization f = content * prod poly^mult over Z; the content
// carries the sign.  Factors are sorted by degree, then coefficients.
inline std::vector<ZFactorUnit> factor_z_poly(std::vector<Int> f,
                                              Int* content_out = nullptr) {
  up_trim(f);
  require(!f.empty(), "DomainError", "cannot factor the zero polynomial");
  Int cont = zp_content(f);
  if (f.back() < 0) cont = -cont;
  if (content_out) *content_out = cont;
  if (up_deg(f) == 0) return {};
  std::vector<Int> g = zp_primitive(std::move(f));

  std::vector<Int> h = zp_gcd(g, up_derivative(g));
  std::vector<Int> s;
  if (up_deg(h) == 0) {
    s = g;
  } else {
    auto q = zp_divide_exact(g, h);
    require(q.has_value(), "InternalError", "squarefree split failed");
    s = zp_primitive(std::move(*q));
  }

  std::vector<ZFactorUnit> out;
  std::vector<Int> rem = g;
  for (auto& irr : factor_squarefree_primitive(std::move(s))) {
    int mult = 0;
    for (;;) {
      auto q = zp_divide_exact(rem, irr);
      if (!q) break;
      rem = std::move(*q);
      mult++;
    }
    require(mult >= 1, "InternalError", "squarefree factor lost its multiplicity");
    out.push_back({std::move(irr), mult});
  }
  require(up_deg(rem) == 0 && rem[0] == 1, "InternalError",
          "incomplete factorization");

  std::sort(out.begin(), out.end(),
            [](const ZFactorUnit& x, const ZFactorUnit& y) {
              if (up_deg(x.poly) != up_deg(y.poly))
                return up_deg(x.poly) < up_deg(y.poly);
              for (size_t i = x.poly.size(); i-- > 0;)
                if (x.poly[i] != y.poly[i]) return x.poly[i] < y.poly[i];
              return false;
            });
  return out;
}

struct QFactorUnit {
  std::vector<Rat> poly;  // monic irreducible over Q
  int mult = 0;
};

// monic irreducible factorization over Q (the scalar in front is implied)
inline std::vector<QFactorUnit> factor_q_poly(std::vector<Rat> f) {
  up_trim(f);
  require(!f.empty(), "DomainError", "cannot factor the zero polynomial");
  Int den = 1;
  for (const Rat& c : f) den = lcm(den, Int(c.get_den()));
  std::vector<Int> zf;
  zf.reserve(f.size());
  for (const Rat& c : f) {
    Rat sc = c * Rat(den);
    zf.push_back(Int(sc.get_num()));
  }
  std::vector<QFactorUnit> out;
  for (auto& u : factor_z_poly(std::move(zf))) {
    std::vector<Rat> mo(u.poly.begin(), u.poly.end());
    Rat lc = mo.back();
    for (Rat& c : mo) c /= lc;
    out.push_back({std::move(mo), u.mult});
  }
  return out;
}

// clear denominators: the integer polynomial lcm(dens) * f
inline std::vector<Int> qp_to_z(const std::vector<Rat>& f) {
  Int den = 1;
  for (const Rat& c : f) den = lcm(den, Int(c.get_den()));
  std::vector<Int> z;
  z.reserve(f.size());
  for (const Rat& c : f) {
    Rat s = c * Rat(den);
    z.push_back(Int(s.get_num()));
  }
  return z;
}

// monic gcd over Q (empty only when both inputs are zero)
inline std::vector<Rat> qp_gcd_monic(const std::vector<Rat>& a,
                                     const std::vector<Rat>& b) {
  std::vector<Int> g = zp_gcd(qp_to_z(a), qp_to_z(b));
  if (g.empty()) return {};
  std::vector<Rat> r(g.begin(), g.end());
  Rat lc = r.back();
  for (Rat& c : r) c /= lc;
  return r;
}

inline bool qp_squarefree(const std::vector<Rat>& f) {
  std::vector<Rat> g = f;
  up_trim(g);
  if (up_deg(g) < 1) return false;
  return up_deg(qp_gcd_monic(g, up_derivative(g))) == 0;
}

inline bool irreducible_q(const std::vector<Rat>& f) {
  std::vector<Rat> g = f;
  up_trim(g);
  if (up_deg(g) < 1) return false;
  auto fac = factor_q_poly(std::move(g));
  return fac.size() == 1 && fac[0].mult == 1;
}

// ---- necessary domain check for one-relation presentations ----------------------

// Cheap necessary condition for a presentation with a single defining relation
// to be an integral domain: the relation must not split into two non-unit
// factors.  Returns a warning message when that fails; nullopt when the check
// passes or does not apply (no relation, several relations, or a relation in
// more than one variable beyond the content test).
inline std::optional<std::string> domain_warning(const RingPtr& R) {
  if (R->relations.size() != 1) return std::nullopt;
  const ZPolyM& rel = R->relations[0];
  if (rel.is_zero() || rel.total_degree() < 1) return std::nullopt;

  Int cont = 0;
  for (const auto& tm : rel.t) cont = gcd(cont, tm.second);
  if (cont > 1)
    return "the defining relation has integer content " + to_string(cont) +
           "; the presented quotient has zero divisors and is not an integral "
           "domain";

  int used = -1, count = 0;
  for (int v = 0; v < R->nvars(); v++)
    if (rel.uses_var(v)) {
      count++;
      used = v;
    }
  if (count != 1) return std::nullopt;

  std::vector<Int> f(static_cast<size_t>(rel.degree_in(used)) + 1, Int(0));
  for (const auto& tm : rel.t)
    f[static_cast<size_t>(tm.first.e[static_cast<size_t>(used)])] = tm.second;
  int pieces = 0;
  for (const auto& u : factor_z_poly(std::move(f))) pieces += u.mult;
  if (pieces >= 2)
    return "the defining relation in " + R->vars.names[static_cast<size_t>(used)] +
           " factors over the rationals; the presented quotient has zero "
           "divisors and is not an integral domain";
  return std::nullopt;
}

}  // namespace disceq
