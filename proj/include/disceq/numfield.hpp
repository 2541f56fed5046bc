#pragma once

// Exact number fields over Q on a power basis: G = Q[u]/(M) with M monic
// irreducible.  Provides field arithmetic, resultant-based norms, minimal
// polynomials, Trager factorization of univariate polynomials over G, and the
// construction of the splitting field of a separable rational polynomial by
// successive primitive-element extensions.
//
// Everything here is exact rational arithmetic; no floating point.

#include <memory>
#include <tuple>
#include <utility>
#include <vector>

#include "disceq/discriminant.hpp"
#include "disceq/qpoly.hpp"
#include "disceq/util.hpp"

namespace disceq {

struct NumField {
  std::vector<Rat> M;  // monic, ascending; irreducible over Q by construction
  int d = 0;           // degree
};

using NFPtr = std::shared_ptr<const NumField>;

inline NFPtr make_field(std::vector<Rat> M) {
  up_trim(M);
  require(up_deg(M) >= 1 && M.back() == 1, "DomainError",
          "a number field needs a monic minimal polynomial of degree >= 1");
  auto F = std::make_shared<NumField>();
  F->d = up_deg(M);
  F->M = std::move(M);
  return F;
}

// the trivial field Q itself, presented as Q[u]/(u)
inline NFPtr field_q() { return make_field({Rat(0), Rat(1)}); }

namespace nfdetail {

// reduce an arbitrary coefficient vector modulo the monic M, padded to size d
inline std::vector<Rat> reduce(std::vector<Rat> v, const std::vector<Rat>& M,
                               int d) {
  up_trim(v);
  for (int k = up_deg(v); k >= d; k = up_deg(v)) {
    Rat c = v[static_cast<size_t>(k)];
    for (int j = 0; j <= d; j++)
      v[static_cast<size_t>(k - d + j)] -= c * M[static_cast<size_t>(j)];
    up_trim(v);
  }
  v.resize(static_cast<size_t>(d), Rat(0));
  return v;
}

// extended Euclid over Q[t]: (monic gcd, s, t) with s*a + t*b = gcd
inline std::tuple<std::vector<Rat>, std::vector<Rat>, std::vector<Rat>>
gcd_ext_q(std::vector<Rat> a, std::vector<Rat> b) {
  up_trim(a);
  up_trim(b);
  std::vector<Rat> r0 = std::move(a), r1 = std::move(b);
  std::vector<Rat> s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = up_divmod(r0, r1, Rat(0));
    std::vector<Rat> s2 = up_add(s0, up_neg(up_mul(q, s1, Rat(0))));
    std::vector<Rat> t2 = up_add(t0, up_neg(up_mul(q, t1, Rat(0))));
    up_trim(s2);
    up_trim(t2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.empty() && r0.back() != 1) {
    Rat lc = r0.back();
    for (Rat& c : r0) c /= lc;
    for (Rat& c : s0) c /= lc;
    for (Rat& c : t0) c /= lc;
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

}  // namespace nfdetail

struct NumElem {
  NFPtr F;              // null only in never-used default placeholders
  std::vector<Rat> c;   // size d, reduced coordinates on 1, u, ..., u^(d-1)

  NumElem() = default;
  NumElem(NFPtr field, std::vector<Rat> coords)
      : F(std::move(field)),
        c(nfdetail::reduce(std::move(coords), F->M, F->d)) {}

  bool operator==(const NumElem& o) const { return F == o.F && c == o.c; }
  bool operator!=(const NumElem& o) const { return !(*this == o); }
};

inline NumElem nf_elem(NFPtr F, std::vector<Rat> coords) {
  return NumElem(std::move(F), std::move(coords));
}

inline NumElem nf_rat(NFPtr F, const Rat& r) {
  return NumElem(std::move(F), {r});
}

inline NumElem nf_gen(NFPtr F) { return NumElem(std::move(F), {Rat(0), Rat(1)}); }

inline bool is_zero(const NumElem& a) {
  for (const Rat& x : a.c)
    if (x != 0) return false;
  return true;
}

inline bool is_one(const NumElem& a) {
  if (a.c.empty() || a.c[0] != 1) return false;
  for (size_t i = 1; i < a.c.size(); i++)
    if (a.c[i] != 0) return false;
  return true;
}

namespace nfdetail {
inline void check_same(const NumElem& a, const NumElem& b) {
  require(a.F && b.F && a.F == b.F, "OwnerMismatch",
          "number-field elements belong to different fields");
}
}  // namespace nfdetail

inline NumElem operator+(const NumElem& a, const NumElem& b) {
  nfdetail::check_same(a, b);
  std::vector<Rat> r = a.c;
  for (size_t i = 0; i < r.size(); i++) r[i] += b.c[i];
  NumElem out;
  out.F = a.F;
  out.c = std::move(r);
  return out;
}

inline NumElem operator-(const NumElem& a) {
  NumElem out = a;
  for (Rat& x : out.c) x = -x;
  return out;
}

inline NumElem operator-(const NumElem& a, const NumElem& b) { return a + (-b); }

inline NumElem operator*(const NumElem& a, const NumElem& b) {
  nfdetail::check_same(a, b);
  std::vector<Rat> conv(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); i++) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); j++) conv[i + j] += a.c[i] * b.c[j];
  }
  NumElem out;
  out.F = a.F;
  out.c = nfdetail::reduce(std::move(conv), a.F->M, a.F->d);
  return out;
}

inline NumElem nf_scale(const NumElem& a, const Rat& r) {
  NumElem out = a;
  for (Rat& x : out.c) x *= r;
  return out;
}

inline NumElem nf_inv(const NumElem& a) {
  require(a.F != nullptr, "DomainError", "inverse of an unowned element");
  require(!is_zero(a), "DomainError", "division by zero in a number field");
  std::vector<Rat> ap = a.c;
  up_trim(ap);
  auto [g, s, t] = nfdetail::gcd_ext_q(ap, a.F->M);
  (void)t;
  require(up_deg(g) == 0, "DomainError",
          "element is a zero divisor; the minimal polynomial is reducible");
  return NumElem(a.F, std::move(s));
}

inline NumElem operator/(const NumElem& a, const NumElem& b) {
  return a * nf_inv(b);
}

// ---- polynomials over a number field --------------------------------------------

using NPoly = std::vector<NumElem>;

inline NPoly npoly_from_q(const NFPtr& F, const std::vector<Rat>& f) {
  NPoly r;
  r.reserve(f.size());
  for (const Rat& c : f) r.push_back(nf_rat(F, c));
  up_trim(r);
  return r;
}

inline NPoly npoly_monic(NPoly f) {
  up_trim(f);
  require(!f.empty(), "DomainError", "cannot normalize the zero polynomial");
  if (!is_one(f.back())) {
    NumElem il = nf_inv(f.back());
    for (NumElem& c : f) c = c * il;
  }
  return f;
}

// monic gcd over the field (empty only when both inputs are zero)
inline NPoly npoly_gcd(NPoly a, NPoly b) {
  up_trim(a);
  up_trim(b);
  while (!b.empty()) {
    NPoly r = up_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return npoly_monic(std::move(a));
}

// Norm from G[x] down to Q[x]: the resultant in u of M(u) and g(x, u),
// computed by evaluation at deg(M)*deg(g)+1 rational points followed by
// Lagrange interpolation.  For monic g this is the product of the conjugate
// polynomials, monic of degree deg(M)*deg(g).
inline std::vector<Rat> nf_norm(NPoly g) {
  up_trim(g);
  int e = up_deg(g);
  require(e >= 1, "DomainError", "norm needs a nonconstant polynomial");
  NFPtr F = g.back().F;
  require(F != nullptr, "DomainError", "norm of unowned coefficients");
  int npts = F->d * e + 1;

  std::vector<Rat> xs, ys;
  xs.reserve(static_cast<size_t>(npts));
  ys.reserve(static_cast<size_t>(npts));
  NumElem zero = nf_rat(F, Rat(0));
  for (int t = 0; t < npts; t++) {
    Rat x0(t);
    NumElem v = up_eval(g, nf_rat(F, x0), zero);
    std::vector<Rat> pu = v.c;
    up_trim(pu);
    xs.push_back(x0);
    ys.push_back(pu.empty() ? Rat(0) : resultant_field(F->M, pu, Rat(1)));
  }

  // Lagrange interpolation via the master product W = prod (X - xs[i])
  std::vector<Rat> W{Rat(1)};
  for (const Rat& x0 : xs) W = up_mul(W, {-x0, Rat(1)}, Rat(0));
  std::vector<Rat> Wd = up_derivative(W);
  std::vector<Rat> N(static_cast<size_t>(npts), Rat(0));
  for (int i = 0; i < npts; i++) {
    if (ys[static_cast<size_t>(i)] == 0) continue;
    // synthetic division of W by (X - xs[i])
    std::vector<Rat> qi(static_cast<size_t>(npts), Rat(0));
    Rat carry = 0;
    for (int k = npts; k >= 1; k--) {
      carry = W[static_cast<size_t>(k)] + carry * xs[static_cast<size_t>(i)];
      qi[static_cast<size_t>(k - 1)] = carry;
    }
    Rat den = up_eval(Wd, xs[static_cast<size_t>(i)], Rat(0));
    Rat sc = ys[static_cast<size_t>(i)] / den;
    for (int k = 0; k < npts; k++)
      N[static_cast<size_t>(k)] += sc * qi[static_cast<size_t>(k)];
  }
  up_trim(N);
  if (is_one(g.back()))
    require(up_deg(N) == F->d * e && N.back() == 1, "InternalError",
            "norm of a monic polynomial came out non-monic");
  return N;
}

// minimal polynomial over Q of an element (monic irreducible): the squarefree
// part of the characteristic polynomial Norm(x - alpha)
inline std::vector<Rat> nf_min_poly(const NumElem& a) {
  require(a.F != nullptr, "DomainError", "minimal polynomial of unowned element");
  NPoly xa{-a, nf_rat(a.F, Rat(1))};
  std::vector<Rat> cp = nf_norm(std::move(xa));
  std::vector<Rat> g = qp_gcd_monic(cp, up_derivative(cp));
  if (up_deg(g) == 0) return cp;
  auto [q, r] = qp_divmod(std::move(cp), g);
  require(r.empty(), "InternalError", "characteristic polynomial split failed");
  return q;
}

// ---- Trager factorization --------------------------------------------------------

// monic irreducible factors of a monic squarefree f over G
inline std::vector<NPoly> factor_nf_squarefree(NPoly f) {
  up_trim(f);
  int n = up_deg(f);
  require(n >= 1 && is_one(f.back()), "DomainError",
          "factorization input must be monic of degree >= 1");
  if (n == 1) return {std::move(f)};
  NFPtr F = f.back().F;
  NumElem zero = nf_rat(F, Rat(0));
  NumElem u = nf_gen(F);

  for (int trial = 0; trial < 200; trial++) {
    long k = (trial % 2 == 1) ? (trial + 1) / 2 : -(trial / 2);
    NumElem shift = nf_scale(u, Rat(-k));
    NPoly g = (k == 0) ? f : up_shift(f, shift, zero);
    std::vector<Rat> N = nf_norm(g);
    if (!qp_squarefree(N)) continue;

    auto qf = factor_q_poly(N);
    if (qf.size() == 1) return {std::move(f)};  // norm irreducible => f is too

    std::vector<NPoly> out;
    NumElem unshift = nf_scale(u, Rat(k));
    int degsum = 0;
    for (const auto& Ni : qf) {
      NPoly h = npoly_gcd(g, npoly_from_q(F, Ni.poly));
      require(up_deg(h) >= 1, "InternalError",
              "norm factor shares no root with the input");
      degsum += up_deg(h);
      out.push_back(k == 0 ? std::move(h) : up_shift(h, unshift, zero));
    }
    require(degsum == n, "InternalError", "factor degrees do not add up");
    return out;
  }
  require(false, "InternalError", "no shift produced a squarefree norm");
  return {};
}

struct NFFactor {
  NPoly poly;  // monic irreducible over G
  int mult = 0;
};

// complete monic factorization over G of a monic f of degree >= 1
inline std::vector<NFFactor> factor_nf(NPoly f) {
  up_trim(f);
  require(up_deg(f) >= 1 && is_one(f.back()), "DomainError",
          "factorization input must be monic of degree >= 1");
  NumElem zero = nf_rat(f.back().F, Rat(0));

  NPoly g = npoly_gcd(f, up_derivative(f));
  NPoly s;
  if (up_deg(g) == 0) {
    s = f;
  } else {
    auto [q, r] = up_divmod(f, g, zero);
    require(r.empty(), "InternalError", "squarefree split failed over G");
    s = npoly_monic(std::move(q));
  }

  std::vector<NFFactor> out;
  NPoly rem = std::move(f);
  for (auto& irr : factor_nf_squarefree(std::move(s))) {
    int mult = 0;
    for (;;) {
      auto [q, r] = up_divmod(rem, irr, zero);
      if (!r.empty()) break;
      rem = std::move(q);
      mult++;
    }
    require(mult >= 1, "InternalError", "factor lost its multiplicity over G");
    out.push_back({std::move(irr), mult});
  }
  require(up_deg(rem) == 0 && is_one(rem[0]), "InternalError",
          "incomplete factorization over G");
  return out;
}

// ---- splitting fields ------------------------------------------------------------

struct SplitFieldQ {
  std::vector<Rat> min_poly;               // monic irreducible over Q
  std::vector<std::vector<Rat>> roots;     // n root expressions on the power
                                           // basis of the primitive element
};

// splitting field of a monic separable P over Q, by successive extensions
// with primitive elements produced from squarefree shifted norms
inline SplitFieldQ splitting_field_q(std::vector<Rat> P) {
  up_trim(P);
  int n = up_deg(P);
  require(n >= 1 && P.back() == 1, "NonMonic",
          "splitting fields are built for monic polynomials");
  require(qp_squarefree(P) || n == 1, "DomainError",
          "splitting fields are built for separable polynomials");

  NFPtr F = field_q();
  for (int round = 0; round < 16; round++) {
    auto fac = factor_nf(npoly_from_q(F, P));
    const NPoly* pick = nullptr;
    for (const auto& u : fac) {
      require(u.mult == 1, "InternalError", "separable input factored with multiplicity");
      if (up_deg(u.poly) >= 2 &&
          (!pick || up_deg(u.poly) < up_deg(*pick)))
        pick = &u.poly;
    }
    if (!pick) {
      // fully split: collect the roots of the linear factors
      std::vector<std::vector<Rat>> roots;
      for (const auto& u : fac) {
        NumElem r0 = -u.poly[0];
        roots.push_back(r0.c);
      }
      std::sort(roots.begin(), roots.end());
      require(static_cast<int>(roots.size()) == n, "InternalError",
              "split produced the wrong number of roots");
      return {F->M, std::move(roots)};
    }

    const NPoly& h = *pick;
    if (F->d == 1) {
      std::vector<Rat> M2;
      M2.reserve(h.size());
      for (const NumElem& c : h) M2.push_back(c.c[0]);
      F = make_field(std::move(M2));
    } else {
      NumElem zero = nf_rat(F, Rat(0));
      NumElem u = nf_gen(F);
      bool extended = false;
      for (int trial = 0; trial < 200 && !extended; trial++) {
        long k = (trial % 2 == 1) ? (trial + 1) / 2 : -(trial / 2);
        NPoly g = (k == 0) ? h : up_shift(h, nf_scale(u, Rat(-k)), zero);
        std::vector<Rat> M2 = nf_norm(g);
        if (!qp_squarefree(M2)) continue;
        F = make_field(std::move(M2));
        extended = true;
      }
      require(extended, "InternalError", "no primitive-element shift worked");
    }
    require(F->d <= 64, "DomainError",
            "splitting field degree exceeds the supported bound of 64");
  }
  require(false, "InternalError", "splitting construction did not terminate");
  return {};
}

}  // namespace disceq
