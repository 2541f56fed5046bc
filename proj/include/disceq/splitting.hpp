// Splitting data for Omega = K[X]/(P): an extension G = K[u]/(Q) of K that
// contains all n zeros theta^(1), ..., theta^(n) of P, with u integral over
// A (Q is monic in A[X]).  Elements of G carry exact K-coordinates on the
// u-power basis; conjugates alpha^(j) of elements of Omega are evaluated by
// substituting the expressed roots into coordinate polynomials.
//
// Over K = Q the data is constructed from scratch (splitting field by
// successive extensions, then the primitive element is scaled integral).
// Over any other base the caller supplies the data and every invariant is
// verified before use: Q monic over A, P(theta^(j)) = 0 in G, and the n
// roots pairwise distinct.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disceq/etale.hpp"
#include "disceq/numfield.hpp"

namespace disceq {

struct SplittingData {
  EtalePtr owner;
  int degree = 0;                   // d = [G : K]
  std::vector<RingElem> u_min_poly;  // Q, ascending, monic, in A[X]
  // roots[j] = coordinates of theta^(j+1) on 1, u, ..., u^{d-1}, over K
  std::vector<std::vector<FracElem>> roots;
  std::vector<FracElem> q_over_K;  // Q viewed over K (derived, for reduction)
};

using SplitPtr = std::shared_ptr<const SplittingData>;

// ---- integral scaling of a generator ----------------------------------------------

// If w is a zero of the monic P = X^d + sum a_i X^{d-i} over K and b0 in A
// is a common denominator (b0 a_i in A for all i), then u = b0 w is a zero
// of the monic Q = X^d + sum c_i X^{d-i} with c_i = a_i b0^i in A.
struct IntegralizedGenerator {
  RingElem scale;              // b0
  std::vector<RingElem> poly;  // Q, ascending
};

inline IntegralizedGenerator integralize_generator(const RingPtr& R,
                                                   std::vector<FracElem> P,
                                                   const RingElem& b0) {
  for (auto& c : P) {
    check_owner_ring(R, c.num);
    check_owner_ring(R, c.den);
  }
  check_owner_ring(R, b0);
  require(!is_zero(b0), "DomainError", "scale b0 must be nonzero");
  up_trim(P);
  int d = up_deg(P);
  require(d >= 1, "DegreeMismatch", "generator polynomial must be nonconstant");
  require(is_one(P[static_cast<size_t>(d)]), "NonMonic",
          "generator polynomial must be monic");
  std::vector<RingElem> Q(static_cast<size_t>(d) + 1, ring_int(R, 0));
  Q[static_cast<size_t>(d)] = ring_int(R, 1);
  FracElem pw = frac(b0);  // b0^i
  for (int i = 1; i <= d; i++) {
    FracElem ci = P[static_cast<size_t>(d - i)] * pw;
    std::optional<RingElem> cA = frac_in_ring(ci);
    require(cA.has_value(), "CoefficientNotInRing",
            "scaled coefficient c_" + std::to_string(i) + " = a_" +
                std::to_string(i) + " * b0^" + std::to_string(i) +
                " does not lie in A: b0 is not a common denominator");
    Q[static_cast<size_t>(d - i)] = *cA;
    pw = pw * frac(b0);
  }
  return {b0, std::move(Q)};
}

// ---- elements of G ----------------------------------------------------------------

struct GElem {
  SplitPtr owner;            // null only in default-constructed fillers
  std::vector<FracElem> c;   // length d, coordinates on 1, u, ...
};

inline void check_same_split(const SplitPtr& a, const SplitPtr& b) {
  if (a == b) return;
  require(a != nullptr && b != nullptr, "OwnerMismatch",
          "element without splitting data");
  check_same_algebra(a->owner, b->owner);
  bool same = a->u_min_poly.size() == b->u_min_poly.size();
  if (same)
    for (size_t i = 0; i < a->u_min_poly.size(); i++)
      if (!(a->u_min_poly[i] == b->u_min_poly[i])) {
        same = false;
        break;
      }
  require(same, "OwnerMismatch", "elements of different splitting fields");
}

inline void check_owner(const GElem& a, const GElem& b) {
  check_same_split(a.owner, b.owner);
}

// from a polynomial expression in u (any length; reduced mod Q)
inline GElem g_elem(SplitPtr S, std::vector<FracElem> c) {
  const RingPtr& R = S->owner->base;
  for (auto& x : c) {
    check_owner_ring(R, x.num);
    check_owner_ring(R, x.den);
  }
  up_trim(c);
  if (up_deg(c) >= S->degree) c = up_mod(std::move(c), S->q_over_K);
  c.resize(static_cast<size_t>(S->degree), frac_int(R, 0));
  for (auto& x : c) x = edetail::content_reduced(x);
  return {std::move(S), std::move(c)};
}

inline GElem g_const(const SplitPtr& S, const FracElem& x) {
  return g_elem(S, {x});
}
inline GElem g_int(const SplitPtr& S, const Int& n) {
  return g_const(S, frac_int(S->owner->base, n));
}
inline GElem g_gen(const SplitPtr& S) {
  return g_elem(S, {frac_int(S->owner->base, 0),
                    frac_int(S->owner->base, 1)});
}
inline GElem g_root(const SplitPtr& S, int j) {
  require(j >= 0 && j < S->owner->deg, "DimensionMismatch",
          "root index out of range");
  return {S, S->roots[static_cast<size_t>(j)]};
}

inline bool is_zero(const GElem& a) {
  for (auto& x : a.c)
    if (!is_zero(x)) return false;
  return true;
}

inline bool operator==(const GElem& a, const GElem& b) {
  check_owner(a, b);
  for (size_t i = 0; i < a.c.size(); i++)
    if (!(a.c[i] == b.c[i])) return false;
  return true;
}

inline GElem operator+(const GElem& a, const GElem& b) {
  check_owner(a, b);
  std::vector<FracElem> c;
  for (size_t i = 0; i < a.c.size(); i++)
    c.push_back(edetail::content_reduced(a.c[i] + b.c[i]));
  return {a.owner, std::move(c)};
}

inline GElem operator-(const GElem& a) {
  std::vector<FracElem> c;
  for (auto& x : a.c) c.push_back(-x);
  return {a.owner, std::move(c)};
}

inline GElem operator-(const GElem& a, const GElem& b) { return a + (-b); }

inline GElem operator*(const GElem& a, const GElem& b) {
  check_owner(a, b);
  const RingPtr& R = a.owner->owner->base;
  std::vector<FracElem> c = up_mul(a.c, b.c, frac_int(R, 0));
  return g_elem(a.owner, std::move(c));
}

inline GElem operator*(const FracElem& s, const GElem& a) {
  std::vector<FracElem> c;
  for (auto& x : a.c) c.push_back(edetail::content_reduced(s * x));
  return {a.owner, std::move(c)};
}

inline GElem pow(const GElem& a, unsigned long e) {
  GElem r = g_int(a.owner, 1);
  for (unsigned long i = 0; i < e; i++) r = r * a;
  return r;
}

// the value in K when the element is a constant
inline std::optional<FracElem> g_as_K(const GElem& a) {
  for (size_t i = 1; i < a.c.size(); i++)
    if (!is_zero(a.c[i])) return std::nullopt;
  return a.c.empty() ? frac_int(a.owner->owner->base, 0) : a.c[0];
}

inline std::string to_string(const GElem& a) {
  std::string s;
  for (size_t i = 0; i < a.c.size(); i++) {
    if (is_zero(a.c[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(a.c[i]) + ")";
    if (i >= 1) s += "*u";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

// ---- construction and verification -------------------------------------------------

// Verify user-supplied splitting data: Q monic over A, every expressed root
// a zero of P in K[u]/(Q), roots pairwise distinct.  (Q(u) = 0 holds
// symbolically since u is X mod Q.)  Degree of the data is deg Q.
inline SplitPtr make_splitting_data(EtalePtr E, std::vector<RingElem> Q,
                                    std::vector<std::vector<FracElem>> roots) {
  const RingPtr& R = E->base;
  for (auto& c : Q) check_owner_ring(R, c);
  up_trim(Q);
  int d = up_deg(Q);
  require(d >= 1, "VerificationFailed", "u_min_poly must be nonconstant");
  require(is_one(Q[static_cast<size_t>(d)]), "VerificationFailed",
          "u_min_poly must be monic over A");
  int n = E->deg;
  require(static_cast<int>(roots.size()) == n, "VerificationFailed",
          "expected " + std::to_string(n) + " root vectors, got " +
              std::to_string(roots.size()));
  for (auto& r : roots) {
    for (auto& x : r) {
      check_owner_ring(R, x.num);
      check_owner_ring(R, x.den);
    }
    up_trim(r);
    require(up_deg(r) < d, "VerificationFailed",
            "root coordinates exceed the u-basis 1, u, ..., u^{d-1}");
    r.resize(static_cast<size_t>(d), frac_int(R, 0));
  }
  auto S = std::make_shared<SplittingData>();
  S->owner = std::move(E);
  S->degree = d;
  S->u_min_poly = std::move(Q);
  S->roots = std::move(roots);
  for (auto& c : S->u_min_poly) S->q_over_K.push_back(frac(c));
  const EtalePtr& A = S->owner;
  for (int j = 0; j < n; j++) {
    GElem acc = g_int(S, 0);
    GElem rt = g_root(S, j);
    for (int i = A->deg; i >= 0; i--)
      acc = acc * rt + g_const(S, A->min_poly[static_cast<size_t>(i)]);
    require(is_zero(acc), "VerificationFailed",
            "P(theta^(" + std::to_string(j + 1) +
                ")) does not vanish in K[u]/(Q)");
  }
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      require(!(g_root(S, i) == g_root(S, j)), "VerificationFailed",
              "root vectors " + std::to_string(i + 1) + " and " +
                  std::to_string(j + 1) + " coincide");
  return S;
}

namespace sdetail {

inline Rat rat_of(const FracElem& x) {
  Int n = x.num.rep.is_zero() ? Int(0) : x.num.rep.lc();
  Int d = x.den.rep.is_zero() ? Int(0) : x.den.rep.lc();
  return Rat(n) / Rat(d);
}

}  // namespace sdetail

// Built-in construction over K = Q: split P by successive number-field
// extensions, then scale the primitive element integral over Z.
inline SplitPtr splitting_data(const EtalePtr& E) {
  const RingPtr& R = E->base;
  require(R->nvars() == 0, "UnsupportedBase",
          "built-in splitting construction requires K = Q; supply verified "
          "splitting data for other bases");
  std::vector<Rat> Pq;
  for (auto& c : E->min_poly) Pq.push_back(sdetail::rat_of(c));
  SplitFieldQ sf = splitting_field_q(Pq);
  int d = static_cast<int>(sf.min_poly.size()) - 1;
  Int b0 = 1;
  for (auto& c : sf.min_poly) b0 = lcm(b0, Int(c.get_den()));
  std::vector<FracElem> Mk;
  for (auto& c : sf.min_poly)
    Mk.push_back(frac_int(R, Int(c.get_num()), Int(c.get_den())));
  IntegralizedGenerator iq = integralize_generator(R, Mk, ring_int(R, b0));
  std::vector<std::vector<FracElem>> roots;
  for (auto& r : sf.roots) {
    std::vector<FracElem> row;
    Rat pw(1);
    for (int i = 0; i < d; i++) {
      Rat v = r[static_cast<size_t>(i)] / pw;
      row.push_back(frac_int(R, Int(v.get_num()), Int(v.get_den())));
      pw *= Rat(b0);
    }
    roots.push_back(std::move(row));
  }
  return make_splitting_data(E, std::move(iq.poly), std::move(roots));
}

// ---- conjugates --------------------------------------------------------------------

// alpha^(j) = sum_i c_i (theta^(j))^i in G, for j = 1..n
inline std::vector<GElem> conjugates(const AlgElem& alpha, const SplitPtr& S) {
  check_same_algebra(alpha.owner, S->owner);
  std::vector<GElem> out;
  int n = S->owner->deg;
  for (int j = 0; j < n; j++) {
    GElem acc = g_int(S, 0);
    GElem rt = g_root(S, j);
    for (int i = n - 1; i >= 0; i--)
      acc = acc * rt + g_const(S, alpha.coords[static_cast<size_t>(i)]);
    out.push_back(std::move(acc));
  }
  return out;
}

// prod (X - gamma_l) as a monic polynomial with G coefficients, ascending
inline std::vector<GElem> g_poly_from_roots(const SplitPtr& S,
                                            const std::vector<GElem>& gammas) {
  std::vector<GElem> F{g_int(S, 1)};
  for (auto& g : gammas) {
    check_same_split(S, g.owner);
    std::vector<GElem> nf(F.size() + 1, g_int(S, 0));
    for (size_t k = 0; k < F.size(); k++) {
      nf[k + 1] = nf[k + 1] + F[k];
      nf[k] = nf[k] - g * F[k];
    }
    F = std::move(nf);
  }
  return F;
}

// D(alpha) by the product formula prod_{i<j} (alpha^(i) - alpha^(j))^2; a
// symmetric function of the conjugates, so the value lies in K
inline FracElem disc_via_conjugates(const AlgElem& alpha, const SplitPtr& S) {
  std::vector<GElem> cj = conjugates(alpha, S);
  GElem p = g_int(S, 1);
  for (size_t i = 0; i < cj.size(); i++)
    for (size_t j = i + 1; j < cj.size(); j++) {
      GElem diff = cj[i] - cj[j];
      p = p * diff * diff;
    }
  std::optional<FracElem> v = g_as_K(p);
  require(v.has_value(), "DomainError",
          "conjugate product did not reduce to K");
  return frac_simplified(*v);
}

}  // namespace disceq
