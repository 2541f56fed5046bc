// Finite etale algebras Omega = K[X]/(P) over K = Frac(A), with P monic and
// separable of degree n >= 2:
//   - elements on the power basis 1, theta, ..., theta^{n-1} with exact
//     K-coordinates,
//   - characteristic polynomials of multiplication maps and element
//     discriminants D(alpha) = disc(charpoly(alpha)),
//   - A-orders given by module generators omega_1 = 1, ..., omega_m, with
//     verification (coordinate rank + multiplicative closure),
//   - a full system of representatives for (O cap K)+ / A+,
//   - A-equivalence tests for monic polynomials (shift X -> X + a) and for
//     primitive elements (difference in A).
//
// Omega need not be a field (P may factor over K), so elements have no
// division; all routines below use ring operations only.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disceq/discriminant.hpp"
#include "disceq/module.hpp"
#include "disceq/ring.hpp"

namespace disceq {

// ---- the algebra ----------------------------------------------------------------

struct EtaleAlgebra {
  RingPtr base;                    // A; the algebra lives over K = Frac(A)
  std::vector<FracElem> min_poly;  // P, ascending, monic, degree n >= 2
  int deg = 0;                     // n
};

using EtalePtr = std::shared_ptr<const EtaleAlgebra>;

namespace edetail {

// cancel the integer content shared by numerator and denominator (cheap; no
// ring division attempted)
inline FracElem content_reduced(const FracElem& x) {
  if (is_zero(x)) return frac(ring_int(x.num.owner, 0));
  Int cn = 0, cd = 0;
  for (auto& [m, c] : x.num.rep.t) cn = gcd(cn, c);
  for (auto& [m, c] : x.den.rep.t) cd = gcd(cd, c);
  Int g = gcd(cn, cd);
  if (g <= 1) return x;
  ZPolyM n2 = x.num.rep, d2 = x.den.rep;
  for (auto& [m, c] : n2.t) c = exact_div(c, g);
  for (auto& [m, c] : d2.t) c = exact_div(c, g);
  return frac(ring_elem(x.num.owner, n2), ring_elem(x.den.owner, d2));
}

}  // namespace edetail

inline EtalePtr make_etale(RingPtr base, std::vector<FracElem> P) {
  for (auto& c : P) {
    check_owner_ring(base, c.num);
    check_owner_ring(base, c.den);
  }
  up_trim(P);
  int n = up_deg(P);
  require(n >= 2, "DegreeMismatch",
          "defining polynomial must have degree >= 2");
  require(is_one(P[static_cast<size_t>(n)]), "NonMonic",
          "defining polynomial must be monic");
  std::vector<FracElem> g = up_gcd_field(P, up_derivative(P));
  require(up_deg(g) == 0, "Inseparable",
          "defining polynomial must be separable: gcd(P, P') has degree " +
              std::to_string(up_deg(g)));
  auto E = std::make_shared<EtaleAlgebra>();
  E->base = std::move(base);
  E->min_poly = std::move(P);
  E->deg = n;
  return E;
}

// over K = Q (base with no variables), from rational coefficients
inline EtalePtr make_etale_q(RingPtr base, const std::vector<Rat>& P) {
  std::vector<FracElem> Pk;
  for (auto& c : P) Pk.push_back(frac_int(base, c.get_num(), c.get_den()));
  return make_etale(std::move(base), std::move(Pk));
}

// ---- elements -------------------------------------------------------------------

struct AlgElem {
  EtalePtr owner;                // null only in default-constructed fillers
  std::vector<FracElem> coords;  // length n, coefficients on 1, theta, ...
};

inline void check_same_algebra(const EtalePtr& a, const EtalePtr& b) {
  if (a == b) return;
  require(a != nullptr && b != nullptr, "OwnerMismatch",
          "element without an algebra");
  bool same = (a->base == b->base || a->base->same_as(*b->base)) &&
              a->min_poly.size() == b->min_poly.size();
  if (same)
    for (size_t i = 0; i < a->min_poly.size(); i++)
      if (!(a->min_poly[i] == b->min_poly[i])) {
        same = false;
        break;
      }
  require(same, "OwnerMismatch", "elements of different algebras");
}

inline void check_owner(const AlgElem& a, const AlgElem& b) {
  check_same_algebra(a.owner, b.owner);
}

// from a polynomial expression in theta (any length; reduced mod P)
inline AlgElem alg_elem(EtalePtr E, std::vector<FracElem> coords) {
  const RingPtr& R = E->base;
  for (auto& c : coords) {
    check_owner_ring(R, c.num);
    check_owner_ring(R, c.den);
  }
  up_trim(coords);
  if (up_deg(coords) >= E->deg) coords = up_mod(std::move(coords), E->min_poly);
  coords.resize(static_cast<size_t>(E->deg), frac_int(R, 0));
  for (auto& c : coords) c = edetail::content_reduced(c);
  return {std::move(E), std::move(coords)};
}

inline AlgElem alg_const(const EtalePtr& E, const FracElem& c) {
  return alg_elem(E, {c});
}
inline AlgElem alg_int(const EtalePtr& E, const Int& n) {
  return alg_const(E, frac_int(E->base, n));
}
inline AlgElem alg_gen(const EtalePtr& E) {
  return alg_elem(E, {frac_int(E->base, 0), frac_int(E->base, 1)});
}

inline bool is_zero(const AlgElem& a) {
  for (auto& c : a.coords)
    if (!is_zero(c)) return false;
  return true;
}

inline bool operator==(const AlgElem& a, const AlgElem& b) {
  check_owner(a, b);
  for (size_t i = 0; i < a.coords.size(); i++)
    if (!(a.coords[i] == b.coords[i])) return false;
  return true;
}

inline AlgElem operator+(const AlgElem& a, const AlgElem& b) {
  check_owner(a, b);
  std::vector<FracElem> c;
  for (size_t i = 0; i < a.coords.size(); i++)
    c.push_back(edetail::content_reduced(a.coords[i] + b.coords[i]));
  return {a.owner, std::move(c)};
}

inline AlgElem operator-(const AlgElem& a) {
  std::vector<FracElem> c;
  for (auto& x : a.coords) c.push_back(-x);
  return {a.owner, std::move(c)};
}

inline AlgElem operator-(const AlgElem& a, const AlgElem& b) {
  return a + (-b);
}

inline AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  check_owner(a, b);
  const RingPtr& R = a.owner->base;
  std::vector<FracElem> c = up_mul(a.coords, b.coords, frac_int(R, 0));
  return alg_elem(a.owner, std::move(c));
}

inline AlgElem operator*(const FracElem& s, const AlgElem& a) {
  std::vector<FracElem> c;
  for (auto& x : a.coords) c.push_back(edetail::content_reduced(s * x));
  return {a.owner, std::move(c)};
}

inline AlgElem pow(const AlgElem& a, unsigned long e) {
  AlgElem r = alg_int(a.owner, 1);
  for (unsigned long i = 0; i < e; i++) r = r * a;
  return r;
}

inline std::string to_string(const AlgElem& a) {
  std::string s;
  for (size_t i = 0; i < a.coords.size(); i++) {
    if (is_zero(a.coords[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(a.coords[i]) + ")";
    if (i >= 1) s += "*theta";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

// ---- characteristic polynomials and discriminants --------------------------------

// characteristic polynomial of multiplication-by-alpha on the theta-basis,
// ascending and monic of degree n, by the Faddeev-LeVerrier recurrence
// (char 0, so the integer divisions are exact in K)
inline std::vector<FracElem> char_poly(const AlgElem& alpha) {
  const EtalePtr& E = alpha.owner;
  const RingPtr& R = E->base;
  int n = E->deg;
  FracElem zero = frac_int(R, 0), one = frac_int(R, 1);
  std::vector<std::vector<FracElem>> M(
      static_cast<size_t>(n), std::vector<FracElem>(static_cast<size_t>(n), zero));
  AlgElem cur = alpha;
  AlgElem th = alg_gen(E);
  for (int j = 0; j < n; j++) {
    if (j > 0) cur = cur * th;
    for (int i = 0; i < n; i++)
      M[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          cur.coords[static_cast<size_t>(i)];
  }
  std::vector<FracElem> c(static_cast<size_t>(n) + 1, zero);
  c[static_cast<size_t>(n)] = one;
  std::vector<std::vector<FracElem>> Mk = M;
  for (int k = 1; k <= n; k++) {
    FracElem tr = zero;
    for (int i = 0; i < n; i++)
      tr = tr + Mk[static_cast<size_t>(i)][static_cast<size_t>(i)];
    c[static_cast<size_t>(n - k)] =
        frac_simplified(-(tr / frac_int(R, Int(k))));
    if (k == n) break;
    for (int i = 0; i < n; i++)
      Mk[static_cast<size_t>(i)][static_cast<size_t>(i)] =
          Mk[static_cast<size_t>(i)][static_cast<size_t>(i)] +
          c[static_cast<size_t>(n - k)];
    std::vector<std::vector<FracElem>> nxt(
        static_cast<size_t>(n),
        std::vector<FracElem>(static_cast<size_t>(n), zero));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        FracElem acc = zero;
        for (int l = 0; l < n; l++)
          acc = acc + M[static_cast<size_t>(i)][static_cast<size_t>(l)] *
                          Mk[static_cast<size_t>(l)][static_cast<size_t>(j)];
        nxt[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            edetail::content_reduced(acc);
      }
    Mk = std::move(nxt);
  }
  return c;
}

// D(alpha) = prod_{i<j} (alpha_i - alpha_j)^2 over the conjugates, computed
// as the discriminant of the characteristic polynomial — no splitting data
// needed; nonzero exactly when alpha generates Omega over K
inline FracElem disc_element(const AlgElem& alpha) {
  std::vector<FracElem> cp = char_poly(alpha);
  return frac_simplified(
      discriminant_field(cp, frac_int(alpha.owner->base, 1)));
}

// ---- orders ---------------------------------------------------------------------

struct OrderModule {
  EtalePtr owner;
  std::vector<AlgElem> gens;  // omega_1 = 1 first
  // coord_forms[i][k] = theta^i-coordinate of omega_k; row i is the linear
  // form l_i, so  sum_k x_k omega_k  =  sum_i l_i(x) theta^i
  std::vector<std::vector<FracElem>> coord_forms;
};

namespace edetail {

inline int rank_over_K(std::vector<std::vector<FracElem>> M) {
  if (M.empty() || M[0].empty()) return 0;
  size_t rows = M.size(), cols = M[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; c++) {
    size_t p = r;
    while (p < rows && is_zero(M[p][c])) p++;
    if (p == rows) continue;
    std::swap(M[r], M[p]);
    for (size_t i = r + 1; i < rows; i++) {
      if (is_zero(M[i][c])) continue;
      FracElem f = M[i][c] / M[r][c];
      for (size_t j = c; j < cols; j++)
        M[i][j] = content_reduced(M[i][j] - f * M[r][j]);
    }
    r++;
  }
  return static_cast<int>(r);
}

}  // namespace edetail

// Verify that the A-module generated by 1, extra_gens... is an A-order of
// Omega: the coordinate forms must have rank n over K, and each product
// omega_i * omega_j must be an A-combination of the generators (solved over
// A; integrality over A is then automatic).
inline OrderModule check_order(const EtalePtr& E,
                               const std::vector<AlgElem>& extra_gens) {
  const RingPtr& R = E->base;
  int n = E->deg;
  std::vector<AlgElem> gens{alg_int(E, 1)};
  for (auto& g : extra_gens) {
    check_owner(gens[0], g);
    gens.push_back(g);
  }
  size_t m = gens.size();
  std::vector<std::vector<FracElem>> W(
      static_cast<size_t>(n), std::vector<FracElem>(m, frac_int(R, 0)));
  for (size_t k = 0; k < m; k++)
    for (int i = 0; i < n; i++)
      W[static_cast<size_t>(i)][k] = gens[k].coords[static_cast<size_t>(i)];
  int r = edetail::rank_over_K(W);
  require(r == n, "RankDeficient",
          "coordinate forms have rank " + std::to_string(r) + " < " +
              std::to_string(n) + " over K: the module does not span Omega");
  for (size_t i = 1; i < m; i++)  // omega_1 = 1 multiplies trivially
    for (size_t j = i; j < m; j++) {
      AlgElem p = gens[i] * gens[j];
      LinSolveA sol = solve_linear_A(R, W, p.coords);
      require(sol.solvable, "NotClosed",
              "omega_" + std::to_string(i + 1) + " * omega_" +
                  std::to_string(j + 1) +
                  " is not an A-combination of the generators");
    }
  return {E, std::move(gens), std::move(W)};
}

// Full system of representatives for (O cap K)+ / A+.  x in A^m lands in K
// exactly when l_1(x) = ... = l_{n-1}(x) = 0; the kernel generators' images
// under l_0 generate (O cap K)+ as an A-module, and the quotient by A = A*1
// is decided by quotient_finite.
inline QuotientReport order_K_part_reps(const OrderModule& O) {
  const RingPtr& R = O.owner->base;
  int n = O.owner->deg;
  std::vector<std::vector<FracElem>> rows(O.coord_forms.begin() + 1,
                                          O.coord_forms.end());
  std::vector<FracElem> rhs(static_cast<size_t>(n) - 1, frac_int(R, 0));
  LinSolveA sol = solve_linear_A(R, rows, rhs);
  std::vector<FracElem> images{frac_int(R, 1)};  // from the kernel vector e_1
  for (auto& x : sol.kernel) {
    FracElem img = frac_int(R, 0);
    for (size_t j = 0; j < x.size(); j++)
      img = img + O.coord_forms[0][j] * frac(x[j]);
    images.push_back(frac_simplified(img));
  }
  AModule M1 = a_module(R, {frac_int(R, 1)});
  AModule M2 = a_module(R, std::move(images));
  return quotient_finite(M1, M2);
}

// ---- A-equivalence --------------------------------------------------------------

namespace edetail {

// F = (X - c)^n for the forced c = -coeff_{n-1}(F)/n, i.e. fewer than two
// distinct zeros
inline bool single_zero(const RingPtr& R, const std::vector<RingElem>& F) {
  int n = up_deg(F);
  if (n < 2) return true;
  std::vector<FracElem> Fk;
  for (auto& a : F) Fk.push_back(frac(a));
  FracElem c = -(Fk[static_cast<size_t>(n) - 1] / frac_int(R, Int(n)));
  std::vector<FracElem> lin{-c, frac_int(R, 1)};
  std::vector<FracElem> pw = lin;
  for (int i = 1; i < n; i++) pw = up_mul(pw, lin, frac_int(R, 0));
  for (size_t i = 0; i + 1 < Fk.size(); i++)
    if (!(pw[i] == Fk[i])) return false;
  return true;
}

}  // namespace edetail

// Decide whether F2(X) = F1(X + a) for some a in A; both monic of the same
// degree n >= 2 with at least two distinct zeros.  Comparing X^{n-1}
// coefficients forces a = (coeff_{n-1}(F2) - coeff_{n-1}(F1))/n, so the test
// is: a in A (frac_in_ring) and F1(X + a) = F2 coefficientwise.
inline std::optional<RingElem> poly_equiv(const RingPtr& R,
                                          std::vector<RingElem> F1,
                                          std::vector<RingElem> F2) {
  for (auto& a : F1) check_owner_ring(R, a);
  for (auto& a : F2) check_owner_ring(R, a);
  up_trim(F1);
  up_trim(F2);
  int n = up_deg(F1);
  require(n == up_deg(F2), "DegreeMismatch",
          "polynomials of degrees " + std::to_string(n) + " and " +
              std::to_string(up_deg(F2)));
  require(n >= 1 && is_one(F1[static_cast<size_t>(n)]) &&
              is_one(F2[static_cast<size_t>(n)]),
          "NonMonic", "equivalence test needs monic polynomials");
  require(!edetail::single_zero(R, F1) && !edetail::single_zero(R, F2),
          "DegenerateInput",
          "a polynomial with fewer than two distinct zeros is outside the "
          "shift test");
  FracElem a = (frac(F2[static_cast<size_t>(n) - 1]) -
                frac(F1[static_cast<size_t>(n) - 1])) /
               frac_int(R, Int(n));
  std::optional<RingElem> aA = frac_in_ring(a);
  if (!aA) return std::nullopt;
  std::vector<RingElem> shifted = up_shift(F1, *aA, ring_int(R, 0));
  for (size_t i = 0; i < F2.size(); i++)
    if (!(shifted[i] == F2[i])) return std::nullopt;
  return aA;
}

// Decide whether alpha_1 - alpha_2 in A; both must generate Omega over K
// (nonzero discriminant).  The difference must be a constant coordinate
// vector whose value lies in A.
inline std::optional<RingElem> elem_equiv(const AlgElem& a1,
                                          const AlgElem& a2) {
  check_owner(a1, a2);
  require(!is_zero(disc_element(a1)), "NotPrimitive",
          "alpha_1 does not generate the algebra: D(alpha_1) = 0");
  require(!is_zero(disc_element(a2)), "NotPrimitive",
          "alpha_2 does not generate the algebra: D(alpha_2) = 0");
  AlgElem d = a1 - a2;
  for (size_t i = 1; i < d.coords.size(); i++)
    if (!is_zero(d.coords[i])) return std::nullopt;
  return frac_in_ring(d.coords[0]);
}

}  // namespace disceq
