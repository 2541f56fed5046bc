#pragma once

// Univariate polynomials over arbitrary coefficient structures (dense,
// ascending coefficients), resultants, and discriminants.
//
//   D(F) = prod_{i<j} (alpha_i - alpha_j)^2 = (-1)^{n(n-1)/2} Res(F, F')
//
// for monic F of degree n. Two engines:
//   - fields (Q, K, number fields): Euclidean polynomial remainder sequence;
//   - presented rings A (RingElem): Sylvester matrix over the integer
//     polynomial lifts, fraction-free Bareiss determinant, one reduction at
//     the end. This stays exact without any division theory inside A.

#include <vector>

#include "disceq/ring.hpp"

namespace disceq {

// ---- generic dense univariate helpers (El needs +, -, *, is_zero via ADL) ----

template <class El>
int up_deg(const std::vector<El>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; i--)
    if (!is_zero(f[static_cast<size_t>(i)])) return i;
  return -1;
}

template <class El>
void up_trim(std::vector<El>& f) {
  f.resize(static_cast<size_t>(up_deg(f) + 1), f.empty() ? El{} : f[0]);
}

template <class El>
std::vector<El> up_add(const std::vector<El>& a, const std::vector<El>& b) {
  std::vector<El> r = a.size() >= b.size() ? a : b;
  const std::vector<El>& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); i++) r[i] = r[i] + s[i];
  return r;
}

template <class El>
std::vector<El> up_mul(const std::vector<El>& a, const std::vector<El>& b,
                       const El& zero) {
  if (a.empty() || b.empty()) return {};
  std::vector<El> r(a.size() + b.size() - 1, zero);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

template <class El>
std::vector<El> up_neg(std::vector<El> f) {
  for (auto& c : f) c = -c;
  return f;
}

template <class El>
El up_eval(const std::vector<El>& f, const El& x, const El& zero) {
  El acc = zero;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; i--)
    acc = acc * x + f[static_cast<size_t>(i)];
  return acc;
}

// formal derivative; integer multiples built by repeated addition so El needs
// no integer action
template <class El>
std::vector<El> up_derivative(const std::vector<El>& f) {
  std::vector<El> r;
  for (size_t i = 1; i < f.size(); i++) {
    El acc = f[i];
    for (size_t k = 1; k < i; k++) acc = acc + f[i];
    r.push_back(acc);
  }
  return r;
}

// F(X + a) by Horner on (X + a)
template <class El>
std::vector<El> up_shift(const std::vector<El>& f, const El& a, const El& zero) {
  std::vector<El> r;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; i--) {
    // r = r*(X+a) + f[i]
    std::vector<El> next(r.size() + 1, zero);
    for (size_t j = 0; j < r.size(); j++) {
      next[j + 1] = next[j + 1] + r[j];
      next[j] = next[j] + r[j] * a;
    }
    if (next.empty()) next.push_back(zero);
    next[0] = next[0] + f[static_cast<size_t>(i)];
    r = std::move(next);
  }
  up_trim(r);
  return r;
}

// ---- field engine -------------------------------------------------------------

// remainder of f by g, field coefficients, deg g >= 0
template <class El>
std::vector<El> up_mod(std::vector<El> f, const std::vector<El>& g) {
  int dg = up_deg(g);
  for (int df = up_deg(f); df >= dg && df >= 0; df = up_deg(f)) {
    El q = f[static_cast<size_t>(df)] / g[static_cast<size_t>(dg)];
    for (int j = 0; j <= dg; j++)
      f[static_cast<size_t>(df - dg + j)] =
          f[static_cast<size_t>(df - dg + j)] - q * g[static_cast<size_t>(j)];
    f[static_cast<size_t>(df)] = f[static_cast<size_t>(df)] - f[static_cast<size_t>(df)];  // force exact zero
    up_trim(f);
    if (dg == 0) break;
  }
  if (dg == 0) f.clear();
  return f;
}

// field quotient and remainder: f = q*g + r with deg r < deg g
template <class El>
std::pair<std::vector<El>, std::vector<El>> up_divmod(std::vector<El> f,
                                                      const std::vector<El>& g,
                                                      const El& zero) {
  int dg = up_deg(g);
  require(dg >= 0, "DomainError", "polynomial division by zero");
  int df = up_deg(f);
  std::vector<El> q(df >= dg ? static_cast<size_t>(df - dg) + 1 : 0, zero);
  for (int k = df; k >= dg; k--) {
    El c = f[static_cast<size_t>(k)] / g[static_cast<size_t>(dg)];
    if (is_zero(c)) continue;
    q[static_cast<size_t>(k - dg)] = c;
    for (int j = 0; j <= dg; j++)
      f[static_cast<size_t>(k - dg + j)] =
          f[static_cast<size_t>(k - dg + j)] - c * g[static_cast<size_t>(j)];
  }
  up_trim(f);
  up_trim(q);
  return {std::move(q), std::move(f)};
}

// monic gcd over a field
template <class El>
std::vector<El> up_gcd_field(std::vector<El> f, std::vector<El> g) {
  up_trim(f);
  up_trim(g);
  if (up_deg(f) < up_deg(g)) std::swap(f, g);
  while (up_deg(g) >= 0) {
    std::vector<El> r = up_mod(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (up_deg(f) >= 1 || (up_deg(f) == 0 && !is_one(f[0]))) {
    El lc = f.back();
    for (auto& c : f) c = c / lc;
  }
  return f;
}

// Res(f, g) over a field via the PRS identity
//   Res(f,g) = lc(g)^(deg f - deg r) * (-1)^(deg f * deg g) * Res(g, r)
template <class El>
El resultant_field(std::vector<El> f, std::vector<El> g, const El& one) {
  up_trim(f);
  up_trim(g);
  int m = up_deg(f), n = up_deg(g);
  require(m >= 0 || n >= 0, "DomainError", "resultant of two zero polynomials");
  El acc = one;
  bool negate = false;
  if (m < n) {
    std::swap(f, g);
    std::swap(m, n);
    if ((m % 2 == 1) && (n % 2 == 1)) negate = !negate;
  }
  for (;;) {
    if (n < 0) {
      // Res(f, 0): zero unless f is a nonzero constant (empty product)
      if (m > 0) return acc - acc;  // zero of the right type
      break;
    }
    if (n == 0) {
      El c = g[0];
      El p = one;
      for (int i = 0; i < m; i++) p = p * c;
      acc = acc * p;
      break;
    }
    std::vector<El> r = up_mod(f, g);
    int dr = up_deg(r);
    El lcg = g[static_cast<size_t>(n)];
    El p = one;
    for (int i = 0; i < m - dr; i++) p = p * lcg;
    acc = acc * p;
    if ((m % 2 == 1) && (n % 2 == 1)) negate = !negate;
    f = std::move(g);
    g = std::move(r);
    m = n;
    n = dr;
  }
  return negate ? -acc : acc;
}

template <class El>
El discriminant_field(const std::vector<El>& F, const El& one) {
  int n = up_deg(F);
  require(n >= 1, "NonMonic", "discriminant needs degree >= 1");
  require(is_one(F[static_cast<size_t>(n)]), "NonMonic",
          "discriminant requires a monic polynomial");
  if (n == 1) return one;  // empty product
  El res = resultant_field(F, up_derivative(F), one);
  return (n % 4 == 2 || n % 4 == 3) ? -res : res;  // (-1)^{n(n-1)/2}
}

inline Rat discriminant_q(const std::vector<Rat>& F) {
  return discriminant_field(F, Rat(1));
}

inline Int discriminant_z(const std::vector<Int>& F) {
  std::vector<Rat> Fq;
  for (auto& c : F) Fq.push_back(Rat(c));
  Rat d = discriminant_q(Fq);
  require(d.get_den() == 1, "DomainError", "integer discriminant not integral");
  return d.get_num();
}

// ---- ring engine ---------------------------------------------------------------

// exact division in Z[x_1..x_r]; the divisor must divide exactly
inline ZPolyM exact_div_poly(ZPolyM f, const ZPolyM& g) {
  require(!g.is_zero(), "DomainError", "polynomial division by zero");
  ZPolyM q(f.nvars, f.ord);
  while (!f.is_zero()) {
    require(mono_divides(g.lm(), f.lm()) && divides(g.lc(), f.lc()),
            "DomainError", "inexact polynomial division");
    Monomial m = mono_div(f.lm(), g.lm());
    Int c = exact_div(f.lc(), g.lc());
    q.t.push_back({m, c});
    f = f - g.mul_term(m, c);
  }
  return q;
}

// Fraction-free determinant (Bareiss) over Z[x_1..x_r]
inline ZPolyM det_bareiss(std::vector<std::vector<ZPolyM>> M) {
  size_t n = M.size();
  if (n == 0) return ZPolyM::constant(0, Int(1));
  int nv = M[0][0].nvars;
  MonOrder ord = M[0][0].ord;
  bool negate = false;
  ZPolyM prev = ZPolyM::constant(nv, Int(1), ord);
  for (size_t k = 0; k + 1 < n; k++) {
    if (M[k][k].is_zero()) {
      size_t swap_row = k;
      for (size_t i = k + 1; i < n; i++)
        if (!M[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row == k) return ZPolyM::zero(nv, ord);  // whole column zero
      std::swap(M[k], M[swap_row]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j < n; j++)
        M[i][j] = exact_div_poly(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
    prev = M[k][k];
  }
  return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

// Sylvester matrix of f (degree m) and g (degree k) over Z[x_1..x_r] lifts
inline std::vector<std::vector<ZPolyM>> sylvester(const std::vector<ZPolyM>& f,
                                                  int m,
                                                  const std::vector<ZPolyM>& g,
                                                  int k, int nv, MonOrder ord) {
  size_t n = static_cast<size_t>(m + k);
  std::vector<std::vector<ZPolyM>> S(
      n, std::vector<ZPolyM>(n, ZPolyM::zero(nv, ord)));
  for (int i = 0; i < k; i++)
    for (int j = 0; j <= m; j++)
      S[static_cast<size_t>(i)][static_cast<size_t>(i + j)] =
          f[static_cast<size_t>(m - j)];
  for (int i = 0; i < m; i++)
    for (int j = 0; j <= k; j++)
      S[static_cast<size_t>(k + i)][static_cast<size_t>(i + j)] =
          g[static_cast<size_t>(k - j)];
  return S;
}

// Discriminant of a monic F in A[X], A a presented ring; exact via Sylvester
// over the integer lifts, reduced into A at the end.
inline RingElem discriminant_ring(const std::vector<RingElem>& F) {
  require(!F.empty(), "NonMonic", "empty polynomial");
  const RingPtr& R = F.back().owner;
  int n = static_cast<int>(F.size()) - 1;
  require(n >= 1, "NonMonic", "discriminant needs degree >= 1");
  require(is_one(F.back()), "NonMonic", "discriminant requires a monic polynomial");
  if (n == 1) return ring_int(R, 1);
  int nv = R->nvars();
  MonOrder ord = MonOrder::grevlex();
  std::vector<ZPolyM> f;
  for (auto& c : F) f.push_back(c.rep);
  // F' has degree exactly n-1 (characteristic zero)
  std::vector<ZPolyM> fp;
  for (int i = 1; i <= n; i++) fp.push_back(f[static_cast<size_t>(i)].scaled(Int(i)));
  ZPolyM det = det_bareiss(sylvester(f, n, fp, n - 1, nv, ord));
  bool neg = (n % 4 == 2 || n % 4 == 3);
  return ring_elem(R, neg ? -det : det);
}

}  // namespace disceq
