#pragma once

// Affine Hilbert data of an ideal over F_p: finiteness of the quotient,
// standard monomials and dimension in the finite case, and the affine Hilbert
// polynomial (counting standard monomials of total degree <= m) in general.
// Everything is read off the staircase of a reduced Groebner basis.

#include <vector>

#include "disceq/groebner.hpp"

namespace disceq {

struct HilbertData {
  bool finite = false;
  Int dimension = 0;                        // |standard monomials| when finite
  long regularity = 0;                      // H(m) equals the polynomial for m >= this
  QPolyM hilbert_poly{1, MonOrder::grevlex()};  // univariate in m
  std::vector<Monomial> standard_monomials;     // finite case, sorted ascending
};

namespace detail {

// binomial C(z + shift, r) as a polynomial in z of degree r over Q:
// C(n, r) = prod_{i=0}^{r-1} (n - i) / r!  with n = z + shift
inline QPolyM binom_poly(long shift, int r) {
  QPolyM z = QPolyM::var(1, 0, Rat(1));
  QPolyM p = QPolyM::constant(1, Rat(1));
  for (int i = 0; i < r; i++)
    p = p * (z + QPolyM::constant(1, Rat(shift - i)));
  Int rfact = 1;
  for (int i = 2; i <= r; i++) rfact *= i;
  return p.scaled(Rat(1) / Rat(rfact));
}

}  // namespace detail

inline HilbertData hilbert_data(const std::vector<FpPolyM>& gens, int nv) {
  HilbertData H;
  for (auto& g : gens)
    require(g.nvars == nv, "DimensionMismatch",
            "generator variable count vs declared variable count");

  auto B = groebner(gens);
  // unit ideal: empty quotient
  for (auto& g : B)
    if (!g.is_zero() && g.lm().is_one()) {
      H.finite = true;
      H.dimension = 0;
      H.regularity = 0;
      H.hilbert_poly = QPolyM::zero(1);
      return H;
    }

  // minimal staircase generators (reduced field basis: lead monomials are
  // already pairwise indivisible)
  std::vector<Monomial> L;
  for (auto& g : B)
    if (!g.is_zero()) L.push_back(g.lm());

  if (nv == 0) {  // F_p itself
    H.finite = true;
    H.dimension = 1;
    H.regularity = 0;
    H.hilbert_poly = QPolyM::constant(1, Rat(1));
    H.standard_monomials = {Monomial::one(0)};
    return H;
  }

  // finite quotient iff every variable has a pure power in the staircase
  std::vector<long> bound(static_cast<size_t>(nv), -1);
  for (auto& m : L)
    for (int i = 0; i < nv; i++)
      if (m.e[static_cast<size_t>(i)] > 0 && m.deg == m.e[static_cast<size_t>(i)]) {
        long b = m.e[static_cast<size_t>(i)];
        if (bound[static_cast<size_t>(i)] < 0 || b < bound[static_cast<size_t>(i)])
          bound[static_cast<size_t>(i)] = b;
      }
  H.finite = true;
  for (int i = 0; i < nv; i++)
    if (bound[static_cast<size_t>(i)] < 0) H.finite = false;

  if (H.finite) {
    std::vector<std::int32_t> e(static_cast<size_t>(nv), 0);
    std::vector<Monomial> std_monos;
    // enumerate the box under the pure-power bounds, keep staircase outsiders
    for (;;) {
      Monomial m(e);
      bool inside = false;
      for (auto& l : L)
        if (mono_divides(l, m)) {
          inside = true;
          break;
        }
      if (!inside) std_monos.push_back(m);
      int i = 0;
      while (i < nv && ++e[static_cast<size_t>(i)] >= bound[static_cast<size_t>(i)]) {
        e[static_cast<size_t>(i)] = 0;
        i++;
      }
      if (i == nv) break;
    }
    MonOrder o = MonOrder::grevlex();
    std::sort(std_monos.begin(), std_monos.end(),
              [&o](const Monomial& a, const Monomial& b) {
                return mono_cmp(a, b, o) < 0;
              });
    H.standard_monomials = std::move(std_monos);
    H.dimension = static_cast<long>(H.standard_monomials.size());
    H.regularity = 0;
    for (auto& m : H.standard_monomials)
      H.regularity = std::max(H.regularity, static_cast<long>(m.deg));
    H.hilbert_poly = QPolyM::constant(1, Rat(H.dimension));
    return H;
  }

  // infinite: inclusion-exclusion over subsets of the staircase generators
  // gives the count of standard monomials of degree <= m for large m:
  //   p(m) = sum_S (-1)^{|S|} C(m - deg(lcm S) + nv, nv)
  require(L.size() <= 20, "DomainError",
          "staircase too large for inclusion-exclusion");
  QPolyM p = QPolyM::zero(1);
  long maxdeg = 0;
  size_t subsets = static_cast<size_t>(1) << L.size();
  for (size_t s = 0; s < subsets; s++) {
    Monomial l = Monomial::one(nv);
    int bits = 0;
    for (size_t i = 0; i < L.size(); i++)
      if (s & (static_cast<size_t>(1) << i)) {
        l = mono_lcm(l, L[i]);
        bits++;
      }
    maxdeg = std::max(maxdeg, static_cast<long>(l.deg));
    QPolyM term = detail::binom_poly(static_cast<long>(nv - l.deg), nv);
    p = (bits % 2 == 0) ? p + term : p - term;
  }
  H.hilbert_poly = p;
  H.regularity = std::max(0L, maxdeg - 1);
  H.dimension = 0;
  return H;
}

// Affine Hilbert function by direct staircase counting: number of standard
// monomials of total degree <= m (for tests and witnesses; m small).
inline HilbertData hilbert_data(const std::vector<FpPolyM>& gens) {
  int nv = 0;
  for (auto& g : gens) nv = std::max(nv, g.nvars);
  return hilbert_data(gens, nv);
}

inline Int hilbert_count(const std::vector<Monomial>& staircase, int nv, long m) {
  if (nv == 0) return staircase.empty() ? (m >= 0 ? 1 : 0) : 0;
  Int count = 0;
  std::vector<std::int32_t> e(static_cast<size_t>(nv), 0);
  for (;;) {
    Monomial mono(e);
    if (mono.deg <= m) {
      bool inside = false;
      for (auto& l : staircase)
        if (mono_divides(l, mono)) {
          inside = true;
          break;
        }
      if (!inside) count += 1;
    }
    int i = 0;
    while (i < nv) {
      e[static_cast<size_t>(i)]++;
      long deg = 0;
      for (auto x : e) deg += x;
      if (deg <= m) break;
      e[static_cast<size_t>(i)] = 0;
      i++;
    }
    if (i == nv) break;
  }
  return count;
}

// Evaluate a univariate polynomial over Q at an integer point.
inline Rat eval_at(const QPolyM& p, const Int& x) {
  Rat acc = 0;
  for (auto& [m, c] : p.t) {
    Rat pw = 1;
    for (int i = 0; i < m.e[0]; i++) pw *= Rat(x);
    acc += c * pw;
  }
  return acc;
}

}  // namespace disceq
