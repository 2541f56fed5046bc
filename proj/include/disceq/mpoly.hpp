#pragma once

// Sparse multivariate polynomials over Z, Q, or F_p. Terms are kept strictly
// descending under the polynomial's monomial order; the zero polynomial is the
// empty term list.

#include <functional>
#include <map>
#include <vector>

#include "disceq/coeffs.hpp"
#include "disceq/monomial.hpp"

namespace disceq {

template <class C>
struct MPoly {
  using Term = std::pair<Monomial, C>;

  int nvars = 0;
  MonOrder ord = MonOrder::grevlex();
  std::vector<Term> t;  // descending by ord, no zero coefficients

  MPoly() = default;
  MPoly(int nv, MonOrder o) : nvars(nv), ord(o) {}

  static MPoly zero(int nv, MonOrder o = MonOrder::grevlex()) {
    return MPoly(nv, o);
  }
  static MPoly constant(int nv, const C& c, MonOrder o = MonOrder::grevlex()) {
    MPoly r(nv, o);
    if (!coeff_traits<C>::is_zero(c)) r.t.push_back({Monomial::one(nv), c});
    return r;
  }
  static MPoly term(int nv, const Monomial& m, const C& c,
                    MonOrder o = MonOrder::grevlex()) {
    MPoly r(nv, o);
    if (!coeff_traits<C>::is_zero(c)) r.t.push_back({m, c});
    return r;
  }
  static MPoly var(int nv, int i, const C& c, MonOrder o = MonOrder::grevlex()) {
    return term(nv, Monomial::var(nv, i), c, o);
  }

  bool is_zero() const { return t.empty(); }
  bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].first.is_one()); }
  const Monomial& lm() const { return t.front().first; }
  const C& lc() const { return t.front().second; }
  std::int64_t total_degree() const {
    std::int64_t d = 0;
    for (auto& [m, c] : t) d = std::max(d, m.deg);
    return d;
  }
  int degree_in(int v) const {
    int d = -1;
    for (auto& [m, c] : t) d = std::max(d, static_cast<int>(m.e[v]));
    return d;
  }
  bool uses_var(int v) const {
    for (auto& [m, c] : t)
      if (m.e[v] > 0) return true;
    return false;
  }
  C coeff_of(const Monomial& m) const {
    for (auto& [mm, c] : t)
      if (mm == m) return c;
    return coeff_traits<C>::zero();
  }

  void sort_terms() {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
      return mono_cmp(a.first, b.first, ord) > 0;
    });
    // merge duplicates
    std::vector<Term> out;
    out.reserve(t.size());
    for (auto& tm : t) {
      if (!out.empty() && out.back().first == tm.first)
        out.back().second = out.back().second + tm.second;
      else
        out.push_back(tm);
    }
    t.clear();
    for (auto& tm : out)
      if (!coeff_traits<C>::is_zero(tm.second)) t.push_back(tm);
  }

  MPoly reordered(MonOrder o) const {
    MPoly r = *this;
    r.ord = o;
    r.sort_terms();
    return r;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    require(a.nvars == b.nvars, "DomainMismatch", "variable counts differ");
    MPoly r(a.nvars, a.ord);
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
      int c = mono_cmp(a.t[i].first, b.t[j].first, a.ord);
      if (c > 0)
        r.t.push_back(a.t[i++]);
      else if (c < 0)
        r.t.push_back(b.t[j++]);
      else {
        C s = a.t[i].second + b.t[j].second;
        if (!coeff_traits<C>::is_zero(s)) r.t.push_back({a.t[i].first, s});
        i++, j++;
      }
    }
    while (i < a.t.size()) r.t.push_back(a.t[i++]);
    while (j < b.t.size()) r.t.push_back(b.t[j++]);
    return r;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t) c = -c;
    return r;
  }

  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    require(a.nvars == b.nvars, "DomainMismatch", "variable counts differ");
    auto less = [&a](const Monomial& x, const Monomial& y) {
      return mono_cmp(x, y, a.ord) < 0;
    };
    std::map<Monomial, C, decltype(less)> acc(less);
    for (auto& [ma, ca] : a.t)
      for (auto& [mb, cb] : b.t) {
        Monomial m = mono_mul(ma, mb);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), ca * cb);
        else
          it->second = it->second + ca * cb;
      }
    MPoly r(a.nvars, a.ord);
    r.t.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!coeff_traits<C>::is_zero(it->second)) r.t.push_back({it->first, it->second});
    return r;
  }

  // a * (c * m), the inner loop of reduction
  MPoly mul_term(const Monomial& m, const C& c) const {
    MPoly r(nvars, ord);
    if (coeff_traits<C>::is_zero(c)) return r;
    r.t.reserve(t.size());
    for (auto& [mm, cc] : t) {
      C p = cc * c;
      if (!coeff_traits<C>::is_zero(p)) r.t.push_back({mono_mul(mm, m), p});
    }
    return r;
  }

  MPoly scaled(const C& c) const { return mul_term(Monomial::one(nvars), c); }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.nvars != b.nvars || a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); i++)
      if (!(a.t[i].first == b.t[i].first) ||
          !(a.t[i].second == b.t[i].second))
        return false;
    return true;
  }

  // Substitute polynomial g for variable v (naive Horner on the v-degree).
  MPoly substituted(int v, const MPoly& g) const {
    int d = degree_in(v);
    if (d <= 0 && !uses_var(v)) return *this;
    // collect coefficients of v^k (as polynomials with v removed from terms)
    std::vector<MPoly> coef(static_cast<size_t>(d) + 1, MPoly::zero(nvars, ord));
    for (auto& [m, c] : t) {
      int k = m.e[v];
      Monomial m2 = m;
      m2.deg -= k;
      m2.e[v] = 0;
      coef[k] = coef[k] + MPoly::term(nvars, m2, c, ord);
    }
    MPoly r = coef[d];
    for (int k = d - 1; k >= 0; k--) r = r * g + coef[k];
    return r;
  }
};

using ZPolyM = MPoly<Int>;
using QPolyM = MPoly<Rat>;
using FpPolyM = MPoly<Fp>;

// Domain conversions ----------------------------------------------------------

inline ZPolyM to_z(const QPolyM& f) {
  ZPolyM r(f.nvars, f.ord);
  for (auto& [m, c] : f.t) {
    require(c.get_den() == 1, "DomainMismatch",
            "polynomial has non-integer coefficient " + to_string(c));
    r.t.push_back({m, c.get_num()});
  }
  return r;
}

inline QPolyM to_q(const ZPolyM& f) {
  QPolyM r(f.nvars, f.ord);
  for (auto& [m, c] : f.t) r.t.push_back({m, Rat(c)});
  return r;
}

inline FpPolyM to_fp(const ZPolyM& f, long long p) {
  FpPolyM r(f.nvars, f.ord);
  for (auto& [m, c] : f.t) {
    Fp v = fp_from(c, p);
    if (!v.is_zero()) r.t.push_back({m, v});
  }
  return r;
}

}  // namespace disceq
