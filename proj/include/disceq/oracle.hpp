// Candidate root-difference sets.  If F = prod (X - alpha_i) is monic with
// discriminant delta != 0 and integral roots, every pairwise difference
// eta = alpha_i - alpha_j satisfies eta^2 | delta in a large enough order of
// G (the remaining factors of delta = prod_{i<j} (alpha_i - alpha_j)^2 are
// integral).  A candidate set collects the possible differences inside the
// splitting data G; the `complete` flag records whether the strategy
// provably catches every difference of every solution.
//
// Strategies:
//   ExhaustiveDivisor -- A = Z with G = Q or G imaginary quadratic: the unit
//       group of the maximal order O_G is finite, so eta^2 | delta in O_G
//       has finitely many solutions, all enumerated exactly.  complete=true.
//   BoundedSearch(H) -- A = Z, any G: enumerate integer combinations of a
//       product basis of G (products of the expressed roots, greedy-selected
//       in graded-lex order to a K-linearly-independent set) with
//       coordinates bounded by H, keeping eta with N(eta)^2 | delta^[G:Q] --
//       an exact necessary consequence of eta^2 | delta.  complete=false:
//       a solution could need coordinates beyond H.
//   UserSupplied -- any base: the given set is validated (nonzero entries,
//       pairwise distinct, closed under negation) and passed through;
//       completeness is whatever the caller certifies.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "disceq/splitting.hpp"

namespace disceq {

enum class StrategyKind { ExhaustiveDivisor, BoundedSearch, UserSupplied };

struct CandidateStrategy {
  StrategyKind kind = StrategyKind::ExhaustiveDivisor;
  Int height_bound = 1;          // BoundedSearch only
  std::vector<GElem> supplied;   // UserSupplied only
  bool supplied_complete = false;
};

inline CandidateStrategy strategy_exhaustive() { return {}; }

inline CandidateStrategy strategy_bounded(const Int& height_bound) {
  require(height_bound >= 1, "DomainError",
          "bounded search needs a height bound >= 1");
  CandidateStrategy st;
  st.kind = StrategyKind::BoundedSearch;
  st.height_bound = height_bound;
  return st;
}

inline CandidateStrategy strategy_user(std::vector<GElem> set, bool complete) {
  CandidateStrategy st;
  st.kind = StrategyKind::UserSupplied;
  st.supplied = std::move(set);
  st.supplied_complete = complete;
  return st;
}

struct CandidateSet {
  std::vector<GElem> elements;  // pairwise distinct, closed under negation
  bool complete = false;
};

namespace odetail {

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// constant value of an element of a zero-variable ring
inline Int int_of(const RingElem& a) {
  return a.rep.is_zero() ? Int(0) : a.rep.lc();
}

// ascending e >= 1 with e^2 | n (n != 0): divisors of prod p^floor(v_p/2)
inline std::vector<Int> square_divisors(const Int& n) {
  Int kernel = 1;
  std::vector<Int> primes = factor(n);
  for (size_t i = 0; i < primes.size();) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) j++;
    kernel *= pow_ui(primes[i], static_cast<unsigned long>((j - i) / 2));
    i = j;
  }
  std::vector<Int> out{Int(1)};
  primes = factor(kernel);
  for (size_t i = 0; i < primes.size();) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) j++;
    size_t base = out.size();
    Int pw = 1;
    for (size_t e = 1; e <= j - i; e++) {
      pw *= primes[i];
      for (size_t k = 0; k < base; k++) out.push_back(out[k] * pw);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// arithmetic in Z[w], w^2 = T w - N (pairs are coordinates on 1, w)
struct ImQuad {
  Int T, N;  // trace and norm of w
};

using QPair = std::pair<Int, Int>;

inline QPair qmul(const ImQuad& q, const QPair& a, const QPair& b) {
  return {a.first * b.first - q.N * a.second * b.second,
          a.first * b.second + a.second * b.first + q.T * a.second * b.second};
}

inline QPair qconj(const ImQuad& q, const QPair& a) {
  return {a.first + q.T * a.second, -a.second};
}

inline Int qnorm(const ImQuad& q, const QPair& a) {
  return a.first * a.first + q.T * a.first * a.second +
         q.N * a.second * a.second;
}

// does e^2 divide n in Z[w]?
inline bool qdivides_square(const ImQuad& q, const QPair& e, const Int& n) {
  QPair e2 = qmul(q, e, e);
  Int den = qnorm(q, e2);
  if (den == 0) return false;
  QPair num = qmul(q, {n, Int(0)}, qconj(q, e2));
  return divides(den, num.first) && divides(den, num.second);
}

// deterministic Durand-Kerner roots of a monic complex polynomial
inline std::vector<std::complex<double>> dk_roots(
    const std::vector<std::complex<double>>& p) {
  using C = std::complex<double>;
  size_t n = p.size() - 1;
  std::vector<C> z(n);
  C seed(0.4, 0.9), acc(1.0, 0.0);
  for (size_t i = 0; i < n; i++) {
    acc *= seed;
    z[i] = acc;
  }
  auto eval = [&](C x) {
    C v = p[n];
    for (size_t k = n; k-- > 0;) v = v * x + p[k];
    return v;
  };
  for (int iter = 0; iter < 500; iter++) {
    double moved = 0.0;
    for (size_t i = 0; i < n; i++) {
      C den(1.0, 0.0);
      for (size_t j = 0; j < n; j++)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) < 1e-300) den = C(1e-300, 0.0);
      C step = eval(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

// fraction-free determinant of a square Int matrix (Bareiss)
inline Int det_int(std::vector<std::vector<Int>> a) {
  size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1, sign = 1;
  for (size_t k = 0; k + 1 < n; k++) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) s++;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j < n; j++)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// incremental exact rank bookkeeping over Q
struct RatEchelon {
  std::vector<std::vector<Rat>> rows;
  std::vector<size_t> pivots;

  bool try_add(std::vector<Rat> v) {
    for (size_t i = 0; i < rows.size(); i++) {
      Rat f = v[pivots[i]] / rows[i][pivots[i]];
      if (f == 0) continue;
      for (size_t k = 0; k < v.size(); k++) v[k] -= f * rows[i][k];
    }
    for (size_t j = 0; j < v.size(); j++)
      if (v[j] != 0) {
        rows.push_back(std::move(v));
        pivots.push_back(j);
        return true;
      }
    return false;
  }
};

// exponent tuples of length n, entries 0..maxe, total deg, in lex order
inline void degree_tuples(size_t pos, int rem, int maxe, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (pos + 1 == cur.size()) {
    if (rem <= maxe) {
      cur[pos] = rem;
      out.push_back(cur);
    }
    return;
  }
  for (int e = 0; e <= std::min(maxe, rem); e++) {
    cur[pos] = e;
    degree_tuples(pos + 1, rem - e, maxe, cur, out);
  }
}

// Products of the expressed roots, graded-lex order, greedily kept when they
// extend the Q-span.  The result is a basis of the subalgebra K[theta_1..n]
// of G (all of G when G is generated by the roots).
inline std::vector<GElem> product_basis(const SplitPtr& S) {
  int n = S->owner->deg, d = S->degree;
  std::vector<GElem> basis;
  RatEchelon ech;
  for (int D = 0; D <= n * (n - 1) && static_cast<int>(basis.size()) < d;
       D++) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(static_cast<size_t>(n));
    degree_tuples(0, D, n - 1, cur, tuples);
    for (auto& e : tuples) {
      GElem v = g_int(S, 1);
      for (int i = 0; i < n; i++)
        if (e[static_cast<size_t>(i)] > 0)
          v = v * pow(g_root(S, i),
                      static_cast<unsigned long>(e[static_cast<size_t>(i)]));
      std::vector<Rat> row;
      for (auto& c : v.c) row.push_back(sdetail::rat_of(c));
      if (ech.try_add(std::move(row))) basis.push_back(std::move(v));
      if (static_cast<int>(basis.size()) == d) break;
    }
  }
  return basis;
}

// Sort by printed form and drop adjacent duplicates.  Coordinates coming out
// of g_elem are content-reduced with positive integer denominators, so equal
// elements print identically here.
inline void canonicalize(std::vector<GElem>& v) {
  std::vector<std::pair<std::string, size_t>> keys;
  keys.reserve(v.size());
  for (size_t i = 0; i < v.size(); i++) keys.emplace_back(to_string(v[i]), i);
  std::stable_sort(keys.begin(), keys.end());
  std::vector<GElem> out;
  out.reserve(v.size());
  for (size_t i = 0; i < keys.size(); i++) {
    if (i > 0 && keys[i].first == keys[i - 1].first &&
        v[keys[i].second] == out.back())
      continue;
    out.push_back(std::move(v[keys[i].second]));
  }
  v = std::move(out);
}

// ---- the exhaustive strategy -------------------------------------------------------

inline CandidateSet exhaustive_set(const SplitPtr& S, const Int& dz) {
  const RingPtr& R = S->owner->base;
  int d = S->degree;
  CandidateSet out;
  out.complete = true;
  if (d == 1) {  // G = Q, maximal order Z
    for (const Int& e : square_divisors(dz)) {
      out.elements.push_back(g_int(S, e));
      out.elements.push_back(g_int(S, -e));
    }
    canonicalize(out.elements);
    return out;
  }
  require(d == 2, "StrategyUnsupported",
          "exhaustive divisor enumeration handles [G:Q] <= 2 only; use a "
          "bounded or user-supplied strategy");
  // Q = X^2 + bX + c over Z; G imaginary quadratic iff b^2 - 4c < 0
  Int b = int_of(S->u_min_poly[1]), c = int_of(S->u_min_poly[0]);
  Int D0 = b * b - 4 * c;
  require(D0 < 0, "StrategyUnsupported",
          "exhaustive divisor enumeration needs an imaginary quadratic G "
          "(finite unit group); use a bounded or user-supplied strategy");
  // fundamental discriminant D and conductor f with D0 = f^2 D
  Int f0 = 1, m = 1;
  std::vector<Int> primes = factor(D0);
  for (size_t i = 0; i < primes.size();) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) j++;
    f0 *= pow_ui(primes[i], static_cast<unsigned long>((j - i) / 2));
    if ((j - i) % 2 == 1) m *= primes[i];
    i = j;
  }
  Int D1 = -m;
  Int D = (fmod(D1, 4) == 1) ? D1 : 4 * D1;
  Int f = (D == D1) ? f0 : exact_div(f0, Int(2));
  // sqrt(D) = (2u + b)/f, and the maximal order is Z[w]
  GElem sqrtD = g_elem(S, {frac_int(R, b), frac_int(R, 2)});
  sqrtD = frac(ring_int(R, 1), ring_int(R, f)) * sqrtD;
  ImQuad q;
  GElem w = g_int(S, 0);
  if (fmod(D, 4) == 0) {  // w = sqrt(D)/2
    q.T = 0;
    q.N = exact_div(-D, Int(4));
    w = frac_int(R, 1, 2) * sqrtD;
  } else {  // w = (1 + sqrt(D))/2
    q.T = 1;
    q.N = exact_div(1 - D, Int(4));
    w = frac_int(R, 1, 2) * (g_int(S, 1) + sqrtD);
  }
  Int bound = abs(dz);
  Int ymax = isqrt(fdiv(4 * bound, -D)) + 1;
  for (Int y = -ymax; y <= ymax; y++) {
    Int rhs = 4 * bound + D * y * y;  // 4|delta| - |D| y^2
    if (rhs < 0) continue;
    Int s = isqrt(rhs) + 1;
    Int xlo = fdiv(-s - q.T * y, Int(2)) - 1, xhi = fdiv(s - q.T * y, Int(2)) + 1;
    for (Int x = xlo; x <= xhi; x++) {
      QPair e{x, y};
      Int nrm = qnorm(q, e);
      if (nrm == 0 || nrm > bound) continue;
      if (!qdivides_square(q, e, dz)) continue;
      out.elements.push_back(g_const(S, frac_int(R, x)) + frac_int(R, y) * w);
    }
  }
  canonicalize(out.elements);
  return out;
}

// ---- the bounded strategy ----------------------------------------------------------

inline CandidateSet bounded_set(const SplitPtr& S, const Int& dz,
                                const Int& height) {
  const RingPtr& R = S->owner->base;
  int d = S->degree;
  require(mpz_fits_slong_p(height.get_mpz_t()) != 0 && height >= 1,
          "DomainError", "unusable height bound");
  long H = height.get_si();
  std::vector<GElem> basis = product_basis(S);
  size_t mdim = basis.size();
  double space = std::pow(2.0 * static_cast<double>(H) + 1.0,
                          static_cast<double>(mdim));
  require(space <= 3.2e8, "DomainError",
          "bounded search space (2H+1)^m exceeds the desk-scale cap; lower "
          "the height bound");
  // exact coordinates of the basis on the u-powers, and numeric embeddings
  std::vector<std::vector<Rat>> brat;
  for (auto& g : basis) {
    std::vector<Rat> row;
    for (auto& c : g.c) row.push_back(sdetail::rat_of(c));
    brat.push_back(std::move(row));
  }
  std::vector<std::complex<double>> Qc;
  for (auto& c : S->u_min_poly)
    Qc.push_back(std::complex<double>(int_of(c).get_d(), 0.0));
  std::vector<std::complex<double>> uroots = odetail::dk_roots(Qc);
  // emb[i][k] = value of basis[i] at the k-th numeric root of Q
  std::vector<std::vector<std::complex<double>>> emb(mdim);
  for (size_t i = 0; i < mdim; i++) {
    emb[i].resize(static_cast<size_t>(d));
    for (int k = 0; k < d; k++) {
      std::complex<double> v(0.0, 0.0), pw(1.0, 0.0);
      for (int j = 0; j < d; j++) {
        v += brat[i][static_cast<size_t>(j)].get_d() * pw;
        pw *= uroots[static_cast<size_t>(k)];
      }
      emb[i][static_cast<size_t>(k)] = v;
    }
  }
  Int dpow = pow_ui(dz, static_cast<unsigned long>(d));  // N(delta) = delta^d
  // N(eta)^2 | delta^d pins |N(eta)| to finitely many values; the numeric
  // stage demands closeness to one of them, the exact stage reruns the test
  std::vector<Int> valid = square_divisors(dpow);
  std::vector<double> validd;
  for (auto& e : valid) validd.push_back(e.get_d());
  double nb2 = validd.back() * validd.back() * (1.0 + 1e-6) + 0.5;
  auto near_valid = [&](double nn) {
    auto it = std::lower_bound(validd.begin(), validd.end(), nn);
    if (it != validd.end() && std::abs(*it - nn) <= 0.45 + 1e-9 * *it)
      return true;
    if (it != validd.begin() &&
        std::abs(*(it - 1) - nn) <= 0.45 + 1e-9 * *(it - 1))
      return true;
    return false;
  };
  std::vector<Rat> Qrat;
  for (auto& c : S->u_min_poly) Qrat.push_back(Rat(int_of(c)));
  // Multiplication data for exact norms: N(eta) = det(sum_i x_i C_i)/L^d,
  // where column j of C_i holds L * coords(basis_i * u^j) as integers.
  Int L = 1;
  for (auto& row : brat)
    for (auto& r : row) L = lcm(L, Int(r.get_den()));
  std::vector<std::vector<std::vector<Int>>> C(mdim);
  for (size_t i = 0; i < mdim; i++) {
    C[i].assign(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(d)));
    std::vector<Rat> cur = brat[i];
    for (int j = 0; j < d; j++) {
      for (int k = 0; k < d; k++) {
        Rat v = cur[static_cast<size_t>(k)] * Rat(L);
        C[i][static_cast<size_t>(k)][static_cast<size_t>(j)] = Int(v.get_num());
      }
      // cur *= u, reduced against the monic Q
      Rat top = cur[static_cast<size_t>(d - 1)];
      for (int k = d - 1; k >= 1; k--)
        cur[static_cast<size_t>(k)] =
            cur[static_cast<size_t>(k - 1)] - top * Qrat[static_cast<size_t>(k)];
      cur[0] = -top * Qrat[0];
    }
  }
  Int Lpow = pow_ui(L, static_cast<unsigned long>(d));

  CandidateSet out;
  out.complete = false;
  std::vector<long> x(mdim, -H);
  // acc[k] = value of eta at the k-th root, maintained incrementally
  std::vector<std::complex<double>> acc(static_cast<size_t>(d), {0.0, 0.0});
  for (size_t i = 0; i < mdim; i++)
    for (int k = 0; k < d; k++)
      acc[static_cast<size_t>(k)] -=
          static_cast<double>(H) * emb[i][static_cast<size_t>(k)];
  const double twoH = 2.0 * static_cast<double>(H);
  for (;;) {
    // full product only: the per-root factors are unordered, so a partial
    // product may overshoot the bound and be pulled back by factors < 1
    double n2 = 1.0;
    for (int k = 0; k < d; k++) n2 *= std::norm(acc[static_cast<size_t>(k)]);
    if (n2 <= nb2 && near_valid(std::sqrt(n2))) {
      // exact check: N(eta) integral with N^2 | delta^d, via the integer
      // determinant of the scaled multiplication matrix
      std::vector<std::vector<Int>> B(
          static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(d), 0));
      for (size_t i = 0; i < mdim; i++)
        if (x[i] != 0)
          for (int k = 0; k < d; k++)
            for (int j = 0; j < d; j++)
              B[static_cast<size_t>(k)][static_cast<size_t>(j)] +=
                  x[i] * C[i][static_cast<size_t>(k)][static_cast<size_t>(j)];
      Int Nscaled = det_int(std::move(B));
      Rat N = Rat(Nscaled) / Rat(Lpow);
      if (N.get_den() == 1 && N != 0 &&
          divides(Int(N.get_num()) * Int(N.get_num()), dpow)) {
        // exact coordinates on the u-powers
        std::vector<Rat> ep(static_cast<size_t>(d), Rat(0));
        for (size_t i = 0; i < mdim; i++)
          if (x[i] != 0)
            for (int j = 0; j < d; j++)
              ep[static_cast<size_t>(j)] +=
                  Rat(x[i]) * brat[i][static_cast<size_t>(j)];
        std::vector<FracElem> coords;
        for (auto& r : ep)
          coords.push_back(frac_int(R, Int(r.get_num()), Int(r.get_den())));
        out.elements.push_back(g_elem(S, std::move(coords)));
      }
    }
    size_t pos = 0;
    while (pos < mdim && x[pos] == H) {
      x[pos] = -H;
      for (int k = 0; k < d; k++)
        acc[static_cast<size_t>(k)] -= twoH * emb[pos][static_cast<size_t>(k)];
      pos++;
    }
    if (pos == mdim) break;
    x[pos]++;
    for (int k = 0; k < d; k++)
      acc[static_cast<size_t>(k)] += emb[pos][static_cast<size_t>(k)];
  }
  canonicalize(out.elements);
  return out;
}

}  // namespace odetail

// The candidate set for root differences in G, for discriminant value delta
// over the base of S.  A and the root count are carried by S.
inline CandidateSet candidate_set(const SplitPtr& S, const RingElem& delta,
                                  const CandidateStrategy& st) {
  const RingPtr& R = S->owner->base;
  check_owner_ring(R, delta);
  require(!is_zero(delta), "ZeroDelta",
          "candidate sets are defined for nonzero discriminants only");
  switch (st.kind) {
    case StrategyKind::ExhaustiveDivisor: {
      require(R->nvars() == 0, "StrategyUnsupported",
              "exhaustive divisor enumeration is implemented over A = Z "
              "only; use a user-supplied strategy");
      return odetail::exhaustive_set(S, odetail::int_of(delta));
    }
    case StrategyKind::BoundedSearch: {
      require(R->nvars() == 0, "StrategyUnsupported",
              "bounded search is implemented over A = Z only; use a "
              "user-supplied strategy");
      return odetail::bounded_set(S, odetail::int_of(delta), st.height_bound);
    }
    case StrategyKind::UserSupplied: {
      CandidateSet out;
      out.complete = st.supplied_complete;
      for (auto& g : st.supplied) {
        check_same_split(S, g.owner);
        require(!is_zero(g), "VerificationFailed",
                "zero cannot be a root difference of a separable polynomial");
        out.elements.push_back(g);
      }
      odetail::canonicalize(out.elements);
      for (auto& g : out.elements) {
        bool neg = false;
        for (auto& h : out.elements)
          if (h == -g) {
            neg = true;
            break;
          }
        require(neg, "VerificationFailed",
                "user candidate set is not closed under negation: missing -(" +
                    to_string(g) + ")");
      }
      return out;
    }
  }
  fail("DomainError", "unknown strategy");  // unreachable
}

// True iff every pairwise (ordered) root difference of every listed solution
// lies in FF.elements.
inline bool verify_candidate_set(
    const SplitPtr& S, const CandidateSet& FF,
    const std::vector<std::vector<GElem>>& solution_roots) {
  auto contains = [&](const GElem& g) {
    for (auto& h : FF.elements)
      if (h == g) return true;
    return false;
  };
  for (auto& roots : solution_roots)
    for (size_t i = 0; i < roots.size(); i++)
      for (size_t j = i + 1; j < roots.size(); j++) {
        check_same_split(S, roots[i].owner);
        check_same_split(S, roots[j].owner);
        GElem diff = roots[i] - roots[j];
        if (!contains(diff) || !contains(-diff)) return false;
      }
  return true;
}

}  // namespace disceq
