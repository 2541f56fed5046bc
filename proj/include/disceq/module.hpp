#pragma once

// Finitely generated A-modules inside K = Frac(A) and inside K^d:
//   - linear systems M x = b solved in A^n (entries from K),
//   - inclusion and intersection of finitely generated submodules,
//   - finiteness of quotients M2/M1 with an explicit full system of
//     representatives, via colon ideals, integer elimination, prime
//     splitting, and Hilbert data of the mod-p reductions,
//   - representatives for ((1/n)A ∩ A_K)/A given closure generators with
//     integrality certificates.
//
// Throughout, A = Z[x_1..x_r]/I is a presented domain of characteristic
// zero (RingPresentation) and modules are given by finite generator lists.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "disceq/discriminant.hpp"
#include "disceq/hilbert.hpp"
#include "disceq/ring.hpp"

namespace disceq {

inline void check_owner_ring(const RingPtr& R, const RingElem& a) {
  require(a.owner == R || a.owner->same_as(*R), "OwnerMismatch",
          "element of a different ring");
}

// ---- linear systems over A ------------------------------------------------------

struct LinSolveA {
  bool solvable = false;
  std::vector<RingElem> x0;                   // one particular solution in A^n
  std::vector<std::vector<RingElem>> kernel;  // A-module generators of Mx = 0
};

namespace detail {

// x * s as an element of A; s in A, x in K with x*s in A guaranteed by the
// caller (s is a multiple of x's denominator).
inline RingElem frac_scaled_to_ring(const FracElem& x, const RingElem& s) {
  if (is_one(x.den)) return x.num * s;
  auto h = frac_in_ring(frac(x.num * s, x.den));
  require(h.has_value(), "DomainError",
          "internal: denominator clearing did not land in the ring");
  return *h;
}

// Fast path for base Z: row Hermite form of the lattice {(Mx, x) : x in Z^n},
// with the equation block as the leading columns. The module-Groebner route
// is correct here too, but its unordered pair reduction lets entries blow up
// on wide systems; the Hermite elimination reduces the rows above each pivot
// and keeps every entry below the pivot's modulus.
inline LinSolveA solve_linear_A_z(const RingPtr& R,
                                  const std::vector<std::vector<FracElem>>& M,
                                  const std::vector<FracElem>& b) {
  const size_t m = M.size();
  const size_t n = M[0].size();
  auto ival = [](const RingElem& e) {
    return e.rep.is_zero() ? Int(0) : e.rep.lc();
  };
  // B row j is (column j of the row-scaled M, e_j); integer row combinations
  // are exactly the pairs ((Mx)^T, x)
  std::vector<Int> rhs(m, Int(0));
  std::vector<std::vector<Int>> B(n, std::vector<Int>(m + n, Int(0)));
  for (size_t i = 0; i < m; i++) {
    Int L(1);
    for (size_t j = 0; j < n; j++) L = lcm(L, ival(M[i][j].den));
    L = lcm(L, ival(b[i].den));
    for (size_t j = 0; j < n; j++)
      B[j][i] = ival(M[i][j].num) * exact_div(L, ival(M[i][j].den));
    rhs[i] = ival(b[i].num) * exact_div(L, ival(b[i].den));
  }
  for (size_t j = 0; j < n; j++) B[j][m + j] = 1;

  std::vector<size_t> piv_row, piv_col;
  size_t top = 0;
  for (size_t col = 0; col < m + n && top < n; col++) {
    size_t nz = top;
    while (nz < n && B[nz][col] == 0) nz++;
    if (nz == n) continue;
    std::swap(B[top], B[nz]);
    for (size_t i = top + 1; i < n; i++) {
      if (B[i][col] == 0) continue;
      auto [g, u, v] = gcd_ext(B[top][col], B[i][col]);
      Int a1 = exact_div(B[top][col], g), a2 = exact_div(B[i][col], g);
      for (size_t k = col; k < m + n; k++) {
        Int t1 = u * B[top][k] + v * B[i][k];
        Int t2 = a1 * B[i][k] - a2 * B[top][k];
        B[top][k] = std::move(t1);
        B[i][k] = std::move(t2);
      }
    }
    if (B[top][col] < 0)
      for (size_t k = col; k < m + n; k++) B[top][k] = -B[top][k];
    for (size_t i = 0; i < top; i++) {
      Int q = fdiv(B[i][col], B[top][col]);
      if (q == 0) continue;
      for (size_t k = col; k < m + n; k++) B[i][k] -= q * B[top][k];
    }
    piv_row.push_back(top);
    piv_col.push_back(col);
    top++;
  }

  LinSolveA res;
  for (size_t i = 0; i < top; i++) {
    bool zero_m = true;
    for (size_t k = 0; k < m && zero_m; k++) zero_m = B[i][k] == 0;
    if (!zero_m) continue;
    std::vector<RingElem> v;
    for (size_t j = 0; j < n; j++) v.push_back(ring_int(R, B[i][m + j]));
    res.kernel.push_back(std::move(v));
  }
  // eliminate (b, 0) along the pivots; inside the equation block the
  // division must be exact, afterwards reduction only normalizes x0
  std::vector<Int> r(m + n, Int(0));
  for (size_t i = 0; i < m; i++) r[i] = rhs[i];
  for (size_t t = 0; t < piv_row.size(); t++) {
    size_t i = piv_row[t], col = piv_col[t];
    if (r[col] == 0) continue;
    Int q;
    if (col < m) {
      if (!divides(B[i][col], r[col])) return res;
      q = exact_div(r[col], B[i][col]);
    } else {
      q = fdiv(r[col], B[i][col]);
    }
    for (size_t k = col; k < m + n; k++) r[k] -= q * B[i][k];
  }
  for (size_t k = 0; k < m; k++)
    if (r[k] != 0) return res;
  res.solvable = true;
  for (size_t j = 0; j < n; j++) res.x0.push_back(ring_int(R, -r[m + j]));
  return res;
}

}  // namespace detail

// Solve M x = b with x in A^n, where M (m x n) and b have entries in K.
// Returns a particular solution and A-module generators of the homogeneous
// solution set when solvable. Each row is scaled by the product of its
// denominators (harmless over a domain), then the congruences mod I are
// turned into polynomial equations with one slack column per row and
// defining relation.
inline LinSolveA solve_linear_A(const RingPtr& R,
                                const std::vector<std::vector<FracElem>>& M,
                                const std::vector<FracElem>& b) {
  size_t m = M.size();
  require(b.size() == m, "DimensionMismatch", "rows of M vs length of b");
  size_t n = m == 0 ? 0 : M[0].size();
  for (auto& row : M)
    require(row.size() == n, "DimensionMismatch", "ragged matrix");
  for (auto& row : M)
    for (auto& e : row) check_owner_ring(R, e.num);
  for (auto& e : b) check_owner_ring(R, e.num);

  LinSolveA res;
  if (m == 0) {
    res.solvable = true;
    return res;
  }
  if (R->nvars() == 0) return detail::solve_linear_A_z(R, M, b);

  int nv = R->nvars();
  size_t s = R->gb.size();
  size_t cols = n + m * s;
  std::vector<std::vector<ZPolyM>> Mr(
      m, std::vector<ZPolyM>(cols, ZPolyM::zero(nv)));
  std::vector<ZPolyM> br(m, ZPolyM::zero(nv));
  for (size_t i = 0; i < m; i++) {
    RingElem d = ring_int(R, 1);
    for (auto& e : M[i])
      if (!is_one(e.den)) d = d * e.den;
    if (!is_one(b[i].den)) d = d * b[i].den;
    for (size_t j = 0; j < n; j++)
      Mr[i][j] = detail::frac_scaled_to_ring(M[i][j], d).rep;
    br[i] = detail::frac_scaled_to_ring(b[i], d).rep;
    for (size_t l = 0; l < s; l++) Mr[i][n + i * s + l] = R->gb[l];
  }

  auto r = solve_linear_R(Mr, br);
  if (!r.solvable) return res;
  res.solvable = true;
  for (size_t j = 0; j < n; j++) res.x0.push_back(ring_elem(R, r.x0[j]));
  for (auto& k : r.kernel) {
    std::vector<RingElem> v;
    bool all_zero = true;
    for (size_t j = 0; j < n; j++) {
      v.push_back(ring_elem(R, k[j]));
      all_zero = all_zero && is_zero(v.back());
    }
    if (!all_zero) res.kernel.push_back(std::move(v));
  }
  return res;
}

// ---- modules --------------------------------------------------------------------

struct AModule {
  RingPtr owner;
  int ambient_dim = 1;
  std::vector<std::vector<FracElem>> gens;  // each of length ambient_dim
};

inline AModule a_module(RingPtr R, int ambient_dim,
                        std::vector<std::vector<FracElem>> gens) {
  require(ambient_dim >= 1, "DimensionMismatch",
          "ambient dimension must be positive");
  for (auto& v : gens) {
    require(static_cast<int>(v.size()) == ambient_dim, "DimensionMismatch",
            "generator length vs ambient dimension");
    for (auto& e : v) check_owner_ring(R, e.num);
  }
  return {std::move(R), ambient_dim, std::move(gens)};
}

// rank-1 module inside K
inline AModule a_module(RingPtr R, std::vector<FracElem> gens) {
  std::vector<std::vector<FracElem>> g;
  for (auto& e : gens) g.push_back({e});
  return a_module(std::move(R), 1, std::move(g));
}

inline void check_compatible(const AModule& M1, const AModule& M2) {
  require(M1.owner == M2.owner || M1.owner->same_as(*M2.owner),
          "OwnerMismatch", "modules over different rings");
  require(M1.ambient_dim == M2.ambient_dim, "DimensionMismatch",
          "modules in different ambient dimensions");
}

// Membership v in M: coefficients c in A^|gens| with sum c_j gens_j = v.
inline std::optional<std::vector<RingElem>> module_member(
    const AModule& M, const std::vector<FracElem>& v) {
  require(static_cast<int>(v.size()) == M.ambient_dim, "DimensionMismatch",
          "vector length vs ambient dimension");
  std::vector<std::vector<FracElem>> rows(
      static_cast<size_t>(M.ambient_dim),
      std::vector<FracElem>(M.gens.size(), frac_int(M.owner, 0)));
  for (size_t j = 0; j < M.gens.size(); j++)
    for (int i = 0; i < M.ambient_dim; i++)
      rows[static_cast<size_t>(i)][j] = M.gens[j][static_cast<size_t>(i)];
  auto r = solve_linear_A(M.owner, rows, v);
  if (!r.solvable) return std::nullopt;
  return r.x0;
}

inline bool module_subset(const AModule& M1, const AModule& M2) {
  check_compatible(M1, M2);
  for (auto& g : M1.gens)
    if (!module_member(M2, g)) return false;
  return true;
}

// Generators of M1 ∩ M2: kernel of [a_1..a_u | -b_1..-b_v] over A, then each
// kernel generator's first u coordinates recombine the a's.
inline AModule module_intersect(const AModule& M1, const AModule& M2) {
  check_compatible(M1, M2);
  size_t u = M1.gens.size(), v = M2.gens.size();
  size_t d = static_cast<size_t>(M1.ambient_dim);
  std::vector<std::vector<FracElem>> rows(
      d, std::vector<FracElem>(u + v, frac_int(M1.owner, 0)));
  for (size_t i = 0; i < d; i++) {
    for (size_t j = 0; j < u; j++) rows[i][j] = M1.gens[j][i];
    for (size_t j = 0; j < v; j++) rows[i][u + j] = -M2.gens[j][i];
  }
  std::vector<FracElem> zero(d, frac_int(M1.owner, 0));
  auto r = solve_linear_A(M1.owner, rows, zero);
  std::vector<std::vector<FracElem>> gens;
  for (auto& k : r.kernel) {
    std::vector<FracElem> w(d, frac_int(M1.owner, 0));
    bool all_zero = true;
    for (size_t i = 0; i < d; i++) {
      for (size_t j = 0; j < u; j++) w[i] = w[i] + frac(k[j]) * M1.gens[j][i];
      all_zero = all_zero && is_zero(w[i]);
    }
    if (all_zero) continue;
    for (auto& e : w) e = frac_simplified(e);
    gens.push_back(std::move(w));
  }
  return a_module(M1.owner, M1.ambient_dim, std::move(gens));
}

// ---- quotient finiteness ---------------------------------------------------------

struct PrimeStepWitness {
  Int prime = 0;
  std::vector<std::string> colon_gens;  // ideal of polynomials sent into the
                                        // deeper chain member by the scalar
  bool finite = false;
  Int dimension = 0;    // number of standard monomials mod the prime
  long regularity = 0;
  std::string hilbert_poly;
};

struct GenStepWitness {
  std::string added_gen;                // scaled generator adjoined in this step
  std::vector<std::string> colon_gens;  // J = {x in A : x * gen lands in the
                                        // previous module}
  Int elim = 0;                         // generator of (relations + J) ∩ Z
  std::vector<Int> primes;              // factorization of elim, with multiplicity
  std::vector<PrimeStepWitness> prime_steps;
  bool finite = false;
  Int count = 0;  // representatives contributed by this step
};

struct QuotientWitness {
  std::string scale;  // all generators were multiplied by this before reduction
  std::vector<GenStepWitness> steps;
  std::string infinite_reason;
};

struct QuotientReport {
  bool finite = false;
  std::vector<FracElem> representatives;
  QuotientWitness witness;
};

namespace detail {

// first coordinates of the kernel of [c, -g_1, ..., -g_t] over A: the ideal
// {x in A : x*c lies in the module generated by g_1..g_t}.
inline std::vector<RingElem> colon_in_A(const RingPtr& R, const RingElem& c,
                                        const std::vector<RingElem>& gens) {
  std::vector<std::vector<FracElem>> row(1);
  row[0].push_back(frac(c));
  for (auto& g : gens) row[0].push_back(frac(-g));
  auto r = solve_linear_A(R, row, {frac_int(R, 0)});
  std::vector<RingElem> J;
  for (auto& k : r.kernel)
    if (!is_zero(k[0])) J.push_back(k[0]);
  return J;
}

// {f in Z[x_1..x_r] : c*f lies in the ideal (extra, gens)} for an integer c.
inline std::vector<ZPolyM> colon_in_R(int nv, const Int& c, const Int& extra,
                                      const std::vector<ZPolyM>& gens) {
  if (c == 1) {
    std::vector<ZPolyM> J{ZPolyM::constant(nv, extra)};
    for (auto& g : gens) J.push_back(g);
    return J;
  }
  std::vector<ZPolyM> row{ZPolyM::constant(nv, c),
                          ZPolyM::constant(nv, -extra)};
  for (auto& g : gens) row.push_back(-g);
  auto r = solve_linear_R(std::vector<std::vector<ZPolyM>>{row},
                          std::vector<ZPolyM>{ZPolyM::zero(nv)});
  std::vector<ZPolyM> J;
  for (auto& k : r.kernel)
    if (!k[0].is_zero()) J.push_back(k[0]);
  return J;
}

inline void guard_count(const Int& count) {
  require(count <= Int(1 << 20), "DomainError",
          "quotient is finite but too large to enumerate representatives");
}

}  // namespace detail

// Decide whether M2/M1 is finite (M1 ⊆ M2 inside K required) and, when it
// is, produce a full system of representatives, pairwise non-congruent
// modulo M1 and containing 0. The reduction: scale both modules into A by
// the product of the generators' denominators (an isomorphism on the
// quotient; recorded in the witness); adjoin the generators of the scaled
// M2 one at a time; each single-generator step is isomorphic to A/J for a
// colon ideal J, hence to Z[x_1..x_r]/I with I = relations + lifted J; I is
// split along the prime factorization of its eliminant, and each prime layer
// is read off from Hilbert data of the reduction mod p, lifting standard
// monomials with coefficients 0..p-1. Sums across all layers compose the
// representatives; congruent duplicates are removed defensively.
inline QuotientReport quotient_finite(const AModule& M1, const AModule& M2) {
  check_compatible(M1, M2);
  require(M1.ambient_dim == 1, "DimensionMismatch",
          "quotient representatives require ambient dimension 1");
  require(module_subset(M1, M2), "NotSubmodule",
          "first module is not contained in the second");
  const RingPtr& R = M1.owner;
  int nv = R->nvars();
  QuotientReport report;

  RingElem sigma = ring_int(R, 1);
  for (auto& g : M1.gens)
    if (!is_one(g[0].den)) sigma = sigma * g[0].den;
  for (auto& g : M2.gens)
    if (!is_one(g[0].den)) sigma = sigma * g[0].den;
  report.witness.scale = to_string(sigma);

  std::vector<RingElem> base;  // scaled M1 generators, inside A
  for (auto& g : M1.gens) {
    RingElem h = detail::frac_scaled_to_ring(g[0], sigma);
    if (!is_zero(h)) base.push_back(h);
  }

  auto congruent = [&](const RingElem& x, const RingElem& y) {
    std::vector<std::vector<FracElem>> row(1);
    for (auto& a : base) row[0].push_back(frac(a));
    return solve_linear_A(R, row, {frac(x - y)}).solvable;
  };

  std::vector<RingElem> reps{ring_int(R, 0)};  // of (scaled M1 + handled gens)/M1
  for (auto& g : M2.gens) {
    RingElem c = detail::frac_scaled_to_ring(g[0], sigma);
    GenStepWitness sw;
    sw.added_gen = to_string(c);

    std::vector<RingElem> J = detail::colon_in_A(R, c, base);
    for (auto& j : J) sw.colon_gens.push_back(to_string(j));
    std::vector<ZPolyM> I = R->gb;
    for (auto& j : J) I.push_back(j.rep);
    Int a = elim_integer(I);
    sw.elim = a;
    if (a == 0) {
      sw.finite = false;
      report.witness.steps.push_back(std::move(sw));
      report.witness.infinite_reason =
          "adjoining " + to_string(c) +
          ": the colon ideal meets the integers trivially, so the layer "
          "contains a free abelian group of infinite rank";
      report.finite = false;
      return report;
    }

    std::vector<ZPolyM> step_polys{ZPolyM::zero(nv)};  // reps of Z[x..]/I
    if (a != 1) {
      sw.primes = factor(a);
      Int ci = 1;  // product of the primes already handled
      for (auto& p : sw.primes) {
        std::vector<ZPolyM> Ji = detail::colon_in_R(nv, ci, ci * p, I);
        PrimeStepWitness pw;
        pw.prime = p;
        VarTable vt = R->vars;
        for (auto& f : Ji) pw.colon_gens.push_back(poly_string(f, vt));
        require(p.fits_slong_p(), "DomainError",
                "prime factor too large for modular reduction");
        std::vector<FpPolyM> red;
        for (auto& f : Ji) {
          FpPolyM fb = to_fp(f, p.get_si());
          if (!fb.is_zero()) red.push_back(fb);
        }
        HilbertData H = hilbert_data(red, nv);
        pw.finite = H.finite;
        pw.dimension = H.dimension;
        pw.regularity = H.regularity;
        VarTable mv;
        mv.names = {"m"};
        pw.hilbert_poly = poly_string(H.hilbert_poly, mv);
        sw.prime_steps.push_back(pw);
        if (!H.finite) {
          sw.finite = false;
          report.witness.steps.push_back(std::move(sw));
          report.witness.infinite_reason =
              "adjoining " + to_string(c) + ": modulo " + to_string(p) +
              " the quotient has nonconstant Hilbert polynomial";
          report.finite = false;
          return report;
        }
        // all coefficient assignments 0..p-1 on the standard monomials
        size_t dim = H.standard_monomials.size();
        Int layer = pow_ui(p, static_cast<unsigned long>(dim));
        detail::guard_count(Int(step_polys.size()) * layer);
        std::vector<ZPolyM> lifted;
        std::vector<long> digit(dim, 0);
        long pc = p.get_si();
        for (;;) {
          ZPolyM w(nv, MonOrder::grevlex());
          for (size_t t = 0; t < dim; t++)
            if (digit[t] != 0)
              w.t.push_back({H.standard_monomials[t], Int(digit[t])});
          w.sort_terms();
          lifted.push_back(std::move(w));
          size_t t = 0;
          while (t < dim && ++digit[t] == pc) digit[t++] = 0;
          if (t == dim) break;
        }
        std::vector<ZPolyM> next;
        for (auto& r0 : step_polys)
          for (auto& w : lifted) next.push_back(r0 + w.scaled(ci));
        step_polys = std::move(next);
        ci *= p;
      }
    }
    sw.finite = true;
    sw.count = Int(step_polys.size());
    report.witness.steps.push_back(std::move(sw));

    detail::guard_count(Int(reps.size()) * Int(step_polys.size()));
    std::vector<RingElem> next;
    for (auto& r0 : reps)
      for (auto& w : step_polys) next.push_back(r0 + ring_elem(R, w) * c);
    reps = std::move(next);
  }

  std::vector<RingElem> kept;
  for (auto& r : reps) {
    bool dup = false;
    for (auto& k : kept)
      if (congruent(r, k)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(r);
  }
  std::sort(kept.begin(), kept.end(),
            [](const RingElem& x, const RingElem& y) {
              return to_string(x) < to_string(y);
            });

  report.finite = true;
  for (auto& r : kept) {
    if (is_zero(r) || is_one(sigma))
      report.representatives.push_back(frac(r));
    else
      report.representatives.push_back(frac_simplified(frac(r, sigma)));
  }
  return report;
}

// ---- division representatives ----------------------------------------------------

// A generator of the integral closure A_K of A in K, together with a monic
// certificate F over A (coefficients ascending) with F(value) = 0.
struct ClosureGen {
  FracElem value;
  std::vector<RingElem> cert;
};

inline void check_integral(const RingPtr& R, const ClosureGen& g) {
  check_owner_ring(R, g.value.num);
  require(g.cert.size() >= 2, "NotIntegral",
          "integrality certificate must have degree at least 1");
  for (auto& c : g.cert) check_owner_ring(R, c);
  require(is_one(g.cert.back()), "NotIntegral",
          "integrality certificate is not monic");
  std::vector<FracElem> F;
  for (auto& c : g.cert) F.push_back(frac(c));
  FracElem val = up_eval(F, g.value, frac_int(R, 0));
  require(is_zero(val), "NotIntegral",
          "certificate does not annihilate the closure generator");
}

// Representatives of ((1/n)A ∩ A_K) / A, where A_K is given by generators
// with integrality certificates.
inline QuotientReport nth_division_reps(const RingPtr& R,
                                        const std::vector<ClosureGen>& closure,
                                        const Int& n) {
  require(n >= 2, "DomainError", "division index must be at least 2");
  std::vector<FracElem> closure_vals;
  for (auto& g : closure) {
    check_integral(R, g);
    closure_vals.push_back(g.value);
  }
  AModule inv_n = a_module(R, {frac_int(R, 1, n)});
  AModule AK = a_module(R, std::move(closure_vals));
  AModule M2 = module_intersect(inv_n, AK);
  AModule M1 = a_module(R, {frac_int(R, 1)});
  return quotient_finite(M1, M2);
}

}  // namespace disceq
