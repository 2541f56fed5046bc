#pragma once

// Constructive solvers for discriminant equations over a base ring A that is
// finitely generated over Z.
//
//   * solve_poly_disc: all monic degree-n polynomials F in A[X] with
//     discriminant D(F) = delta, up to the equivalence F(X) ~ F(X + a) with
//     a in A.  Roots are searched inside a fixed splitting closure G; the
//     instance supplies scalar generators (each with a monic integrality
//     certificate over A) of an A-module known to contain every root of every
//     solution, plus a generating system for the integral closure A_K of A in
//     its fraction field, used to close each base solution under shifts.
//
//   * solve_order_disc: all alpha in a verified A-order O of an etale algebra
//     Omega over K with D_{Omega/K}(alpha) = delta, up to alpha ~ alpha + a.
//
// Both solvers share one outline.  Candidate root differences come from a
// candidate-set strategy for delta.  Ordered difference tuples (gamma_ij) are
// determined by their consecutive entries gamma_{i,i+1}; a tuple survives only
// if every forced entry gamma_ij = gamma_{i,i+1} + ... + gamma_{j-1,j} lies in
// the candidate set and the squared product of all entries is exactly delta.
// Each surviving tuple yields an A-linear system whose solutions are base
// solutions; the full solution orbit is base + representatives of a quotient
// that must be finite for the method to apply — an infinite quotient is
// reported as a documented error condition (see the solver bodies).  A
// floating-point prefilter discards tuples whose difference product cannot
// equal delta; every surviving tuple is verified exactly, so the prefilter
// only affects speed, never the answer.
//
// brute_force_poly_disc cross-checks small integer cases by direct coefficient
// enumeration.  counterexample_family constructs the subring
// A = Z[C(n,1) t, C(n,2) t^2, ..., t^n] of Z[t] together with polynomials
// F_m = (X + t^{mn+1})^n - c, all of discriminant D(X^n - c) and pairwise
// inequivalent: a witness that the finiteness hypothesis on the shift
// quotient cannot be dropped.

#include <algorithm>
#include <complex>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "disceq/oracle.hpp"

namespace disceq {

// ---- instances --------------------------------------------------------------------

// Scalar generator of the root search module inside G, with a monic
// certificate over A (ascending coefficients) proving integrality.
struct GClosureGen {
  GElem value;
  std::vector<RingElem> cert;
};

inline void check_integral_g(const SplitPtr& S, const GClosureGen& g) {
  check_same_split(S, g.value.owner);
  const RingPtr& R = S->owner->base;
  require(g.cert.size() >= 2, "NotIntegral",
          "integrality certificate must have degree at least 1");
  for (auto& c : g.cert) check_owner_ring(R, c);
  require(is_one(g.cert.back()), "NotIntegral",
          "integrality certificate is not monic");
  GElem val = g_int(S, 0);
  for (size_t k = g.cert.size(); k-- > 0;)
    val = val * g.value + g_const(S, frac(g.cert[k]));
  require(is_zero(val), "NotIntegral",
          "certificate does not annihilate the closure generator");
}

struct PolyDiscInstance {
  SplitPtr splitting;  // G, with the reference roots of the owner algebra
  RingElem delta;      // target discriminant, nonzero element of A
  // scalar generators of an A-module containing every root of every solution;
  // 1 is added automatically
  std::vector<GClosureGen> root_module;
  // generators of A_K over A; 1 is added automatically
  std::vector<ClosureGen> closure_K;
  CandidateStrategy strategy;
};

struct OrderDiscInstance {
  OrderModule order;   // verified A-order of the algebra
  SplitPtr splitting;  // splitting data of the same algebra
  RingElem delta;      // nonzero element of A
  CandidateStrategy strategy;
};

// ---- reports ----------------------------------------------------------------------

struct TupleTrace {
  std::vector<std::string> gamma;  // entries gamma_ij, row-major over i < j
  // "difference-outside-set" | "product-mismatch" | "gamma-poly-not-integral"
  // | "system-unsolvable" | "solved"
  std::string outcome;
  std::string base;  // printed base solution when solved
  int kept = 0;      // representatives this tuple contributed
};

struct SolutionReport {
  std::vector<std::vector<RingElem>> poly_reps;  // monic, ascending
  std::vector<AlgElem> elem_reps;
  bool complete = false;    // the candidate set was certified complete
  QuotientReport quotient;  // shift quotient used to close the orbits
  std::vector<TupleTrace> trace;
  bool trace_truncated = false;
  long long tuples_total = 0;
  long long tuples_pruned = 0;  // discarded by the floating-point prefilter
};

// ---- tuple enumeration ------------------------------------------------------------

namespace soldetail {

constexpr size_t kTraceCap = 10000;

// emb[i][e]: value of candidate i at the e-th complex root of Q.
inline std::vector<std::vector<std::complex<double>>> embed_candidates(
    const SplitPtr& S, const std::vector<GElem>& C) {
  using Cd = std::complex<double>;
  std::vector<Cd> Q;
  for (auto& q : S->q_over_K)
    Q.push_back(Cd(sdetail::rat_of(q).get_d(), 0.0));
  std::vector<Cd> ur = odetail::dk_roots(Q);
  std::vector<std::vector<Cd>> emb(
      C.size(), std::vector<Cd>(ur.size(), Cd(0.0, 0.0)));
  for (size_t i = 0; i < C.size(); i++)
    for (size_t e = 0; e < ur.size(); e++) {
      Cd acc(0.0, 0.0);
      for (size_t l = C[i].c.size(); l-- > 0;)
        acc = acc * ur[e] + Cd(sdetail::rat_of(C[i].c[l]).get_d(), 0.0);
      emb[i][e] = acc;
    }
  return emb;
}

// Enumerate the ordered difference tuples (gamma_ij) drawn from the candidate
// set: free entries gamma_{i,i+1} run over the set, forced entries must lie in
// the set, and the squared product of all entries must equal delta exactly.
// sink fills in the outcome of each surviving tuple's trace record.
inline void for_each_consistent_tuple(
    const SplitPtr& S, int n, const RingElem& delta, const CandidateSet& FF,
    SolutionReport& rep,
    const std::function<void(const std::vector<std::vector<GElem>>&,
                             TupleTrace&)>& sink) {
  const RingPtr& R = S->owner->base;
  rep.complete = FF.complete;
  const auto& C = FF.elements;
  const size_t m = C.size();
  if (m == 0) return;
  const size_t nf = static_cast<size_t>(n - 1);  // free tuple positions

  std::unordered_set<std::string> cstr;
  for (auto& c : C) cstr.insert(to_string(c));
  auto member = [&](const GElem& g) {
    if (cstr.count(to_string(g)) != 0) return true;
    // printed forms are canonical over Z; over presented bases fall back to
    // exact comparison (cross-multiplied coordinate equality)
    for (auto& c : C)
      if (c == g) return true;
    return false;
  };

  // floating-point prefilter, available over base Z only
  bool numeric = R->nvars() == 0;
  std::vector<std::vector<std::complex<double>>> emb;
  double dnum = 0.0;
  if (numeric) {
    emb = embed_candidates(S, C);
    dnum = odetail::int_of(delta).get_d();
    for (auto& row : emb)
      for (auto& v : row)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
          numeric = false;  // unusable embeddings: fall back to exact-only
  }
  const size_t ne = numeric ? emb[0].size() : 0;

  auto record = [&](TupleTrace&& t) {
    if (rep.trace.size() < kTraceCap)
      rep.trace.push_back(std::move(t));
    else
      rep.trace_truncated = true;
  };
  auto gamma_strings = [&](const std::vector<std::vector<GElem>>& gam) {
    std::vector<std::string> out;
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++)
        out.push_back(to_string(gam[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    return out;
  };

  const GElem dconst = g_const(S, frac(delta));
  const std::complex<double> dc(dnum, 0.0);
  std::vector<size_t> idx(nf, 0);
  for (;;) {
    rep.tuples_total++;
    bool pruned = false;
    if (numeric) {
      for (size_t e = 0; e < ne && !pruned; e++) {
        std::complex<double> prod(1.0, 0.0);
        for (int i = 0; i < n; i++)
          for (int j = i + 1; j < n; j++) {
            std::complex<double> sij(0.0, 0.0);
            for (int k = i; k < j; k++)
              sij += emb[idx[static_cast<size_t>(k)]][e];
            prod *= sij;
          }
        prod *= prod;
        // relative band: survivors are verified exactly, so width only
        // trades speed, never correctness
        double scale = std::norm(prod) + dnum * dnum + 1.0;
        if (std::norm(prod - dc) > 1e-12 * scale) pruned = true;
      }
    }
    if (pruned) {
      rep.tuples_pruned++;
    } else {
      std::vector<std::vector<GElem>> gam(
          static_cast<size_t>(n), std::vector<GElem>(static_cast<size_t>(n)));
      bool inside = true;
      for (int i = 0; i < n && inside; i++)
        for (int j = i + 1; j < n && inside; j++) {
          GElem sij = C[idx[static_cast<size_t>(i)]];
          for (int k = i + 1; k < j; k++)
            sij = sij + C[idx[static_cast<size_t>(k)]];
          sij = g_elem(S, sij.c);  // content-normalized coordinates
          if (j > i + 1 && !member(sij)) inside = false;
          gam[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(sij);
        }
      if (!inside) {
        TupleTrace t;
        t.gamma = gamma_strings(gam);
        t.outcome = "difference-outside-set";
        record(std::move(t));
      } else {
        GElem p = g_int(S, 1);
        for (int i = 0; i < n; i++)
          for (int j = i + 1; j < n; j++)
            p = p * gam[static_cast<size_t>(i)][static_cast<size_t>(j)];
        p = p * p;
        TupleTrace t;
        t.gamma = gamma_strings(gam);
        if (!(p == dconst)) {
          t.outcome = "product-mismatch";
        } else {
          sink(gam, t);
        }
        record(std::move(t));
      }
    }
    size_t pos = nf;
    while (pos > 0 && ++idx[pos - 1] == m) {
      idx[pos - 1] = 0;
      pos--;
    }
    if (pos == 0) break;
  }
}

}  // namespace soldetail

// ---- polynomial solver ------------------------------------------------------------

inline SolutionReport solve_poly_disc(const PolyDiscInstance& inst) {
  const SplitPtr& S = inst.splitting;
  require(static_cast<bool>(S), "DomainError", "instance without splitting data");
  const EtalePtr& E = S->owner;
  const RingPtr& R = E->base;
  const int n = E->deg;
  const int d = S->degree;
  check_owner_ring(R, inst.delta);
  require(n >= 2, "DegreeMismatch", "the searched degree must be at least 2");
  require(!is_zero(inst.delta), "ZeroDelta",
          "the target discriminant must be nonzero");

  std::vector<GElem> gens{g_int(S, 1)};
  for (auto& g : inst.root_module) {
    check_integral_g(S, g);
    gens.push_back(g_elem(S, g.value.c));
  }
  const size_t GN = gens.size();

  SolutionReport rep;
  // shift representatives theta_1..theta_h of ((1/n)A cap A_K)/A; the method
  // needs this quotient finite, and that must be settled before any search
  std::vector<ClosureGen> closure{
      ClosureGen{frac_int(R, 1), {ring_int(R, -1), ring_int(R, 1)}}};
  for (auto& g : inst.closure_K) closure.push_back(g);
  rep.quotient = nth_division_reps(R, closure, Int(n));
  if (!rep.quotient.finite)
    fail("ConditionFailure",
         "the quotient ((1/n)A cap A_K)/A admits no finite representative "
         "system (error condition e10.1.2m), so the solution classes cannot "
         "be enumerated");

  CandidateSet FF = candidate_set(S, inst.delta, inst.strategy);

  // the linear system matrix is tuple-independent: for position i and
  // u-power l, row i*d+l reads  n * sum_r x_{r,i} gens_r  - y = gamma_i
  const size_t cols = GN * static_cast<size_t>(n) + 1;
  const size_t rows = static_cast<size_t>(n) * static_cast<size_t>(d);
  std::vector<std::vector<FracElem>> M(
      rows, std::vector<FracElem>(cols, frac_int(R, 0)));
  const FracElem nK = frac_int(R, Int(n));
  for (int i = 0; i < n; i++) {
    for (int l = 0; l < d; l++) {
      size_t row = static_cast<size_t>(i) * static_cast<size_t>(d) +
                   static_cast<size_t>(l);
      for (size_t r = 0; r < GN; r++)
        M[row][static_cast<size_t>(i) * GN + r] =
            nK * gens[r].c[static_cast<size_t>(l)];
    }
    M[static_cast<size_t>(i) * static_cast<size_t>(d)][cols - 1] =
        frac_int(R, -1);
  }

  const FracElem one = frac_int(R, 1);
  const FracElem dK = frac(inst.delta);
  std::vector<std::vector<RingElem>> kept;

  auto sink = [&](const std::vector<std::vector<GElem>>& gam, TupleTrace& t) {
    // gamma_i = sum_{j != i} gamma_ij with gamma_ij = -gamma_ji for j < i
    std::vector<GElem> gi(static_cast<size_t>(n), g_int(S, 0));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        if (j == i) continue;
        auto& v = gi[static_cast<size_t>(i)];
        v = i < j ? v + gam[static_cast<size_t>(i)][static_cast<size_t>(j)]
                  : v - gam[static_cast<size_t>(j)][static_cast<size_t>(i)];
      }
    // prod (X - gamma_i) must have coefficients in A: it equals
    // n^n F((X + y)/n) for any solution F with this difference tuple
    std::vector<GElem> W = g_poly_from_roots(S, gi);
    for (size_t k = 0; k + 1 < W.size(); k++) {
      std::optional<FracElem> ck = g_as_K(W[k]);
      if (!ck || !frac_in_ring(*ck)) {
        t.outcome = "gamma-poly-not-integral";
        return;
      }
    }
    std::vector<FracElem> rhs(rows, frac_int(R, 0));
    for (int i = 0; i < n; i++)
      for (int l = 0; l < d; l++)
        rhs[static_cast<size_t>(i) * static_cast<size_t>(d) +
            static_cast<size_t>(l)] =
            gi[static_cast<size_t>(i)].c[static_cast<size_t>(l)];
    LinSolveA sol = solve_linear_A(R, M, rhs);
    if (!sol.solvable) {
      t.outcome = "system-unsolvable";
      return;
    }
    t.outcome = "solved";
    std::vector<GElem> base(static_cast<size_t>(n), g_int(S, 0));
    for (int i = 0; i < n; i++)
      for (size_t r = 0; r < GN; r++)
        base[static_cast<size_t>(i)] =
            base[static_cast<size_t>(i)] +
            frac(sol.x0[static_cast<size_t>(i) * GN + r]) * gens[r];
    for (size_t i = 0; i < base.size(); i++)
      t.base += (i ? "; " : "") + to_string(base[i]);
    // every solution with this tuple is a theta-shift of the base roots
    for (auto& th : rep.quotient.representatives) {
      GElem shift = g_const(S, th);
      std::vector<GElem> roots;
      for (auto& b : base) roots.push_back(b + shift);
      std::vector<GElem> F = g_poly_from_roots(S, roots);
      std::vector<RingElem> FA;
      bool in_A = true;
      for (auto& cg : F) {
        std::optional<FracElem> ck = g_as_K(cg);
        std::optional<RingElem> ca = ck ? frac_in_ring(*ck) : std::nullopt;
        if (!ca) {
          in_A = false;
          break;
        }
        FA.push_back(*ca);
      }
      if (!in_A) continue;
      std::vector<FracElem> Fk;
      for (auto& a : FA) Fk.push_back(frac(a));
      if (!(discriminant_field(Fk, one) == dK)) continue;
      bool dup = false;
      for (auto& prev : kept)
        if (poly_equiv(R, prev, FA)) {
          dup = true;
          break;
        }
      if (!dup) {
        kept.push_back(FA);
        t.kept++;
      }
    }
  };

  soldetail::for_each_consistent_tuple(S, n, inst.delta, FF, rep, sink);
  rep.poly_reps = std::move(kept);
  return rep;
}

// ---- order element solver ----------------------------------------------------------

inline SolutionReport solve_order_disc(const OrderDiscInstance& inst) {
  const OrderModule& O = inst.order;
  const EtalePtr& E = O.owner;
  require(static_cast<bool>(E), "DomainError", "instance without an order");
  const RingPtr& R = E->base;
  const SplitPtr& S = inst.splitting;
  require(static_cast<bool>(S), "DomainError", "instance without splitting data");
  check_same_algebra(S->owner, E);
  const int n = E->deg;
  const int d = S->degree;
  check_owner_ring(R, inst.delta);
  require(n >= 2, "DegreeMismatch", "the algebra must have degree at least 2");
  require(!is_zero(inst.delta), "ZeroDelta",
          "the target discriminant must be nonzero");

  SolutionReport rep;
  // scalar-part representatives of (O cap K)/A; finiteness is the method's
  // hypothesis and is settled before any search
  rep.quotient = order_K_part_reps(O);
  if (!rep.quotient.finite)
    fail("ConditionFailure",
         "the quotient (O cap K)/A admits no finite representative system "
         "(error condition e10.1.5m), so the solution classes cannot be "
         "enumerated");

  CandidateSet FF = candidate_set(S, inst.delta, inst.strategy);

  const size_t m = O.gens.size();
  std::vector<std::vector<GElem>> cj;  // cj[k][i]: conjugates of omega_k
  for (auto& w : O.gens) cj.push_back(conjugates(w, S));
  // tuple-independent system matrix: for the p-th pair (i, j) and u-power l,
  // row p*d+l reads  sum_k x_k (omega_k^(i) - omega_k^(j)) = gamma_ij
  const size_t pairs = static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
  const size_t rows = pairs * static_cast<size_t>(d);
  std::vector<std::vector<FracElem>> M(
      rows, std::vector<FracElem>(m, frac_int(R, 0)));
  {
    size_t p = 0;
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++, p++)
        for (size_t k = 0; k < m; k++) {
          GElem diff = cj[k][static_cast<size_t>(i)] -
                       cj[k][static_cast<size_t>(j)];
          for (int l = 0; l < d; l++)
            M[p * static_cast<size_t>(d) + static_cast<size_t>(l)][k] =
                diff.c[static_cast<size_t>(l)];
        }
  }

  const FracElem dK = frac(inst.delta);
  std::vector<AlgElem> kept;

  auto sink = [&](const std::vector<std::vector<GElem>>& gam, TupleTrace& t) {
    std::vector<FracElem> rhs(rows, frac_int(R, 0));
    size_t p = 0;
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++, p++)
        for (int l = 0; l < d; l++)
          rhs[p * static_cast<size_t>(d) + static_cast<size_t>(l)] =
              gam[static_cast<size_t>(i)][static_cast<size_t>(j)]
                  .c[static_cast<size_t>(l)];
    LinSolveA sol = solve_linear_A(R, M, rhs);
    if (!sol.solvable) {
      t.outcome = "system-unsolvable";
      return;
    }
    t.outcome = "solved";
    AlgElem a0 = alg_int(E, 0);
    for (size_t k = 0; k < m; k++) a0 = a0 + frac(sol.x0[k]) * O.gens[k];
    t.base = to_string(a0);
    // all elements with this difference tuple are a0 + (O cap K); keep one
    // representative per A-equivalence class
    for (auto& th : rep.quotient.representatives) {
      AlgElem b = a0 + alg_const(E, th);
      // re-verify membership and the discriminant value on the survivor
      if (!solve_linear_A(R, O.coord_forms, b.coords).solvable) continue;
      if (!(disc_element(b) == dK)) continue;
      bool dup = false;
      for (auto& prev : kept)
        if (elem_equiv(prev, b)) {
          dup = true;
          break;
        }
      if (!dup) {
        kept.push_back(b);
        t.kept++;
      }
    }
  };

  soldetail::for_each_consistent_tuple(S, n, inst.delta, FF, rep, sink);
  rep.elem_reps = std::move(kept);
  return rep;
}

// ---- integer brute force ------------------------------------------------------------

struct BruteClasses {
  std::vector<std::vector<Int>> polys;       // monic, ascending, lead included
  std::vector<std::vector<size_t>> classes;  // index lists; first = representative
};

// Enumerate monic F = X^n + a_{n-1} X^{n-1} + ... + a_0 over Z with
// |a_i| <= box and discriminant delta, partitioned into shift classes.
inline BruteClasses brute_force_poly_disc(int n, const Int& delta,
                                          const Int& box) {
  require(n == 2 || n == 3, "UnsupportedDegree",
          "direct enumeration is implemented for degrees 2 and 3");
  require(box >= 1 && box <= 10000, "DomainError",
          "coefficient box must lie in [1, 10000]");
  require(!is_zero(delta), "ZeroDelta",
          "shift classes need a nonzero discriminant");
  BruteClasses out;
  if (n == 2) {
    for (Int b = -box; b <= box; b++)
      for (Int c = -box; c <= box; c++)
        if (discriminant_z({c, b, Int(1)}) == delta)
          out.polys.push_back({c, b, Int(1)});
  } else {
    for (Int a = -box; a <= box; a++)
      for (Int b = -box; b <= box; b++)
        for (Int c = -box; c <= box; c++)
          if (discriminant_z({c, b, a, Int(1)}) == delta)
            out.polys.push_back({c, b, a, Int(1)});
  }
  RingPtr Z = ring_Z();
  std::vector<std::vector<RingElem>> reps;
  for (size_t i = 0; i < out.polys.size(); i++) {
    std::vector<RingElem> F;
    for (auto& c : out.polys[i]) F.push_back(ring_int(Z, c));
    bool placed = false;
    for (size_t k = 0; k < reps.size() && !placed; k++)
      if (poly_equiv(Z, reps[k], F)) {
        out.classes[k].push_back(i);
        placed = true;
      }
    if (!placed) {
      reps.push_back(std::move(F));
      out.classes.push_back({i});
    }
  }
  return out;
}

// ---- the infinite-quotient counterexample -------------------------------------------

struct CounterexampleReport {
  RingPtr ring;     // A = Z[C(n,1) t, C(n,2) t^2, ..., t^n], variables g1..gn
  RingElem delta;   // disc(X^n - c) inside A
  // generators of A_K = Z[t] over A: t^j = g_j / C(n,j) with certificate
  // X^n - g_n^j; the constant 1 is listed first
  std::vector<ClosureGen> closure_K;
  std::vector<std::vector<RingElem>> family;  // F_1..F_{m_max}, ascending
  std::vector<bool> disc_matches;             // D(F_m) = delta, checked exactly
  bool pairwise_inequivalent = false;
};

// The family F_m = (X + t^{mn+1})^n - c over A = Z[C(n,1) t, ..., t^n]: every
// member has discriminant disc(X^n - c), no two are shift-equivalent over A,
// and ((1/n)A cap A_K)/A is infinite — the finiteness hypothesis fails here.
inline CounterexampleReport counterexample_family(int n, const Int& c,
                                                  int m_max) {
  require(n >= 2, "DegreeMismatch", "the family needs degree at least 2");
  require(c != 0, "DomainError", "the constant term c must be nonzero");
  require(m_max >= 1 && m_max <= 20, "DomainError",
          "family size must lie in [1, 20]");

  // presentation of A by elimination: kernel of Z[U_1..U_n] -> Z[t] with
  // U_j -> C(n,j) t^j, computed from the graph ideal in Z[T, U_1..U_n]
  const int nv = n + 1;  // T first, then U_1..U_n
  MonOrder elim = MonOrder::block(1);
  std::vector<ZPolyM> graph;
  for (int j = 1; j <= n; j++) {
    Monomial tj = Monomial::one(nv);
    tj.e[0] = j;
    tj.deg = j;
    graph.push_back(
        ZPolyM::var(nv, j, Int(1), elim) -
        ZPolyM::term(nv, tj, binomial(Int(n), static_cast<unsigned long>(j)),
                     elim));
  }
  std::vector<ZPolyM> rels;
  for (auto& g : groebner(graph, elim)) {
    bool t_free = true;
    for (auto& term : g.t)
      if (term.first.e[0] != 0) {
        t_free = false;
        break;
      }
    if (!t_free) continue;  // a T-free lead forces the whole element T-free
    ZPolyM h(n, MonOrder::grevlex());
    for (auto& term : g.t) {
      Monomial mm = Monomial::one(n);
      for (int k = 0; k < n; k++)
        mm.e[static_cast<size_t>(k)] = term.first.e[static_cast<size_t>(k) + 1];
      mm.deg = term.first.deg;
      h.t.push_back({mm, term.second});
    }
    h.sort_terms();
    rels.push_back(std::move(h));
  }
  VarTable vars;
  for (int j = 1; j <= n; j++) vars.names.push_back("g" + std::to_string(j));

  CounterexampleReport out;
  out.ring = make_ring(std::move(vars), std::move(rels));
  const RingPtr& A = out.ring;

  std::vector<Int> xnc(static_cast<size_t>(n) + 1, Int(0));
  xnc[0] = -c;
  xnc[static_cast<size_t>(n)] = 1;
  out.delta = ring_int(A, discriminant_z(xnc));

  out.closure_K.push_back(
      ClosureGen{frac_int(A, 1), {ring_int(A, -1), ring_int(A, 1)}});
  RingElem gn = ring_var(A, n - 1);
  for (int j = 1; j < n; j++) {
    std::vector<RingElem> cert(static_cast<size_t>(n) + 1, ring_int(A, 0));
    cert[0] = -pow(gn, static_cast<unsigned long>(j));  // (t^j)^n = g_n^j
    cert[static_cast<size_t>(n)] = ring_int(A, 1);
    out.closure_K.push_back(ClosureGen{
        frac(ring_var(A, j - 1),
             ring_int(A, binomial(Int(n), static_cast<unsigned long>(j)))),
        std::move(cert)});
  }

  // F_m coefficients: the X^{n-j} term of (X + t^{mn+1})^n - c is
  // C(n,j) t^{j(mn+1)} = g_j * g_n^{jm}
  const FracElem one = frac_int(A, 1);
  const FracElem dA = frac(out.delta);
  for (int mi = 1; mi <= m_max; mi++) {
    std::vector<RingElem> F(static_cast<size_t>(n) + 1, ring_int(A, 0));
    F[static_cast<size_t>(n)] = ring_int(A, 1);
    for (int j = 1; j < n; j++)
      F[static_cast<size_t>(n - j)] =
          ring_var(A, j - 1) *
          pow(gn, static_cast<unsigned long>(j) * static_cast<unsigned long>(mi));
    F[0] = pow(gn, static_cast<unsigned long>(n) *
                           static_cast<unsigned long>(mi) +
                       1) -
           ring_int(A, c);
    std::vector<FracElem> Fk;
    for (auto& a : F) Fk.push_back(frac(a));
    out.disc_matches.push_back(discriminant_field(Fk, one) == dA);
    out.family.push_back(std::move(F));
  }

  out.pairwise_inequivalent = true;
  for (size_t i = 0; i < out.family.size(); i++)
    for (size_t j = i + 1; j < out.family.size(); j++)
      if (poly_equiv(A, out.family[i], out.family[j]))
        out.pairwise_inequivalent = false;

  return out;
}

}  // namespace disceq
