#pragma once

// Strong Groebner engine over Z (Kandri-Rody/Kapur style: S-polynomials plus
// gcd-polynomials, Euclidean top reduction with floor division) and classical
// Buchberger over fields. One engine handles ideals and submodules of R^k: an
// ideal is the k=1 case. Module term orders support block elimination, which
// yields syzygies, linear-system solving over R, and membership cofactors.
//
// Normal forms are canonical: the residue coefficient at each monomial lies in
// [0, d) where d is the least positive leading coefficient among applicable
// reducers. For a strong basis this makes the normal form a unique coset
// representative, independent of reduction choices.

#include <algorithm>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "disceq/mpoly.hpp"

namespace disceq {

// Module monomials: a monomial together with a free-module component.
struct MMono {
  Monomial m;
  int comp = 0;

  friend bool operator==(const MMono& a, const MMono& b) {
    return a.comp == b.comp && a.m == b.m;
  }
};

// Block elimination order on R^k. Components are assigned to blocks; any term
// whose component sits in a lower-numbered block is greater than any term in a
// higher-numbered block (so a leading term in block 1 forces the whole block-0
// part to vanish). Within a block: position first, then the base monomial
// order.
struct ModOrder {
  MonOrder base = MonOrder::grevlex();
  std::vector<int> block_of;  // block index per component; empty = single block

  static ModOrder plain(MonOrder b = MonOrder::grevlex()) { return {b, {}}; }
  // comps [0, split) form block 0, the rest block 1
  static ModOrder eliminate_first(int split, int ncomp,
                                  MonOrder b = MonOrder::grevlex()) {
    ModOrder o{b, std::vector<int>(static_cast<size_t>(ncomp), 1)};
    for (int i = 0; i < split; i++) o.block_of[static_cast<size_t>(i)] = 0;
    return o;
  }
  int block(int comp) const {
    return block_of.empty() ? 0 : block_of[static_cast<size_t>(comp)];
  }
};

inline int mmono_cmp(const MMono& a, const MMono& b, const ModOrder& o) {
  int ba = o.block(a.comp), bb = o.block(b.comp);
  if (ba != bb) return ba < bb ? 1 : -1;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return mono_cmp(a.m, b.m, o.base);
}

// Vector polynomial: element of R^ncomp with terms strictly descending.
template <class C>
struct MVPoly {
  using Term = std::pair<MMono, C>;

  int nvars = 0;
  int ncomp = 1;
  ModOrder ord;
  std::vector<Term> t;

  MVPoly() = default;
  MVPoly(int nv, int nc, ModOrder o) : nvars(nv), ncomp(nc), ord(o) {}

  bool is_zero() const { return t.empty(); }
  const MMono& lm() const { return t.front().first; }
  const C& lc() const { return t.front().second; }

  MVPoly operator-() const {
    MVPoly r = *this;
    for (auto& [m, c] : r.t) c = -c;
    return r;
  }

  friend MVPoly operator+(const MVPoly& a, const MVPoly& b) {
    MVPoly r(a.nvars, a.ncomp, a.ord);
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
      int c = mmono_cmp(a.t[i].first, b.t[j].first, a.ord);
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
  friend MVPoly operator-(const MVPoly& a, const MVPoly& b) { return a + (-b); }

  // multiply by the ring term c * x^m (component unchanged)
  MVPoly mul_term(const Monomial& m, const C& c) const {
    MVPoly r(nvars, ncomp, ord);
    if (coeff_traits<C>::is_zero(c)) return r;
    r.t.reserve(t.size());
    for (auto& [mm, cc] : t) {
      C p = cc * c;
      if (!coeff_traits<C>::is_zero(p))
        r.t.push_back({MMono{mono_mul(mm.m, m), mm.comp}, p});
    }
    return r;
  }
  MVPoly scaled(const C& c) const { return mul_term(Monomial::one(nvars), c); }

  MVPoly mul_poly(const MPoly<C>& f) const {
    MVPoly r(nvars, ncomp, ord);
    for (auto& [m, c] : f.t) r = r + mul_term(m, c);
    return r;
  }

  friend bool operator==(const MVPoly& a, const MVPoly& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); i++)
      if (!(a.t[i].first == b.t[i].first) || !(a.t[i].second == b.t[i].second))
        return false;
    return true;
  }
};

// Embedding and projection between MPoly and MVPoly -----------------------------

template <class C>
MVPoly<C> mv_embed(const MPoly<C>& f, int ncomp, int comp, const ModOrder& o) {
  MVPoly<C> r(f.nvars, ncomp, o);
  r.t.reserve(f.t.size());
  for (auto& [m, c] : f.t) r.t.push_back({MMono{m, comp}, c});
  std::sort(r.t.begin(), r.t.end(),
            [&o](const typename MVPoly<C>::Term& a,
                 const typename MVPoly<C>::Term& b) {
              return mmono_cmp(a.first, b.first, o) > 0;
            });
  return r;
}

// Build (v_0,...,v_{ncomp-1}) from component polynomials.
template <class C>
MVPoly<C> mv_vector(const std::vector<MPoly<C>>& comps, const ModOrder& o) {
  int nv = 0;
  for (auto& f : comps) nv = std::max(nv, f.nvars);
  MVPoly<C> r(nv, static_cast<int>(comps.size()), o);
  for (size_t i = 0; i < comps.size(); i++)
    for (auto& [m, c] : comps[i].t) r.t.push_back({MMono{m, static_cast<int>(i)}, c});
  std::sort(r.t.begin(), r.t.end(),
            [&o](const typename MVPoly<C>::Term& a,
                 const typename MVPoly<C>::Term& b) {
              return mmono_cmp(a.first, b.first, o) > 0;
            });
  return r;
}

template <class C>
MPoly<C> mv_component(const MVPoly<C>& v, int comp, MonOrder ord) {
  MPoly<C> r(v.nvars, ord);
  for (auto& [m, c] : v.t)
    if (m.comp == comp) r.t.push_back({m.m, c});
  r.sort_terms();
  return r;
}

template <class C>
bool mv_components_zero(const MVPoly<C>& v, int lo, int hi) {
  for (auto& [m, c] : v.t)
    if (m.comp >= lo && m.comp < hi) return false;
  return true;
}

// Canonical scaling: positive leading coefficient over Z, monic over fields.
template <class C>
void mv_canonicalize(MVPoly<C>& g) {
  if (g.is_zero()) return;
  if constexpr (!coeff_traits<C>::is_field) {
    if (g.lc() > 0) return;
  }
  g = g.scaled(coeff_traits<C>::canon_unit(g.lc()));
}

// Canonical normal form --------------------------------------------------------

template <class C>
MVPoly<C> normal_form(MVPoly<C> f, const std::vector<MVPoly<C>>& basis) {
  MVPoly<C> rem(f.nvars, f.ncomp, f.ord);
  while (!f.is_zero()) {
    const MMono& m = f.lm();
    const C& c = f.lc();
    // best reducer: lead divides this term's monomial; least |lc|, then first
    int best = -1;
    for (size_t i = 0; i < basis.size(); i++) {
      const auto& g = basis[i];
      if (g.is_zero()) continue;
      if (g.lm().comp != m.comp || !mono_divides(g.lm().m, m.m)) continue;
      if constexpr (coeff_traits<C>::is_field) {
        best = static_cast<int>(i);
        break;
      } else {
        if (best < 0 || basis[static_cast<size_t>(best)].lc() > g.lc())
          best = static_cast<int>(i);
      }
    }
    if (best < 0) {
      rem.t.push_back(f.t.front());
      f.t.erase(f.t.begin());
      continue;
    }
    const auto& g = basis[static_cast<size_t>(best)];
    Monomial shift = mono_div(m.m, g.lm().m);
    if constexpr (coeff_traits<C>::is_field) {
      C q = coeff_traits<C>::div(c, g.lc());
      f = f - g.mul_term(shift, q);
    } else {
      // g.lc() > 0 by canonicalization; floor division leaves 0 <= r < lc
      Int q = fdiv(c, g.lc());
      if (q != 0) f = f - g.mul_term(shift, q);
      if (!f.is_zero() && f.lm() == m) {
        // residual coefficient is irreducible: park the term
        rem.t.push_back(f.t.front());
        f.t.erase(f.t.begin());
      }
    }
  }
  return rem;
}

// Completion -------------------------------------------------------------------

namespace detail {

template <class C>
struct PairTask {
  std::int64_t deg;   // total degree of the lcm monomial (selection heuristic)
  int i, j;
  bool gcd_kind;      // false = S-polynomial, true = gcd-polynomial
  friend bool operator>(const PairTask& a, const PairTask& b) {
    return std::tie(a.deg, a.i, a.j, a.gcd_kind) >
           std::tie(b.deg, b.i, b.j, b.gcd_kind);
  }
};

template <class C>
void push_pairs(std::priority_queue<PairTask<C>, std::vector<PairTask<C>>,
                                    std::greater<PairTask<C>>>& q,
                const std::vector<MVPoly<C>>& B, int j) {
  const auto& gj = B[static_cast<size_t>(j)];
  for (int i = 0; i < j; i++) {
    const auto& gi = B[static_cast<size_t>(i)];
    if (gi.is_zero() || gi.lm().comp != gj.lm().comp) continue;
    Monomial l = mono_lcm(gi.lm().m, gj.lm().m);
    q.push({l.deg, i, j, false});
    if constexpr (!coeff_traits<C>::is_field) {
      const Int &a = gi.lc(), &b = gj.lc();
      // when one lead coefficient divides the other the gcd-polynomial is a
      // plain multiple of one generator and reduces to zero
      if (!divides(a, b) && !divides(b, a)) q.push({l.deg, i, j, true});
    }
  }
}

}  // namespace detail

// Buchberger completion to a strong basis (no interreduction).
template <class C>
std::vector<MVPoly<C>> strong_complete(std::vector<MVPoly<C>> gens) {
  std::vector<MVPoly<C>> B;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    mv_canonicalize(g);
    B.push_back(g);
  }
  std::priority_queue<detail::PairTask<C>, std::vector<detail::PairTask<C>>,
                      std::greater<detail::PairTask<C>>>
      q;
  for (int j = 1; j < static_cast<int>(B.size()); j++) detail::push_pairs(q, B, j);

  while (!q.empty()) {
    auto [deg, i, j, gcd_kind] = q.top();
    q.pop();
    const auto& gi = B[static_cast<size_t>(i)];
    const auto& gj = B[static_cast<size_t>(j)];
    Monomial l = mono_lcm(gi.lm().m, gj.lm().m);
    Monomial si = mono_div(l, gi.lm().m);
    Monomial sj = mono_div(l, gj.lm().m);
    MVPoly<C> task;
    if constexpr (coeff_traits<C>::is_field) {
      // basis is monic, so the lead coefficients are the needed units (and for
      // F_p they carry the modulus)
      task = gi.mul_term(si, gj.lc()) - gj.mul_term(sj, gi.lc());
    } else {
      const Int &a = gi.lc(), &b = gj.lc();
      if (!gcd_kind) {
        Int l2 = lcm(a, b);
        task = gi.mul_term(si, exact_div(l2, a)) -
               gj.mul_term(sj, exact_div(l2, b));
      } else {
        auto [d, u, v] = gcd_ext(a, b);
        task = gi.mul_term(si, u) + gj.mul_term(sj, v);
      }
    }
    MVPoly<C> h = normal_form(std::move(task), B);
    if (h.is_zero()) continue;
    mv_canonicalize(h);
    B.push_back(std::move(h));
    detail::push_pairs(q, B, static_cast<int>(B.size()) - 1);
  }
  return B;
}

// Minimalize + tail-reduce a strong basis; the result is the unique reduced
// strong basis for the given order (leads sorted ascending).
template <class C>
std::vector<MVPoly<C>> reduce_basis(std::vector<MVPoly<C>> B) {
  std::erase_if(B, [](const MVPoly<C>& g) { return g.is_zero(); });
  std::sort(B.begin(), B.end(), [](const MVPoly<C>& x, const MVPoly<C>& y) {
    int c = mmono_cmp(x.lm(), y.lm(), x.ord);
    if (c != 0) return c < 0;
    if constexpr (!coeff_traits<C>::is_field) {
      if (x.lc() != y.lc()) return x.lc() < y.lc();
    }
    return x.t.size() < y.t.size();
  });
  // drop g whose lead term is strongly divisible by another kept lead
  std::vector<MVPoly<C>> kept;
  for (auto& g : B) {
    bool covered = false;
    for (auto& h : kept) {
      if (h.lm().comp == g.lm().comp && mono_divides(h.lm().m, g.lm().m)) {
        if constexpr (coeff_traits<C>::is_field)
          covered = true;
        else
          covered = divides(h.lc(), g.lc());
        if (covered) break;
      }
    }
    if (!covered) kept.push_back(std::move(g));
  }
  // tail reduction against the other elements (leads are now immutable)
  for (size_t i = 0; i < kept.size(); i++) {
    MVPoly<C> tail = kept[i];
    tail.t.erase(tail.t.begin());
    std::vector<MVPoly<C>> others;
    for (size_t j = 0; j < kept.size(); j++)
      if (j != i) others.push_back(kept[j]);
    MVPoly<C> red = normal_form(std::move(tail), others);
    kept[i].t.resize(1);
    for (auto& tm : red.t) kept[i].t.push_back(tm);
  }
  return kept;
}

template <class C>
std::vector<MVPoly<C>> strong_groebner(std::vector<MVPoly<C>> gens) {
  return reduce_basis(strong_complete(std::move(gens)));
}

// Ideal-level wrappers ---------------------------------------------------------

template <class C>
std::vector<MPoly<C>> groebner(const std::vector<MPoly<C>>& gens,
                               MonOrder ord = MonOrder::grevlex()) {
  ModOrder o = ModOrder::plain(ord);
  std::vector<MVPoly<C>> g;
  for (auto& f : gens) g.push_back(mv_embed(f, 1, 0, o));
  auto B = strong_groebner(std::move(g));
  std::vector<MPoly<C>> out;
  for (auto& b : B) out.push_back(mv_component(b, 0, ord));
  return out;
}

template <class C>
MPoly<C> normal_form(const MPoly<C>& f, const std::vector<MPoly<C>>& gb) {
  if (gb.empty()) return f;
  MonOrder ord = gb.front().ord;
  ModOrder o = ModOrder::plain(ord);
  std::vector<MVPoly<C>> B;
  for (auto& g : gb) B.push_back(mv_embed(g, 1, 0, o));
  return mv_component(normal_form(mv_embed(f.reordered(ord), 1, 0, o), B), 0, f.ord);
}

// Linear algebra over R via block elimination -----------------------------------

template <class C>
struct LinSolveR {
  bool solvable = false;
  std::vector<MPoly<C>> x0;                 // particular solution (cols entries)
  std::vector<std::vector<MPoly<C>>> kernel;  // generators of all homogeneous solutions
};

// Solve M x = b over the polynomial ring; M is rows x cols, entries MPoly.
template <class C>
LinSolveR<C> solve_linear_R(const std::vector<std::vector<MPoly<C>>>& M,
                            const std::vector<MPoly<C>>& b,
                            MonOrder ord = MonOrder::grevlex()) {
  size_t rows = M.size();
  require(rows == b.size(), "DimensionMismatch", "rows of M vs length of b");
  size_t cols = rows == 0 ? 0 : M[0].size();
  for (auto& row : M)
    require(row.size() == cols, "DimensionMismatch", "ragged matrix");
  int nv = 0;
  for (auto& row : M)
    for (auto& e : row) nv = std::max(nv, e.nvars);
  for (auto& e : b) nv = std::max(nv, e.nvars);

  int ncomp = static_cast<int>(rows + cols);
  ModOrder o = ModOrder::eliminate_first(static_cast<int>(rows), ncomp, ord);

  auto pad = [&](const MPoly<C>& f) {
    MPoly<C> g(nv, ord);
    for (auto& [m, c] : f.t) {
      Monomial mm = Monomial::one(nv);
      for (int k = 0; k < f.nvars; k++) mm.e[static_cast<size_t>(k)] = m.e[static_cast<size_t>(k)];
      mm.deg = m.deg;
      g.t.push_back({mm, c});
    }
    g.sort_terms();
    return g;
  };

  std::vector<MVPoly<C>> gens;
  for (size_t j = 0; j < cols; j++) {
    std::vector<MPoly<C>> comps(static_cast<size_t>(ncomp), MPoly<C>::zero(nv, ord));
    for (size_t i = 0; i < rows; i++) comps[i] = pad(M[i][j]);
    comps[rows + j] = MPoly<C>::constant(nv, coeff_traits<C>::one(), ord);
    gens.push_back(mv_vector(comps, o));
  }
  auto B = strong_groebner(std::move(gens));

  LinSolveR<C> res;
  for (auto& g : B) {
    if (!mv_components_zero(g, 0, static_cast<int>(rows))) continue;
    std::vector<MPoly<C>> k;
    for (size_t j = 0; j < cols; j++)
      k.push_back(mv_component(g, static_cast<int>(rows + j), ord));
    res.kernel.push_back(std::move(k));
  }

  std::vector<MPoly<C>> bv(static_cast<size_t>(ncomp), MPoly<C>::zero(nv, ord));
  for (size_t i = 0; i < rows; i++) bv[i] = pad(b[i]);
  MVPoly<C> r = normal_form(mv_vector(bv, o), B);
  if (!mv_components_zero(r, 0, static_cast<int>(rows))) return res;  // unsolvable
  res.solvable = true;
  for (size_t j = 0; j < cols; j++)
    res.x0.push_back(-mv_component(r, static_cast<int>(rows + j), ord));
  return res;
}

// Kernel of M (columns as generators): all k with M k = 0.
template <class C>
std::vector<std::vector<MPoly<C>>> syzygies(
    const std::vector<std::vector<MPoly<C>>>& M,
    MonOrder ord = MonOrder::grevlex()) {
  size_t rows = M.size();
  std::vector<MPoly<C>> zero(rows, MPoly<C>::zero(0, ord));
  for (size_t i = 0; i < rows; i++) zero[i] = MPoly<C>::zero(M[i].empty() ? 0 : M[i][0].nvars, ord);
  auto r = solve_linear_R(M, zero, ord);
  return r.kernel;
}

// Membership with cofactors: g = sum c_i * gens_i when representable.
template <class C>
std::optional<std::vector<MPoly<C>>> ideal_member(
    const MPoly<C>& g, const std::vector<MPoly<C>>& gens,
    MonOrder ord = MonOrder::grevlex()) {
  std::vector<std::vector<MPoly<C>>> M(1, gens);
  auto r = solve_linear_R(M, std::vector<MPoly<C>>{g}, ord);
  if (!r.solvable) return std::nullopt;
  return r.x0;
}

// Generator of (gens) intersected with the integers: 0 if trivial. In a strong
// basis every integer of the ideal is strongly divisible by the lead of a
// basis element with monomial 1, i.e. by a constant basis element.
inline Int elim_integer(const std::vector<ZPolyM>& gens) {
  auto B = groebner(gens);
  Int a = 0;
  for (auto& g : B)
    if (!g.is_zero() && g.lm().is_one()) a = gcd(a, g.lc());
  return a;
}

}  // namespace disceq
