#pragma once

// Finitely generated rings A = Z[x_1..x_r]/I presented by generators of I,
// with canonical element representatives (normal forms against a reduced
// strong Groebner basis) and formal fractions over the fraction field K.
//
// The presentation is accepted only when I meets Z trivially, so A has
// characteristic zero; primality of I (A a domain) is an input contract.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "disceq/groebner.hpp"
#include "disceq/parse.hpp"

namespace disceq {

struct RingPresentation {
  VarTable vars;
  std::vector<ZPolyM> relations;
  std::vector<ZPolyM> gb;  // reduced strong basis, grevlex

  int nvars() const { return vars.size(); }

  bool same_as(const RingPresentation& o) const {
    if (vars.names != o.vars.names) return false;
    if (gb.size() != o.gb.size()) return false;
    for (size_t i = 0; i < gb.size(); i++)
      if (!(gb[i] == o.gb[i])) return false;
    return true;
  }
};

using RingPtr = std::shared_ptr<const RingPresentation>;

inline RingPtr make_ring(VarTable vars, std::vector<ZPolyM> relations) {
  auto R = std::make_shared<RingPresentation>();
  for (auto& f : relations) {
    require(!f.is_zero(), "ParseError", "zero polynomial listed as a relation");
    require(f.nvars == vars.size(), "ParseError",
            "relation variable count mismatch");
  }
  R->vars = std::move(vars);
  R->relations = std::move(relations);
  R->gb = groebner(R->relations);
  for (auto& g : R->gb)
    if (!g.is_zero() && g.lm().is_one())
      fail("CharacteristicError",
           "relations force " + to_string(g.lc()) +
               " = 0: the ideal meets the integers nontrivially");
  return R;
}

inline RingPtr make_ring(const std::vector<std::string>& names,
                         const std::vector<std::string>& relation_texts) {
  VarTable vars{names};
  std::vector<ZPolyM> rels;
  for (auto& s : relation_texts) rels.push_back(parse_z(s, vars));
  return make_ring(vars, std::move(rels));
}

inline RingPtr ring_Z() { return make_ring(VarTable{}, {}); }

// Elements ---------------------------------------------------------------------

struct RingElem {
  RingPtr owner;
  ZPolyM rep;  // canonical normal form against owner->gb
};

inline void check_owner(const RingElem& a, const RingElem& b) {
  require(a.owner == b.owner || a.owner->same_as(*b.owner), "OwnerMismatch",
          "elements of different rings");
}

inline RingElem ring_elem(RingPtr R, const ZPolyM& f) {
  return {R, normal_form(f, R->gb)};
}
inline RingElem ring_elem(RingPtr R, const std::string& text) {
  return ring_elem(R, parse_z(text, R->vars));
}
inline RingElem ring_int(RingPtr R, const Int& n) {
  return {R, ZPolyM::constant(R->nvars(), n)};
}
inline RingElem ring_var(RingPtr R, int i) {
  return ring_elem(R, ZPolyM::var(R->nvars(), i, Int(1)));
}

inline RingElem operator+(const RingElem& a, const RingElem& b) {
  check_owner(a, b);
  return {a.owner, normal_form(a.rep + b.rep, a.owner->gb)};
}
inline RingElem operator-(const RingElem& a, const RingElem& b) {
  check_owner(a, b);
  return {a.owner, normal_form(a.rep - b.rep, a.owner->gb)};
}
inline RingElem operator-(const RingElem& a) {
  return {a.owner, normal_form(-a.rep, a.owner->gb)};
}
inline RingElem operator*(const RingElem& a, const RingElem& b) {
  check_owner(a, b);
  return {a.owner, normal_form(a.rep * b.rep, a.owner->gb)};
}
inline bool operator==(const RingElem& a, const RingElem& b) {
  check_owner(a, b);
  return a.rep == b.rep;
}
inline bool elems_equal(const RingElem& a, const RingElem& b) { return a == b; }
inline bool is_zero(const RingElem& a) { return a.rep.is_zero(); }
inline bool is_one(const RingElem& a) {
  return a.rep.is_constant() && !a.rep.is_zero() && a.rep.lc() == 1;
}
inline RingElem pow(const RingElem& a, unsigned long e) {
  RingElem r = ring_int(a.owner, 1);
  for (unsigned long i = 0; i < e; i++) r = r * a;
  return r;
}

inline std::string to_string(const RingElem& a) {
  return poly_string(a.rep, a.owner->vars);
}

// Fractions over K = Frac(A) ----------------------------------------------------
// Not reduced to lowest terms (no gcd theory over A); equality is
// cross-multiplication, which is valid because A is a domain.

struct FracElem {
  RingElem num;
  RingElem den;
};

inline FracElem frac(const RingElem& num, const RingElem& den) {
  check_owner(num, den);
  require(!is_zero(den), "DomainError", "fraction with zero denominator");
  return {num, den};
}
inline FracElem frac(const RingElem& num) {
  return {num, ring_int(num.owner, 1)};
}
inline FracElem frac_int(RingPtr R, const Int& n, const Int& d = 1) {
  return frac(ring_int(R, n), ring_int(R, d));
}

inline bool is_zero(const FracElem& a) { return is_zero(a.num); }
// num/den = 1 iff num = den, valid over a domain with canonical reps
inline bool is_one(const FracElem& a) { return a.num == a.den; }

inline FracElem operator+(const FracElem& a, const FracElem& b) {
  return frac(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline FracElem operator-(const FracElem& a, const FracElem& b) {
  return frac(a.num * b.den - b.num * a.den, a.den * b.den);
}
inline FracElem operator-(const FracElem& a) { return {-a.num, a.den}; }
inline FracElem operator*(const FracElem& a, const FracElem& b) {
  return frac(a.num * b.num, a.den * b.den);
}
inline FracElem operator/(const FracElem& a, const FracElem& b) {
  require(!is_zero(b), "DomainError", "division by zero fraction");
  return frac(a.num * b.den, a.den * b.num);
}
inline bool operator==(const FracElem& a, const FracElem& b) {
  return is_zero(a.num * b.den - b.num * a.den);
}

inline std::string to_string(const FracElem& a) {
  if (is_one(a.den)) return to_string(a.num);
  std::string n = to_string(a.num), d = to_string(a.den);
  if (a.num.rep.t.size() > 1) n = "(" + n + ")";
  if (a.den.rep.t.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

// Cheap normalization preserving the value: exact ring element when the
// denominator divides, else cancel the integer content shared by numerator
// and denominator. Canonical reduced fractions are out of reach without a
// gcd theory over A, so equality stays cross-multiplicative.
inline std::optional<RingElem> frac_in_ring(const FracElem& x);

inline FracElem frac_simplified(const FracElem& x) {
  if (is_zero(x.num)) return frac(ring_int(x.num.owner, 0));
  if (auto h = frac_in_ring(x)) return frac(*h);
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

// Decide num/den in A: find h with h*den = num mod I (unique in a domain).
inline std::optional<RingElem> frac_in_ring(const FracElem& x) {
  const RingPtr& R = x.num.owner;
  std::vector<ZPolyM> row{x.den.rep};
  for (auto& f : R->gb) row.push_back(f);
  auto r = solve_linear_R(std::vector<std::vector<ZPolyM>>{row},
                          std::vector<ZPolyM>{x.num.rep});
  if (!r.solvable) return std::nullopt;
  RingElem h = ring_elem(R, r.x0[0]);
  return h;
}

}  // namespace disceq
