#pragma once

// Text form of polynomials: integer literals, named variables, + - * / ^ and
// parentheses. `*` may be omitted between juxtaposed factors ("2x^2y"). `/`
// requires a constant divisor and exact divisibility in the coefficient
// domain. The printer emits canonical text that reparses to the same
// polynomial.

#include <cctype>
#include <string>
#include <vector>

#include "disceq/mpoly.hpp"

namespace disceq {

struct VarTable {
  std::vector<std::string> names;

  int index_of(const std::string& s) const {
    for (size_t i = 0; i < names.size(); i++)
      if (names[i] == s) return static_cast<int>(i);
    return -1;
  }
  int size() const { return static_cast<int>(names.size()); }
};

namespace detail {

template <class C>
struct PolyParser {
  const std::string& src;
  const VarTable& vars;
  MonOrder ord;
  size_t pos = 0;

  PolyParser(const std::string& s, const VarTable& v, MonOrder o)
      : src(s), vars(v), ord(o) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) pos++;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  [[noreturn]] void err(const std::string& what) {
    fail("ParseError", what + " at offset " + std::to_string(pos) + " in \"" + src + "\"");
  }

  MPoly<C> parse() {
    MPoly<C> r = expr();
    if (peek() != '\0') err("trailing input");
    return r;
  }

  MPoly<C> expr() {
    MPoly<C> r = peek() == '-' ? (pos++, -term()) : term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        pos++;
        r = r + term();
      } else if (c == '-') {
        pos++;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  bool starts_factor(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  MPoly<C> term() {
    MPoly<C> r = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        pos++;
        r = r * factor();
      } else if (c == '/') {
        pos++;
        r = divide_exact(r, factor());
      } else if (starts_factor(c)) {
        r = r * factor();  // juxtaposition
      } else {
        return r;
      }
    }
  }

  MPoly<C> divide_exact(const MPoly<C>& num, const MPoly<C>& den) {
    if (!den.is_constant() || den.is_zero()) err("divisor must be a nonzero constant");
    const C d = den.lc();
    MPoly<C> r(num.nvars, num.ord);
    for (auto& [m, c] : num.t) {
      if constexpr (coeff_traits<C>::is_field) {
        r.t.push_back({m, coeff_traits<C>::div(c, d)});
      } else {
        if (!coeff_traits<C>::divides(d, c))
          err("division is not exact over the integers");
        r.t.push_back({m, coeff_traits<C>::exact_div(c, d)});
      }
    }
    return r;
  }

  MPoly<C> factor() {
    MPoly<C> b = base();
    if (peek() == '^') {
      pos++;
      long e = integer_literal();
      if (e < 0) err("negative exponent");
      MPoly<C> r = MPoly<C>::constant(vars.size(), coeff_traits<C>::one(), ord);
      for (long i = 0; i < e; i++) r = r * b;
      return r;
    }
    return b;
  }

  long integer_literal() {
    skip_ws();
    bool neg = false;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+'))
      neg = src[pos++] == '-';
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      err("expected integer");
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos++] - '0');
      if (v > 1000000) err("exponent too large");
    }
    return neg ? -v : v;
  }

  MPoly<C> base() {
    char c = peek();
    if (c == '(') {
      pos++;
      MPoly<C> r = expr();
      if (peek() != ')') err("expected ')'");
      pos++;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        digits += src[pos++];
      Int n(digits);
      return MPoly<C>::constant(vars.size(), coeff_traits<C>::from_int(n), ord);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
              src[pos] == '\''))
        name += src[pos++];
      int v = vars.index_of(name);
      if (v < 0) err("unknown variable '" + name + "'");
      return MPoly<C>::var(vars.size(), v, coeff_traits<C>::one(), ord);
    }
    err("expected a factor");
  }
};

}  // namespace detail

template <class C>
MPoly<C> parse_poly(const std::string& s, const VarTable& vars,
                    MonOrder ord = MonOrder::grevlex()) {
  detail::PolyParser<C> p(s, vars, ord);
  return p.parse();
}

inline ZPolyM parse_z(const std::string& s, const VarTable& vars,
                      MonOrder ord = MonOrder::grevlex()) {
  return parse_poly<Int>(s, vars, ord);
}
inline QPolyM parse_q(const std::string& s, const VarTable& vars,
                      MonOrder ord = MonOrder::grevlex()) {
  return parse_poly<Rat>(s, vars, ord);
}

// Printing --------------------------------------------------------------------

inline std::string mono_string(const Monomial& m, const VarTable& vars) {
  std::string r;
  for (int i = 0; i < m.nvars(); i++) {
    if (m.e[i] == 0) continue;
    if (!r.empty()) r += "*";
    r += vars.names[i];
    if (m.e[i] > 1) r += "^" + std::to_string(m.e[i]);
  }
  return r;
}

namespace detail {
inline std::string coeff_string(const Int& c) { return to_string(c); }
inline std::string coeff_string(const Rat& c) { return to_string(c); }
inline std::string coeff_string(const Fp& c) { return std::to_string(c.v); }
inline bool coeff_is_negative(const Int& c) { return c < 0; }
inline bool coeff_is_negative(const Rat& c) { return c < 0; }
inline bool coeff_is_negative(const Fp&) { return false; }
inline bool coeff_is_pm_one(const Int& c) { return c == 1 || c == -1; }
inline bool coeff_is_pm_one(const Rat& c) { return c == 1 || c == -1; }
inline bool coeff_is_pm_one(const Fp& c) { return c.v == 1; }
}  // namespace detail

template <class C>
std::string poly_string(const MPoly<C>& f, const VarTable& vars) {
  if (f.is_zero()) return "0";
  std::string r;
  bool first = true;
  for (auto& [m, c] : f.t) {
    std::string cs = detail::coeff_string(c);
    bool neg = detail::coeff_is_negative(c);
    if (first) {
      if (neg) r += "-";
      first = false;
    } else {
      r += neg ? " - " : " + ";
    }
    if (neg) cs = cs.substr(1);
    std::string ms = m.is_one() ? "" : mono_string(m, vars);
    if (ms.empty())
      r += cs;
    else if (detail::coeff_is_pm_one(c))
      r += ms;
    else
      r += cs + "*" + ms;
  }
  return r;
}

}  // namespace disceq
