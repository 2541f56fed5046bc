#pragma once

// Coefficient-domain traits used by the polynomial and Groebner templates.
// Three domains: Z (mpz), Q (mpq), F_p. The Groebner engine needs to know
// whether it works over a field, and over Z it needs exact division tests and
// extended gcds for the GCD-polynomial construction.

#include "disceq/fp.hpp"
#include "disceq/util.hpp"

namespace disceq {

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Int> {
  static constexpr bool is_field = false;
  static Int zero() { return Int(0); }
  static Int one() { return Int(1); }
  static Int from_int(const Int& n) { return n; }
  static bool is_zero(const Int& a) { return a == 0; }
  static bool divides(const Int& d, const Int& n) { return disceq::divides(d, n); }
  static Int exact_div(const Int& n, const Int& d) { return disceq::exact_div(n, d); }
  // Unit normalization for basis elements: positive leading coefficient.
  // Returns the unit u such that u*a is canonical.
  static Int canon_unit(const Int& a) { return a < 0 ? Int(-1) : Int(1); }
  static std::string str(const Int& a) { return a.get_str(); }
};

template <>
struct coeff_traits<Rat> {
  static constexpr bool is_field = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_int(const Int& n) { return Rat(n); }
  static Rat div(const Rat& n, const Rat& d) { return n / d; }
  static bool is_zero(const Rat& a) { return a == 0; }
  static bool divides(const Rat& d, const Rat&) { return d != 0; }
  static Rat exact_div(const Rat& n, const Rat& d) { return n / d; }
  static Rat canon_unit(const Rat& a) { return 1 / a; }
  static std::string str(const Rat& a) { return to_string(a); }
};

template <>
struct coeff_traits<Fp> {
  static constexpr bool is_field = true;
  static Fp zero() { return Fp{}; }
  static Fp one() { fail("DomainError", "F_p one() needs a modulus"); }
  static Fp from_int(const Int&) { fail("DomainError", "F_p literal needs a modulus"); }
  static Fp div(const Fp& n, const Fp& d) { return n * d.inv(); }
  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static bool divides(const Fp& d, const Fp&) { return !d.is_zero(); }
  static Fp exact_div(const Fp& n, const Fp& d) { return n * d.inv(); }
  static Fp canon_unit(const Fp& a) { return a.inv(); }
  static std::string str(const Fp& a) { return std::to_string(a.v); }
};

}  // namespace disceq
