#pragma once

// Shared small utilities: arbitrary-precision helpers, integer factorization,
// deterministic primality, error type used across the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace disceq {

using Int = mpz_class;
using Rat = mpq_class;

// Every library error carries a stable machine-readable code plus a free-form
// message. Codes are the ones named in the operation contracts
// (ParseError, OwnerMismatch, ConditionFailure, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool ok, const std::string& code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

// ---- integer helpers --------------------------------------------------------

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// returns (g, u, v) with g = u*a + v*b, g >= 0
inline std::tuple<Int, Int, Int> gcd_ext(const Int& a, const Int& b) {
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return {g, u, v};
}

inline bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& n, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// floor division (used by the canonical normal-form convention over the
// integers: remainders land in [0, |d|)).
inline Int fdiv(const Int& n, const Int& d) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int fmod(const Int& n, const Int& d) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

inline Int pow_ui(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// binomial with arbitrary Int upper argument (falling factorial over k!),
// so C(n, k) is defined for negative n as well
inline Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline bool is_prime(const Int& n) {
  // 50 Miller-Rabin rounds on top of GMP's BPSW; far past desk-scale needs.
  return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

namespace detail {

inline Int pollard_rho(const Int& n, unsigned long c0) {
  // Brent cycle detection; n must be odd composite and > 1.
  Int x = 2, y = 2, d = 1;
  Int c = static_cast<long>(c0);
  auto step = [&](const Int& v) { return fmod(v * v + c, n); };
  Int ys = y, q = 1;
  unsigned long r = 1, m = 128;
  while (d == 1) {
    x = y;
    for (unsigned long i = 0; i < r; i++) y = step(y);
    unsigned long k = 0;
    while (k < r && d == 1) {
      ys = y;
      unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; i++) {
        y = step(y);
        q = fmod(q * abs(x - y), n);
      }
      d = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (d == n) {
    // backtrack
    d = 1;
    while (d == 1) {
      ys = step(ys);
      d = gcd(abs(x - ys), n);
    }
  }
  return d;
}

}  // namespace detail

// Prime factorization with multiplicity, ascending. Trial division first,
// Pollard rho for stubborn cofactors (inputs here are tiny in practice).
inline std::vector<Int> factor(Int n) {
  require(n != 0, "DomainError", "factor(0) undefined");
  if (n < 0) n = -n;
  std::vector<Int> out;
  for (Int p : {Int(2), Int(3), Int(5)})
    while (divides(p, n)) {
      out.push_back(p);
      n = exact_div(n, p);
    }
  for (long p = 7; p <= 100000 && Int(p) * p <= n; p += 2)
    while (divides(Int(p), n)) {
      out.push_back(p);
      n = exact_div(n, p);
    }
  // recursive split of what remains
  std::vector<Int> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      out.push_back(m);
      continue;
    }
    Int d = m;
    for (unsigned long c = 1; d == m || d == 1; c++) d = detail::pollard_rho(m, c);
    stack.push_back(d);
    stack.push_back(exact_div(m, d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_zero(const Int& a) { return a == 0; }
inline bool is_one(const Int& a) { return a == 1; }
inline bool is_zero(const Rat& a) { return a == 0; }
inline bool is_one(const Rat& a) { return a == 1; }

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

// Deterministic xorshift-style generator for the property suites: fixed seeds
// must reproduce byte-identical runs across platforms, which rules out
// std::mt19937 distribution wrappers (implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }
  // uniform in [lo, hi] inclusive
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t s_;
};

}  // namespace disceq
