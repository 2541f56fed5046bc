#pragma once

// Monomials as exponent vectors with cached total degree, plus the two
// monomial orders used by the library:
//   - grevlex (default everywhere),
//   - block elimination orders (grevlex on the first block, ties broken by
//     grevlex on the rest) for kernel/elimination computations.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "disceq/util.hpp"

namespace disceq {

struct Monomial {
  std::vector<std::int32_t> e;
  std::int64_t deg = 0;

  Monomial() = default;
  explicit Monomial(std::vector<std::int32_t> exps) : e(std::move(exps)) {
    for (auto x : e) deg += x;
  }
  static Monomial one(int nvars) {
    return Monomial(std::vector<std::int32_t>(nvars, 0));
  }
  static Monomial var(int nvars, int i, int pow = 1) {
    std::vector<std::int32_t> v(nvars, 0);
    v[i] = pow;
    return Monomial(std::move(v));
  }
  bool is_one() const { return deg == 0; }
  int nvars() const { return static_cast<int>(e.size()); }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); i++) r.e[i] += b.e[i];
  r.deg = a.deg + b.deg;
  return r;
}

inline bool mono_divides(const Monomial& d, const Monomial& n) {
  for (size_t i = 0; i < d.e.size(); i++)
    if (d.e[i] > n.e[i]) return false;
  return true;
}

// n / d, assuming divisibility
inline Monomial mono_div(const Monomial& n, const Monomial& d) {
  Monomial r = n;
  for (size_t i = 0; i < r.e.size(); i++) r.e[i] -= d.e[i];
  r.deg = n.deg - d.deg;
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); i++) r.e[i] = std::max(a.e[i], b.e[i]);
  r.deg = 0;
  for (auto x : r.e) r.deg += x;
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); i++)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

struct MonOrder {
  enum Kind { Grevlex, Block } kind = Grevlex;
  int split = 0;  // Block: variables [0, split) form the eliminated block

  static MonOrder grevlex() { return MonOrder{Grevlex, 0}; }
  static MonOrder block(int split) { return MonOrder{Block, split}; }
  friend bool operator==(const MonOrder& a, const MonOrder& b) {
    return a.kind == b.kind && a.split == b.split;
  }
};

namespace detail {

// grevlex on the slice [lo, hi): higher degree wins; on a degree tie the
// monomial with the smaller exponent at the last differing position wins.
inline int grevlex_cmp_slice(const Monomial& a, const Monomial& b, int lo,
                             int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; i++) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; i--)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace detail

// Returns -1, 0, 1 for a < b, a == b, a > b under ord.
inline int mono_cmp(const Monomial& a, const Monomial& b, const MonOrder& ord) {
  int n = a.nvars();
  if (ord.kind == MonOrder::Grevlex) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    return detail::grevlex_cmp_slice(a, b, 0, n);
  }
  int c = detail::grevlex_cmp_slice(a, b, 0, ord.split);
  if (c != 0) return c;
  return detail::grevlex_cmp_slice(a, b, ord.split, n);
}

}  // namespace disceq
