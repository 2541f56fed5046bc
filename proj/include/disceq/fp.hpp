#pragma once

// Prime-field elements F_p for p < 2^31. Each value carries its modulus so the
// polynomial templates can stay oblivious to the prime; a default-constructed
// value acts as a universal zero that adopts the modulus of its partner.

#include "disceq/util.hpp"

namespace disceq {

struct Fp {
  long long v = 0;  // canonical in [0, p)
  long long p = 0;  // 0 = "unset", only valid for the zero value

  Fp() = default;
  Fp(long long value, long long prime) : v(value), p(prime) {
    require(prime > 1, "DomainError", "Fp modulus must exceed 1");
    v %= p;
    if (v < 0) v += p;
  }

  bool is_zero() const { return v == 0; }

  static long long join(long long a, long long b) {
    if (a == 0) return b;
    if (b == 0) return a;
    require(a == b, "DomainMismatch", "mixed F_p moduli");
    return a;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    long long p = join(a.p, b.p);
    if (p == 0) return Fp{};
    return Fp(a.v + b.v, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    long long p = join(a.p, b.p);
    if (p == 0) return Fp{};
    return Fp(a.v - b.v, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    long long p = join(a.p, b.p);
    if (p == 0) return Fp{};
    return Fp(static_cast<long long>(
                  static_cast<__int128>(a.v) * b.v % p),
              p);
  }
  Fp operator-() const {
    if (p == 0) return Fp{};
    return Fp(-v, p);
  }
  friend bool operator==(const Fp& a, const Fp& b) {
    join(a.p, b.p);
    return a.v == b.v;
  }

  Fp inv() const {
    require(p != 0 && v != 0, "DomainError", "F_p inverse of zero");
    long long t = 0, newt = 1, r = p, newr = v;
    while (newr != 0) {
      long long q = r / newr;
      t -= q * newt;
      std::swap(t, newt);
      r -= q * newr;
      std::swap(r, newr);
    }
    return Fp(t, p);
  }
};

inline Fp fp_from(const Int& z, long long p) {
  Int r = fmod(z, Int(static_cast<long>(p)));
  return Fp(r.get_si(), p);
}

}  // namespace disceq
