#include <catch2/catch_amalgamated.hpp>

#include "disceq/discriminant.hpp"
#include "disceq/parse.hpp"

using namespace disceq;

static std::vector<Int> zpoly(std::initializer_list<long> cs) {
  std::vector<Int> r;
  for (long c : cs) r.push_back(Int(c));
  return r;
}

TEST_CASE("univariate helpers") {
  auto f = zpoly({-1, 0, 1});  // X^2 - 1
  REQUIRE(up_deg(f) == 2);
  REQUIRE(up_eval(f, Int(3), Int(0)) == 8);
  auto df = up_derivative(f);
  REQUIRE(df == zpoly({0, 2}));

  auto g = up_shift(f, Int(1), Int(0));  // (X+1)^2 - 1 = X^2 + 2X
  REQUIRE(g == zpoly({0, 2, 1}));
  auto back = up_shift(g, Int(-1), Int(0));
  REQUIRE(back == f);

  auto p = up_mul(zpoly({-1, 1}), zpoly({-2, 1}), Int(0));  // (X-1)(X-2)
  REQUIRE(p == zpoly({2, -3, 1}));

  std::vector<Int> z;
  REQUIRE(up_deg(z) == -1);
  up_trim(p);
  REQUIRE(p.size() == 3);
}

TEST_CASE("resultant over Q") {
  auto lin = [](long a) {  // X - a
    return std::vector<Rat>{Rat(-a), Rat(1)};
  };
  // Res(X-a, X-b) = a - b
  REQUIRE(resultant_field(lin(5), lin(2), Rat(1)) == Rat(3));
  REQUIRE(resultant_field(lin(2), lin(5), Rat(1)) == Rat(-3));
  // common root => 0
  auto f = up_mul(lin(1), lin(2), Rat(0));
  auto g = up_mul(lin(2), lin(3), Rat(0));
  REQUIRE(resultant_field(f, g, Rat(1)) == Rat(0));
  // no common root: Res((X-1)(X-2), X-3) = f(3) = 2
  REQUIRE(resultant_field(f, lin(3), Rat(1)) == Rat(2));
  // constant second argument: Res(f, c) = c^deg f
  REQUIRE(resultant_field(f, {Rat(7)}, Rat(1)) == Rat(49));
  // swap consistency on mixed degrees: Res(g,f) = (-1)^{mn} Res(f,g)
  auto h = up_mul(f, lin(4), Rat(0));  // degree 3
  REQUIRE(resultant_field(h, g, Rat(1)) == resultant_field(g, h, Rat(1)));
}

TEST_CASE("discriminants of classical families over Z") {
  // quadratic: D(X^2 + bX + c) = b^2 - 4c
  for (long b = -4; b <= 4; b++)
    for (long c = -4; c <= 4; c++)
      REQUIRE(discriminant_z(zpoly({c, b, 1})) == Int(b * b - 4 * c));
  // cubic: D(X^3 + pX + q) = -4p^3 - 27q^2
  for (long p = -3; p <= 3; p++)
    for (long q = -3; q <= 3; q++)
      REQUIRE(discriminant_z(zpoly({q, p, 0, 1})) ==
              Int(-4 * p * p * p - 27 * q * q));
  // (X-1)X(X+1) = X^3 - X: p=-1, q=0 -> 4
  REQUIRE(discriminant_z(zpoly({0, -1, 0, 1})) == Int(4));
  // trinomial oracles: D(X^4+aX+b) = -27a^4+256b^3, D(X^5+aX+b) = 256a^5+3125b^4
  REQUIRE(discriminant_z(zpoly({3, 2, 0, 0, 1})) == Int(6480));
  REQUIRE(discriminant_z(zpoly({1, 1, 0, 0, 0, 1})) == Int(3381));
  // degree 1
  REQUIRE(discriminant_z(zpoly({-7, 1})) == Int(1));
}

TEST_CASE("discriminant equals product of squared root differences") {
  Rng rng(20240816);
  for (int trial = 0; trial < 60; trial++) {
    int n = 2 + static_cast<int>(rng.range(0, 3));
    // distinct integer roots
    std::vector<long> roots;
    while (static_cast<int>(roots.size()) < n) {
      long r = rng.range(-12, 12);
      bool dup = false;
      for (long s : roots) dup |= (s == r);
      if (!dup) roots.push_back(r);
    }
    std::vector<Int> F = {Int(1)};
    for (long r : roots) F = up_mul(F, zpoly({-r, 1}), Int(0));
    Int want(1);
    for (size_t i = 0; i < roots.size(); i++)
      for (size_t j = i + 1; j < roots.size(); j++) {
        Int d = Int(roots[i]) - Int(roots[j]);
        want *= d * d;
      }
    REQUIRE(discriminant_z(F) == want);
  }
}

TEST_CASE("translation invariance over Z") {
  Rng rng(77);
  for (int trial = 0; trial < 60; trial++) {
    int n = 2 + static_cast<int>(rng.range(0, 3));
    std::vector<Int> F;
    for (int i = 0; i < n; i++) F.push_back(Int(rng.range(-9, 9)));
    F.push_back(Int(1));
    Int a = Int(rng.range(-6, 6));
    REQUIRE(discriminant_z(up_shift(F, a, Int(0))) == discriminant_z(F));
  }
}

TEST_CASE("non-monic input is rejected") {
  try {
    discriminant_z(zpoly({1, 0, 2}));
    FAIL("expected NonMonic");
  } catch (const Error& e) {
    REQUIRE(e.code() == "NonMonic");
  }
  try {
    discriminant_z(zpoly({5}));
    FAIL("expected NonMonic");
  } catch (const Error& e) {
    REQUIRE(e.code() == "NonMonic");
  }
}

TEST_CASE("Bareiss determinant over polynomial lifts") {
  auto c = [](long v) { return ZPolyM::constant(0, Int(v)); };
  REQUIRE(det_bareiss({{c(1), c(2)}, {c(3), c(4)}}) == c(-2));
  // zero pivot forces a row swap
  REQUIRE(det_bareiss({{c(0), c(2)}, {c(3), c(4)}}) == c(-6));
  // singular
  REQUIRE(det_bareiss({{c(1), c(2)}, {c(2), c(4)}}) == c(0));
  REQUIRE(det_bareiss({{c(0), c(0)}, {c(3), c(4)}}) == c(0));
  // 3x3: 2(12-2) - 0 + 1(1-3) = 18
  REQUIRE(det_bareiss({{c(2), c(0), c(1)},
                       {c(1), c(3), c(2)},
                       {c(1), c(1), c(4)}}) == c(18));
}

TEST_CASE("symbolic discriminants over presented rings") {
  // generic quadratic over Z[b,c]
  {
    RingPtr R = make_ring({"b", "c"}, {});
    std::vector<RingElem> F = {ring_var(R, 1), ring_var(R, 0), ring_int(R, 1)};
    RingElem D = discriminant_ring(F);
    REQUIRE(D == ring_elem(R, "b^2 - 4*c"));
  }
  // generic depressed cubic over Z[p,q]
  {
    RingPtr R = make_ring({"p", "q"}, {});
    std::vector<RingElem> F = {ring_var(R, 1), ring_var(R, 0), ring_int(R, 0),
                               ring_int(R, 1)};
    RingElem D = discriminant_ring(F);
    REQUIRE(D == ring_elem(R, "-4*p^3 - 27*q^2"));
  }
  // X - a over Z[a]
  {
    RingPtr R = make_ring({"a"}, {});
    std::vector<RingElem> F = {-ring_var(R, 0), ring_int(R, 1)};
    REQUIRE(discriminant_ring(F) == ring_int(R, 1));
  }
  // relations kick in: over A = Z[u,v]/(u^2-4v), D(X^2+uX+(v+1)) = u^2-4v-4 = -4
  {
    RingPtr R = make_ring({"u", "v"}, {"u^2 - 4*v"});
    std::vector<RingElem> F = {ring_elem(R, "v + 1"), ring_var(R, 0),
                               ring_int(R, 1)};
    REQUIRE(discriminant_ring(F) == ring_int(R, -4));
  }
  // non-monic over a ring
  {
    RingPtr R = make_ring({"u"}, {});
    try {
      discriminant_ring({ring_int(R, 1), ring_var(R, 0)});
      FAIL("expected NonMonic");
    } catch (const Error& e) {
      REQUIRE(e.code() == "NonMonic");
    }
  }
}

TEST_CASE("ring route agrees with rational route on constant coefficients") {
  RingPtr R = make_ring({"t"}, {});  // t unused; coefficients constant
  Rng rng(5150);
  for (int trial = 0; trial < 40; trial++) {
    int n = 2 + static_cast<int>(rng.range(0, 3));
    std::vector<Int> Fz;
    std::vector<RingElem> Fr;
    for (int i = 0; i < n; i++) {
      Int c = Int(rng.range(-9, 9));
      Fz.push_back(c);
      Fr.push_back(ring_int(R, c));
    }
    Fz.push_back(Int(1));
    Fr.push_back(ring_int(R, 1));
    REQUIRE(discriminant_ring(Fr) == ring_int(R, discriminant_z(Fz)));
  }
}
