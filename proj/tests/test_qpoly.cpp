#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "disceq/qpoly.hpp"

using namespace disceq;

static std::vector<Int> zv(std::initializer_list<long> cs) {
  return std::vector<Int>(cs.begin(), cs.end());
}

static std::vector<Int> zmul(const std::vector<Int>& a, const std::vector<Int>& b) {
  return up_mul(a, b, Int(0));
}

// multiset equality of factor lists against expected (poly, mult) pairs
static void check_factors(const std::vector<ZFactorUnit>& got,
                          std::vector<std::pair<std::vector<Int>, int>> want) {
  REQUIRE(got.size() == want.size());
  for (const auto& u : got) {
    auto it = std::find_if(want.begin(), want.end(), [&](const auto& w) {
      return w.first == u.poly && w.second == u.mult;
    });
    REQUIRE(it != want.end());
    want.erase(it);
  }
}

TEST_CASE("integer polynomial helpers") {
  CHECK(zp_content(zv({6, -9, 12})) == 3);
  CHECK(zp_primitive(zv({6, -9, 12})) == zv({2, -3, 4}));
  CHECK(zp_primitive(zv({0, 0, -5})) == zv({0, 0, 1}));

  // monic division with remainder
  auto [q, r] = zp_divmod_monic(zv({1, 0, 0, 1}), zv({1, 1}));  // x^3+1 by x+1
  CHECK(q == zv({1, -1, 1}));
  CHECK(up_deg(r) < 0);
  auto [q2, r2] = zp_divmod_monic(zv({3, 1, 2}), zv({1, 1}));
  CHECK(up_add(zmul(q2, zv({1, 1})), r2) == zv({3, 1, 2}));

  // exact division over Z
  auto e = zp_divide_exact(zmul(zv({-3, 2}), zv({5, 7})), zv({-3, 2}));
  REQUIRE(e.has_value());
  CHECK(*e == zv({5, 7}));
  CHECK_FALSE(zp_divide_exact(zv({1, 1}), zv({0, 2})).has_value());
  CHECK_FALSE(zp_divide_exact(zv({1, 0, 1}), zv({1, 1})).has_value());

  // gcd over Z stays primitive
  std::vector<Int> sq = zv({-1, 0, 1});  // x^2-1
  CHECK(zp_gcd(zmul(sq, zv({2, 1})), zmul(sq, zv({-5, 1}))) == sq);
  CHECK(zp_gcd(zv({1, 0, 1}), zv({1, 1})) == zv({1}));
  CHECK(zp_gcd(zv({4, 8}), zv({6})) == zv({1}));
  CHECK(zp_gcd(zv({}), zv({-4, -8})) == zv({1, 2}));
}

TEST_CASE("factoring splits and multiplicities") {
  Int cont = 0;

  auto f1 = factor_z_poly(zv({-1, 0, 1}), &cont);  // x^2-1
  CHECK(cont == 1);
  check_factors(f1, {{zv({-1, 1}), 1}, {zv({1, 1}), 1}});

  check_factors(factor_z_poly(zv({1, 0, 1})), {{zv({1, 0, 1}), 1}});
  check_factors(factor_z_poly(zv({-2, 0, 1})), {{zv({-2, 0, 1}), 1}});
  check_factors(factor_z_poly(zv({-2, 0, 0, 1})), {{zv({-2, 0, 0, 1}), 1}});

  // content and sign: -6x^2 - 6x = -6 * x * (x+1)
  auto f2 = factor_z_poly(zv({0, -6, -6}), &cont);
  CHECK(cont == -6);
  check_factors(f2, {{zv({0, 1}), 1}, {zv({1, 1}), 1}});

  // multiplicities: (x-1)^2 (x+2)^3
  auto g = zmul(zmul(zv({-1, 1}), zv({-1, 1})),
                zmul(zv({2, 1}), zmul(zv({2, 1}), zv({2, 1}))));
  check_factors(factor_z_poly(g), {{zv({-1, 1}), 2}, {zv({2, 1}), 3}});

  // constant input: content only
  auto f3 = factor_z_poly(zv({-42}), &cont);
  CHECK(cont == -42);
  CHECK(f3.empty());

  CHECK_THROWS_AS(factor_z_poly(std::vector<Int>{}), Error);
}

TEST_CASE("cyclotomic and classical factorizations") {
  // x^4+x^3+x^2+x+1 is irreducible
  check_factors(factor_z_poly(zv({1, 1, 1, 1, 1})), {{zv({1, 1, 1, 1, 1}), 1}});

  // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
  check_factors(factor_z_poly(zv({-1, 0, 0, 0, 0, 0, 1})),
                {{zv({-1, 1}), 1},
                 {zv({1, 1}), 1},
                 {zv({1, 1, 1}), 1},
                 {zv({1, -1, 1}), 1}});

  // x^6 - 4 = (x^3-2)(x^3+2)
  check_factors(factor_z_poly(zv({-4, 0, 0, 0, 0, 0, 1})),
                {{zv({-2, 0, 0, 1}), 1}, {zv({2, 0, 0, 1}), 1}});

  // (x-1)(x-2)(x-3)(x-4)(x-5)
  std::vector<Int> lin = zv({1});
  for (long a = 1; a <= 5; a++) lin = zmul(lin, zv({-a, 1}));
  check_factors(factor_z_poly(lin), {{zv({-1, 1}), 1},
                                     {zv({-2, 1}), 1},
                                     {zv({-3, 1}), 1},
                                     {zv({-4, 1}), 1},
                                     {zv({-5, 1}), 1}});

  // (x^2+x+1)(x^2+x+2), the second factor has discriminant -7
  check_factors(factor_z_poly(zmul(zv({1, 1, 1}), zv({2, 1, 1}))),
                {{zv({1, 1, 1}), 1}, {zv({2, 1, 1}), 1}});

  // larger coefficients: (x^3-2)(x^2+10007)
  check_factors(factor_z_poly(zmul(zv({-2, 0, 0, 1}), zv({10007, 0, 1}))),
                {{zv({-2, 0, 0, 1}), 1}, {zv({10007, 0, 1}), 1}});
}

TEST_CASE("recombination when no prime separates the factors") {
  // x^4 - 10x^2 + 1 (minimal polynomial of sqrt(2)+sqrt(3)) is irreducible
  // over Q but reducible modulo every prime
  std::vector<Int> sd = zv({1, 0, -10, 0, 1});
  check_factors(factor_z_poly(sd), {{sd, 1}});
  check_factors(factor_z_poly(zmul(sd, zv({-2, 0, 1}))),
                {{sd, 1}, {zv({-2, 0, 1}), 1}});
  check_factors(factor_z_poly(zmul(sd, sd)), {{sd, 2}});
}

TEST_CASE("non-monic factorizations") {
  // 2x^2 - 3x - 2 = (2x+1)(x-2)
  check_factors(factor_z_poly(zv({-2, -3, 2})), {{zv({1, 2}), 1}, {zv({-2, 1}), 1}});
  // 6x^2 - 5x + 1 = (2x-1)(3x-1)
  check_factors(factor_z_poly(zv({1, -5, 6})), {{zv({-1, 2}), 1}, {zv({-1, 3}), 1}});
  // 4x^2 - 4x + 1 = (2x-1)^2
  check_factors(factor_z_poly(zv({1, -4, 4})), {{zv({-1, 2}), 2}});
  // degree one is always irreducible
  check_factors(factor_z_poly(zv({-3, 2})), {{zv({-3, 2}), 1}});
  // 2x^3 + x^2 + 2x + 1 = (2x+1)(x^2+1)
  check_factors(factor_z_poly(zv({1, 2, 1, 2})), {{zv({1, 2}), 1}, {zv({1, 0, 1}), 1}});
}

TEST_CASE("random multiply-then-factor roundtrips") {
  Rng rng(20240816u);
  for (int trial = 0; trial < 40; trial++) {
    // build a product of two or three random polynomials of degree 1..3
    int parts = 2 + static_cast<int>(rng.range(0, 1));
    std::vector<Int> f = zv({1});
    for (int k = 0; k < parts; k++) {
      int d = static_cast<int>(rng.range(1, 3));
      std::vector<Int> g(static_cast<size_t>(d) + 1, Int(0));
      for (int i = 0; i <= d; i++) g[static_cast<size_t>(i)] = Int(rng.range(-9, 9));
      if (g[static_cast<size_t>(d)] == 0) g[static_cast<size_t>(d)] = 1;
      if (up_deg(g) < 1) g = zv({1, 1});
      f = zmul(f, g);
    }
    Int cont = 0;
    auto fac = factor_z_poly(f, &cont);

    // the factorization must reproduce the input exactly
    std::vector<Int> prod = zv({1});
    for (const auto& u : fac) {
      CHECK(u.poly.back() > 0);
      CHECK(zp_content(u.poly) == 1);
      for (int i = 0; i < u.mult; i++) prod = zmul(prod, u.poly);
    }
    for (Int& c : prod) c *= cont;
    up_trim(prod);
    std::vector<Int> fin = f;
    up_trim(fin);
    CHECK(prod == fin);

    // factors are pairwise coprime and individually irreducible
    for (size_t i = 0; i < fac.size(); i++) {
      CHECK(factor_z_poly(fac[i].poly).size() == 1);
      for (size_t j = i + 1; j < fac.size(); j++)
        CHECK(up_deg(zp_gcd(fac[i].poly, fac[j].poly)) == 0);
    }
  }
}

TEST_CASE("rational factorization and irreducibility") {
  std::vector<Rat> f = {Rat(-3, 2), Rat(0), Rat(3, 2)};  // (3/2)(x^2-1)
  auto fac = factor_q_poly(f);
  REQUIRE(fac.size() == 2);
  for (const auto& u : fac) {
    CHECK(u.poly.back() == 1);
    CHECK(u.mult == 1);
    CHECK(u.poly.size() == 2);
  }

  CHECK(irreducible_q({Rat(-5), Rat(0), Rat(1)}));       // x^2-5
  CHECK(irreducible_q({Rat(-2), Rat(0), Rat(0), Rat(1)}));  // x^3-2
  CHECK(irreducible_q({Rat(-3), Rat(2)}));               // 2x-3
  CHECK_FALSE(irreducible_q({Rat(-4), Rat(0), Rat(1)}));  // x^2-4
  CHECK_FALSE(irreducible_q({Rat(1), Rat(-2), Rat(1)}));  // (x-1)^2
  CHECK_FALSE(irreducible_q({Rat(7)}));                  // constant
}

TEST_CASE("necessary domain check on one-relation presentations") {
  CHECK_FALSE(domain_warning(ring_Z()).has_value());

  auto ok = make_ring({"u"}, {"u^2 - 5"});
  CHECK_FALSE(domain_warning(ok).has_value());

  auto half = make_ring({"u"}, {"2*u - 3"});  // Z[3/2] is a domain
  CHECK_FALSE(domain_warning(half).has_value());

  auto split = make_ring({"u"}, {"u^2 - 4"});
  REQUIRE(domain_warning(split).has_value());
  CHECK(domain_warning(split)->find("not an integral domain") != std::string::npos);

  auto nil = make_ring({"u"}, {"u^2 - 2*u + 1"});  // (u-1)^2
  CHECK(domain_warning(nil).has_value());

  auto content = make_ring({"u"}, {"2*u - 6"});
  REQUIRE(domain_warning(content).has_value());
  CHECK(domain_warning(content)->find("content") != std::string::npos);

  // several variables or several relations: check does not apply
  auto multi = make_ring({"u", "v"}, {"u*v - 1"});
  CHECK_FALSE(domain_warning(multi).has_value());
  auto blowup = make_ring({"u", "v"}, {"u^2 - 4*v"});
  CHECK_FALSE(domain_warning(blowup).has_value());
  auto two = make_ring({"u", "v"}, {"u^2 - 2", "v^2 - 3"});
  CHECK_FALSE(domain_warning(two).has_value());
}
