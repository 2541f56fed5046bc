#include <catch2/catch_amalgamated.hpp>

#include "disceq/groebner.hpp"
#include "disceq/parse.hpp"

using namespace disceq;

static const VarTable XY{{"x", "y"}};

static std::vector<ZPolyM> zideal(std::initializer_list<const char*> gens) {
  std::vector<ZPolyM> v;
  for (auto* s : gens) v.push_back(parse_z(s, XY));
  return v;
}

TEST_CASE("field groebner basics") {
  std::vector<QPolyM> gens{parse_q("x^2 - y", XY), parse_q("y", XY)};
  auto B = groebner(gens);
  REQUIRE(B.size() == 2);
  CHECK(B[0] == parse_q("y", XY));
  CHECK(B[1] == parse_q("x^2", XY));
  CHECK(normal_form(parse_q("x^2 + 3*y", XY), B).is_zero());
  CHECK(normal_form(parse_q("x", XY), B) == parse_q("x", XY));
}

TEST_CASE("single generator is unit-normalized") {
  auto B = groebner(zideal({"-2*x + 4*y"}));
  REQUIRE(B.size() == 1);
  CHECK(B[0] == parse_z("2*x - 4*y", XY));
  auto BQ = groebner(std::vector<QPolyM>{parse_q("-2*x + 4*y", XY)});
  REQUIRE(BQ.size() == 1);
  CHECK(BQ[0] == parse_q("x - 2*y", XY));
}

TEST_CASE("strong basis over Z from coefficient gcds") {
  auto B = groebner(zideal({"2*x", "3*x"}));
  REQUIRE(B.size() == 1);
  CHECK(B[0] == parse_z("x", XY));

  // leading coefficients must combine: (2x+2, 6) needs no new element
  auto B2 = groebner(zideal({"2*x + 2", "6"}));
  REQUIRE(B2.size() == 2);
  CHECK(B2[0] == parse_z("6", XY));
  CHECK(B2[1] == parse_z("2*x + 2", XY));
  // canonical residues: coefficient at x lies in [0,2), constant in [0,6)
  CHECK(normal_form(parse_z("3*x + 4", XY), B2) == parse_z("x + 2", XY));
}

TEST_CASE("normal form is a canonical coset representative") {
  auto gens = zideal({"2*x^2 - y", "3*x*y + x"});
  auto B = groebner(gens);
  Rng rng(2024);
  for (int trial = 0; trial < 50; trial++) {
    // random f, then f plus a random combination of the generators
    ZPolyM f = ZPolyM::zero(2);
    for (int t = 0; t < 4; t++) {
      Monomial m({static_cast<int>(rng.range(0, 3)), static_cast<int>(rng.range(0, 3))});
      
      f = f + ZPolyM::term(2, m, Int(rng.range(-9, 9)));
    }
    ZPolyM g = f;
    for (auto& gen : gens) {
      Monomial m({static_cast<int>(rng.range(0, 2)), static_cast<int>(rng.range(0, 2))});
      
      g = g + gen.mul_term(m, Int(rng.range(-5, 5)));
    }
    CHECK(normal_form(f, B) == normal_form(g, B));
  }
}

TEST_CASE("groebner result is independent of generator order") {
  auto a = groebner(zideal({"4*x^2 + y", "6*x*y - 1", "2*y^2 + x + 1"}));
  auto b = groebner(zideal({"2*y^2 + x + 1", "6*x*y - 1", "4*x^2 + y"}));
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); i++) CHECK(a[i] == b[i]);
}

TEST_CASE("membership with cofactors") {
  auto gens = zideal({"2*x", "3*y"});
  auto c = ideal_member(parse_z("6*x*y", XY), gens);
  REQUIRE(c.has_value());
  ZPolyM recomb = ZPolyM::zero(2);
  for (size_t i = 0; i < gens.size(); i++) recomb = recomb + (*c)[i] * gens[i];
  CHECK(recomb == parse_z("6*x*y", XY));

  CHECK(!ideal_member(parse_z("x + y", XY), gens).has_value());
  CHECK(!ideal_member(parse_z("x", XY), gens).has_value());

  auto z = ideal_member(ZPolyM::zero(2), gens);
  REQUIRE(z.has_value());
  for (auto& q : *z) CHECK(q.is_zero());

  // gcd combination: x in (2x, 3x)
  auto u = ideal_member(parse_z("x", XY), zideal({"2*x", "3*x"}));
  REQUIRE(u.has_value());
  CHECK((*u)[0] * parse_z("2*x", XY) + (*u)[1] * parse_z("3*x", XY) ==
        parse_z("x", XY));
}

TEST_CASE("membership matches zero normal form") {
  auto gens = zideal({"2*x^2 - y", "x*y + 3"});
  auto B = groebner(gens);
  Rng rng(99);
  for (int trial = 0; trial < 40; trial++) {
    ZPolyM f = ZPolyM::zero(2);
    for (int t = 0; t < 3; t++) {
      Monomial m({static_cast<int>(rng.range(0, 2)), static_cast<int>(rng.range(0, 2))});
      
      f = f + ZPolyM::term(2, m, Int(rng.range(-6, 6)));
    }
    bool nf_zero = normal_form(f, B).is_zero();
    bool member = ideal_member(f, gens).has_value();
    CHECK(nf_zero == member);
  }
}

TEST_CASE("elim_integer") {
  VarTable X1{{"X"}};
  auto e = [&](std::initializer_list<const char*> gens) {
    std::vector<ZPolyM> v;
    for (auto* s : gens) v.push_back(parse_z(s, X1));
    return elim_integer(v);
  };
  CHECK(e({"X - 1", "X + 1"}) == 2);
  CHECK(e({"X"}) == 0);
  CHECK(e({"2", "X"}) == 2);
  CHECK(e({"6", "10"}) == 2);
  CHECK(e({}) == 0);

  VarTable UV{{"u", "v"}};
  std::vector<ZPolyM> rel{parse_z("u^2 - 4*v", UV)};
  CHECK(elim_integer(rel) == 0);

  // elim_integer(gens + {a}) == elim_integer(gens) when a is already inside
  auto gens = std::vector<ZPolyM>{parse_z("X - 1", X1), parse_z("X + 1", X1)};
  auto plus = gens;
  plus.push_back(parse_z("4", X1));
  CHECK(elim_integer(plus) == elim_integer(gens));
}

TEST_CASE("groebner over F_p") {
  std::vector<FpPolyM> gens{to_fp(parse_z("x^2 - y", XY), 5),
                            to_fp(parse_z("2*y - 3", XY), 5)};
  auto B = groebner(gens);
  REQUIRE(B.size() == 2);
  // basis is monic over the field
  for (auto& g : B) CHECK(g.lc().v == 1);
  // y = 3/2 = 4 mod 5, then x^2 = 4
  CHECK(normal_form(to_fp(parse_z("y", XY), 5), B) ==
        to_fp(parse_z("4", XY), 5));
  CHECK(normal_form(to_fp(parse_z("x^2", XY), 5), B) ==
        to_fp(parse_z("4", XY), 5));
}
