#include <catch2/catch_amalgamated.hpp>

#include "disceq/splitting.hpp"

using namespace disceq;

static FracElem fq(const RingPtr& R, const Int& n, const Int& d = 1) {
  return frac_int(R, n, d);
}

template <class F>
static std::string err_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

TEST_CASE("integral scaling of a generator") {
  RingPtr Z = ring_Z();

  // already integral: b0 = 1 leaves X^2 - 5 alone
  auto a = integralize_generator(Z, {fq(Z, -5), fq(Z, 0), fq(Z, 1)},
                                 ring_int(Z, 1));
  CHECK(a.poly[0] == ring_int(Z, -5));
  CHECK(a.poly[1] == ring_int(Z, 0));
  CHECK(a.poly[2] == ring_int(Z, 1));

  // X^2 - (1/2)X with b0 = 2 becomes X^2 - X
  auto b = integralize_generator(Z, {fq(Z, 0), fq(Z, -1, 2), fq(Z, 1)},
                                 ring_int(Z, 2));
  CHECK(b.poly[0] == ring_int(Z, 0));
  CHECK(b.poly[1] == ring_int(Z, -1));
  CHECK(b.poly[2] == ring_int(Z, 1));

  // X^3 + (3/2)X + 1 with b0 = 2 becomes X^3 + 6X + 8, and the scaling
  // identity Q(b0 X) = b0^d P(X) holds coefficientwise
  std::vector<FracElem> P{fq(Z, 1), fq(Z, 3, 2), fq(Z, 0), fq(Z, 1)};
  auto c = integralize_generator(Z, P, ring_int(Z, 2));
  CHECK(c.poly[0] == ring_int(Z, 8));
  CHECK(c.poly[1] == ring_int(Z, 6));
  CHECK(c.poly[2] == ring_int(Z, 0));
  CHECK(c.poly[3] == ring_int(Z, 1));
  Int pw = 1;
  for (size_t i = 0; i < c.poly.size(); i++) {
    CHECK(frac(c.poly[i]) * fq(Z, pw) == fq(Z, 8) * P[i]);
    pw *= 2;
  }

  // b0 = 2 is not a common denominator for thirds
  CHECK(err_code([&] {
          return integralize_generator(
              Z, {fq(Z, 1), fq(Z, 1, 3), fq(Z, 1)}, ring_int(Z, 2));
        }) == "CoefficientNotInRing");

  // over A = Z[x, y]/(x^2 - 4y) with t = x/2: X^2 - tX scales to X^2 - xX
  RingPtr R2 = make_ring({"x", "y"}, {"x^2 - 4*y"});
  FracElem t = frac(ring_elem(R2, "x"), ring_int(R2, 2));
  auto d = integralize_generator(R2, {fq(R2, 0), -t, fq(R2, 1)},
                                 ring_int(R2, 2));
  CHECK(d.poly[1] == ring_elem(R2, "-x"));
  CHECK(d.poly[0] == ring_int(R2, 0));
}

TEST_CASE("built-in splitting of quadratics") {
  RingPtr Z = ring_Z();

  EtalePtr E5 = make_etale_q(Z, {Rat(-5), Rat(0), Rat(1)});
  SplitPtr S5 = splitting_data(E5);
  CHECK(S5->degree == 2);
  CHECK(S5->u_min_poly[0] == ring_int(Z, -5));
  CHECK(S5->u_min_poly[1] == ring_int(Z, 0));
  CHECK(S5->u_min_poly[2] == ring_int(Z, 1));
  // roots are u and -u in some order
  GElem u = g_gen(S5);
  bool fwd = g_root(S5, 0) == u && g_root(S5, 1) == -u;
  bool rev = g_root(S5, 0) == -u && g_root(S5, 1) == u;
  CHECK((fwd || rev));

  // conjugates of theta are the two roots; of a constant, constant
  std::vector<GElem> cj = conjugates(alg_gen(E5), S5);
  CHECK(is_zero(cj[0] + cj[1]));
  CHECK(g_as_K(cj[0] * cj[1]).has_value());
  CHECK(*g_as_K(cj[0] * cj[1]) == fq(Z, -5));
  std::vector<GElem> c1 = conjugates(alg_int(E5, 1), S5);
  CHECK(c1[0] == g_int(S5, 1));
  CHECK(c1[1] == g_int(S5, 1));
  std::vector<GElem> c2 = conjugates(pow(alg_gen(E5), 2), S5);
  CHECK(c2[0] == g_int(S5, 5));
  CHECK(c2[1] == g_int(S5, 5));

  // product formula agrees with the characteristic-polynomial route
  CHECK(disc_via_conjugates(alg_gen(E5), S5) == fq(Z, 20));
  AlgElem mixed = alg_int(E5, 3) + fq(Z, 2) * alg_gen(E5);
  CHECK(disc_via_conjugates(mixed, S5) == disc_element(mixed));

  // golden-ratio polynomial: splitting field is the same quadratic field
  EtalePtr Eg = make_etale_q(Z, {Rat(-1), Rat(-1), Rat(1)});
  SplitPtr Sg = splitting_data(Eg);
  CHECK(Sg->degree == 2);
  std::vector<GElem> cg = conjugates(alg_gen(Eg), Sg);
  CHECK(g_as_K(cg[0] + cg[1]).has_value());
  CHECK(*g_as_K(cg[0] + cg[1]) == fq(Z, 1));
  CHECK(disc_via_conjugates(alg_gen(Eg), Sg) == fq(Z, 5));

  // split quadratic: d = 1, G = Q, both roots rational constants
  EtalePtr Es = make_etale_q(Z, {Rat(0), Rat(-1, 2), Rat(1)});  // X(X - 1/2)
  SplitPtr Ss = splitting_data(Es);
  CHECK(Ss->degree == 1);
  std::vector<GElem> cs = conjugates(alg_gen(Es), Ss);
  bool zero_first = is_zero(cs[0]) && *g_as_K(cs[1]) == fq(Z, 1, 2);
  bool half_first = is_zero(cs[1]) && *g_as_K(cs[0]) == fq(Z, 1, 2);
  CHECK((zero_first || half_first));

  // rational coefficients force a nontrivial scale: X^2 - 5/4 has
  // primitive element sqrt(5)/2 scaled by b0 = 4 to a root of X^2 - 20
  EtalePtr Eq = make_etale_q(Z, {Rat(-5, 4), Rat(0), Rat(1)});
  SplitPtr Sq = splitting_data(Eq);
  CHECK(Sq->degree == 2);
  CHECK(Sq->u_min_poly[0] == ring_int(Z, -20));
  CHECK(Sq->u_min_poly[1] == ring_int(Z, 0));
  CHECK(disc_via_conjugates(alg_gen(Eq), Sq) == fq(Z, 5));
}

TEST_CASE("verified user-supplied splitting data for X^3 - X - 1") {
  RingPtr Z = ring_Z();
  EtalePtr E = make_etale_q(Z, {Rat(-1), Rat(-1), Rat(0), Rat(1)});

  // w = theta_1 + 2 theta_2 has minimal polynomial X^6 - 6X^4 + 9X^2 + 23,
  // and the three roots have exact coordinates on the w-power basis
  std::vector<RingElem> Q{ring_int(Z, 23), ring_int(Z, 0), ring_int(Z, 9),
                          ring_int(Z, 0),  ring_int(Z, -6), ring_int(Z, 0),
                          ring_int(Z, 1)};
  std::vector<FracElem> t0{fq(Z, 4, 9),  fq(Z, 0), fq(Z, -5, 9),
                           fq(Z, 0),     fq(Z, 1, 9), fq(Z, 0)};
  std::vector<FracElem> t1{fq(Z, -2, 9), fq(Z, 1, 2), fq(Z, 5, 18),
                           fq(Z, 0),     fq(Z, -1, 18), fq(Z, 0)};
  std::vector<FracElem> t2{fq(Z, -2, 9), fq(Z, -1, 2), fq(Z, 5, 18),
                           fq(Z, 0),     fq(Z, -1, 18), fq(Z, 0)};
  SplitPtr S = make_splitting_data(E, Q, {t0, t1, t2});
  CHECK(S->degree == 6);

  // the conjugates of theta are exactly the verified roots, their monic
  // product reconstructs P, and both discriminant routes give -23
  std::vector<GElem> cj = conjugates(alg_gen(E), S);
  std::vector<GElem> F = g_poly_from_roots(S, cj);
  REQUIRE(F.size() == 4);
  for (size_t i = 0; i < 4; i++) {
    auto v = g_as_K(F[i]);
    REQUIRE(v.has_value());
    CHECK(*v == E->min_poly[i]);
  }
  CHECK(disc_via_conjugates(alg_gen(E), S) == fq(Z, -23));
  CHECK(disc_via_conjugates(pow(alg_gen(E), 2), S) == fq(Z, -23));
  AlgElem gen2 = alg_gen(E) + alg_const(E, fq(Z, 5, 3));
  CHECK(disc_via_conjugates(gen2, S) == disc_element(gen2));

  // rejection: a tampered root coordinate
  std::vector<FracElem> bad = t0;
  bad[0] = fq(Z, 5, 9);
  CHECK(err_code([&] { return make_splitting_data(E, Q, {bad, t1, t2}); }) ==
        "VerificationFailed");
  // rejection: duplicated roots
  CHECK(err_code([&] { return make_splitting_data(E, Q, {t0, t1, t1}); }) ==
        "VerificationFailed");
  // rejection: wrong number of roots
  CHECK(err_code([&] { return make_splitting_data(E, Q, {t0, t1}); }) ==
        "VerificationFailed");
  // rejection: non-monic Q
  std::vector<RingElem> Q2 = Q;
  Q2[6] = ring_int(Z, 2);
  CHECK(err_code([&] {
          return make_splitting_data(E, Q2, {t0, t1, t2});
        }) == "VerificationFailed");
  // rejection: coordinates outside the u-basis
  std::vector<FracElem> longv = t0;
  longv.push_back(fq(Z, 1));
  CHECK(err_code([&] {
          return make_splitting_data(E, Q, {longv, t1, t2});
        }) == "VerificationFailed");
}

TEST_CASE("built-in splitting of the cubic and the biquadratic") {
  RingPtr Z = ring_Z();

  EtalePtr C = make_etale_q(Z, {Rat(-1), Rat(-1), Rat(0), Rat(1)});
  SplitPtr SC = splitting_data(C);
  CHECK(SC->degree == 6);
  std::vector<GElem> cj = conjugates(alg_gen(C), SC);
  std::vector<GElem> F = g_poly_from_roots(SC, cj);
  for (size_t i = 0; i < 4; i++) {
    auto v = g_as_K(F[i]);
    REQUIRE(v.has_value());
    CHECK(*v == C->min_poly[i]);
  }
  CHECK(disc_via_conjugates(alg_gen(C), SC) == fq(Z, -23));

  // X^4 - 10X^2 + 1 is Galois of degree 4: the field contains all roots
  EtalePtr B = make_etale_q(Z, {Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)});
  SplitPtr SB = splitting_data(B);
  CHECK(SB->degree == 4);
  std::vector<GElem> cb = conjugates(alg_gen(B), SB);
  std::vector<GElem> FB = g_poly_from_roots(SB, cb);
  for (size_t i = 0; i < 5; i++) {
    auto v = g_as_K(FB[i]);
    REQUIRE(v.has_value());
    CHECK(*v == B->min_poly[i]);
  }
  CHECK(disc_via_conjugates(alg_gen(B), SB) == fq(Z, 147456));
  // theta^2 generates a proper subfield: the product formula also vanishes
  CHECK(is_zero(disc_via_conjugates(pow(alg_gen(B), 2), SB)));
}

TEST_CASE("splitting data limits and ownership") {
  RingPtr R5 = make_ring({"u"}, {"u^2 - 5"});
  std::vector<FracElem> P{-frac(ring_elem(R5, "u")), frac_int(R5, 0),
                          frac_int(R5, 1)};
  EtalePtr E = make_etale(R5, P);
  CHECK(err_code([&] { return splitting_data(E); }) == "UnsupportedBase");

  // user data over the quadratic base: X^2 - u splits in K[w]/(w^2 - u)
  // with w expressed through... the integral generator w itself
  std::vector<RingElem> Q{ring_elem(R5, "-u"), ring_int(R5, 0),
                          ring_int(R5, 1)};
  std::vector<FracElem> r0{frac_int(R5, 0), frac_int(R5, 1)};
  std::vector<FracElem> r1{frac_int(R5, 0), frac_int(R5, -1)};
  SplitPtr S = make_splitting_data(E, Q, {r0, r1});
  CHECK(S->degree == 2);
  CHECK(disc_via_conjugates(alg_gen(E), S) ==
        frac(ring_elem(R5, "4*u")));
  CHECK(disc_via_conjugates(alg_gen(E), S) == disc_element(alg_gen(E)));

  // ownership: conjugates of an element of a different algebra
  RingPtr Z = ring_Z();
  EtalePtr other = make_etale_q(Z, {Rat(-5), Rat(0), Rat(1)});
  CHECK(err_code([&] { return conjugates(alg_gen(other), S); }) ==
        "OwnerMismatch");
}
