#include <catch2/catch_amalgamated.hpp>

#include "disceq/oracle.hpp"

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

static bool contains(const CandidateSet& F, const GElem& g) {
  for (auto& h : F.elements)
    if (h == g) return true;
  return false;
}

static bool negation_closed(const CandidateSet& F) {
  for (auto& g : F.elements)
    if (!contains(F, -g)) return false;
  return true;
}

static bool subset(const CandidateSet& a, const CandidateSet& b) {
  for (auto& g : a.elements)
    if (!contains(b, g)) return false;
  return true;
}

TEST_CASE("divisor enumeration over G = Q") {
  RingPtr Z = ring_Z();
  // X^2 - X splits over Q, so the splitting data has degree 1
  EtalePtr E = make_etale_q(Z, {Rat(0), Rat(-1), Rat(1)});
  SplitPtr S = splitting_data(E);
  REQUIRE(S->degree == 1);

  // eta^2 | 5 in Z forces eta = +-1
  CandidateSet F5 = candidate_set(S, ring_int(Z, 5), strategy_exhaustive());
  CHECK(F5.elements.size() == 2);
  CHECK(F5.complete);
  CHECK(contains(F5, g_int(S, 1)));
  CHECK(contains(F5, g_int(S, -1)));

  // eta^2 | 12: eta in {+-1, +-2}
  CandidateSet F12 = candidate_set(S, ring_int(Z, 12), strategy_exhaustive());
  CHECK(F12.elements.size() == 4);
  CHECK(contains(F12, g_int(S, 2)));
  CHECK_FALSE(contains(F12, g_int(S, 3)));

  // eta^2 | 36: eta in {+-1, +-2, +-3, +-6}
  CandidateSet F36 = candidate_set(S, ring_int(Z, 36), strategy_exhaustive());
  CHECK(F36.elements.size() == 8);
  CHECK(contains(F36, g_int(S, 6)));
  CHECK(negation_closed(F36));

  // the differences of the actual roots 0, 1 of X^2 - X lie in every set
  // for delta = disc(X^2 - X) = 1
  CandidateSet F1 = candidate_set(S, ring_int(Z, 1), strategy_exhaustive());
  CHECK(F1.elements.size() == 2);
  std::vector<GElem> rts{g_root(S, 0), g_root(S, 1)};
  CHECK(verify_candidate_set(S, F1, {rts}));

  // zero discriminant is rejected
  CHECK(err_code([&] {
          return candidate_set(S, ring_int(Z, 0), strategy_exhaustive());
        }) == "ZeroDelta");
}

TEST_CASE("divisor enumeration in Z[i]") {
  RingPtr Z = ring_Z();
  EtalePtr E = make_etale_q(Z, {Rat(1), Rat(0), Rat(1)});  // X^2 + 1
  SplitPtr S = splitting_data(E);
  REQUIRE(S->degree == 2);
  GElem i = g_gen(S), one = g_int(S, 1);

  CandidateSet F = candidate_set(S, ring_int(Z, -4), strategy_exhaustive());
  CHECK(F.complete);
  CHECK(F.elements.size() == 12);
  // the full list: units, the ramified elements 1 +- i, and 2, 2i
  for (const GElem& g :
       {one, i, one + i, one - i, g_int(S, 2), frac_int(Z, 2) * i}) {
    CHECK(contains(F, g));
    CHECK(contains(F, -g));
  }
  CHECK_FALSE(contains(F, g_int(S, 4)));
  CHECK(negation_closed(F));

  // soundness certificate: the quotient -4 / eta^2 is an integer of Z[i];
  // coordinates of eta are integers (x, y), and -4 conj(eta^2) / N(eta)^2
  // must have integer parts
  for (auto& g : F.elements) {
    Rat x = sdetail::rat_of(g.c[0]), y = sdetail::rat_of(g.c[1]);
    REQUIRE(x.get_den() == 1);
    REQUIRE(y.get_den() == 1);
    Rat a = x * x - y * y, b = 2 * x * y;  // eta^2
    Rat n2 = a * a + b * b;                // N(eta^2)
    Rat qa = Rat(-4) * a / n2, qb = Rat(4) * b / n2;  // -4 * conj / N
    CHECK(qa.get_den() == 1);
    CHECK(qb.get_den() == 1);
  }

  // delta = -3 in Z[i]: norms dividing 3 are only the units
  CandidateSet F3 = candidate_set(S, ring_int(Z, -3), strategy_exhaustive());
  CHECK(F3.elements.size() == 4);
  CHECK(contains(F3, i));
  CHECK_FALSE(contains(F3, one + i));

  // verify_candidate_set: roots of X^2 + 1 are +-i, difference 2i
  std::vector<GElem> rts{g_root(S, 0), g_root(S, 1)};
  CHECK(verify_candidate_set(S, F, {rts}));
  CandidateSet empty;
  CHECK_FALSE(verify_candidate_set(S, empty, {rts}));
  // a set consisting of exactly the differences passes by construction
  CandidateSet own;
  own.elements = {rts[0] - rts[1], rts[1] - rts[0]};
  CHECK(verify_candidate_set(S, own, {rts}));
}

TEST_CASE("divisor enumeration in Z[w] and in non-monogenic presentations") {
  RingPtr Z = ring_Z();

  // Eisenstein integers via X^2 + X + 1
  EtalePtr E = make_etale_q(Z, {Rat(1), Rat(1), Rat(1)});
  SplitPtr S = splitting_data(E);
  CandidateSet F = candidate_set(S, ring_int(Z, -3), strategy_exhaustive());
  CHECK(F.complete);
  // six units and six associates of sqrt(-3)
  CHECK(F.elements.size() == 12);
  GElem zeta = g_gen(S);
  CHECK(contains(F, zeta));
  CHECK(contains(F, g_int(S, 1) + zeta + zeta));  // 1 + 2 zeta = sqrt(-3)
  CHECK(negation_closed(F));

  // u = 2i generates a non-maximal order; the enumeration still runs over
  // the maximal one and finds i = u/2
  EtalePtr E4 = make_etale_q(Z, {Rat(4), Rat(0), Rat(1)});  // X^2 + 4
  SplitPtr S4 = splitting_data(E4);
  CandidateSet F4 = candidate_set(S4, ring_int(Z, -4), strategy_exhaustive());
  CHECK(F4.elements.size() == 12);
  CHECK(contains(F4, g_elem(S4, {fq(Z, 0), fq(Z, 1, 2)})));      // i
  CHECK(contains(F4, g_elem(S4, {fq(Z, 1), fq(Z, 1, 2)})));      // 1 + i
  CHECK(contains(F4, g_elem(S4, {fq(Z, 0), fq(Z, 1)})));         // 2i = u

  // conductor 3: X^2 + X + 7 has D0 = -27, fundamental discriminant -3
  EtalePtr E7 = make_etale_q(Z, {Rat(7), Rat(1), Rat(1)});
  SplitPtr S7 = splitting_data(E7);
  CandidateSet F7 = candidate_set(S7, ring_int(Z, -3), strategy_exhaustive());
  CHECK(F7.elements.size() == 12);
  CHECK(F7.complete);
  CHECK(negation_closed(F7));
}

TEST_CASE("exhaustive strategy domain limits") {
  RingPtr Z = ring_Z();

  // real quadratic: infinite unit group
  EtalePtr E5 = make_etale_q(Z, {Rat(-5), Rat(0), Rat(1)});
  SplitPtr S5 = splitting_data(E5);
  CHECK(err_code([&] {
          return candidate_set(S5, ring_int(Z, 20), strategy_exhaustive());
        }) == "StrategyUnsupported");

  // degree > 2 splitting field
  EtalePtr E3 = make_etale_q(Z, {Rat(-1), Rat(-1), Rat(0), Rat(1)});
  SplitPtr S3 = splitting_data(E3);
  CHECK(err_code([&] {
          return candidate_set(S3, ring_int(Z, -23), strategy_exhaustive());
        }) == "StrategyUnsupported");

  // presented base ring: neither exhaustive nor bounded applies
  RingPtr R2 = make_ring({"y"}, {});
  RingElem y = ring_elem(R2, "y");
  EtalePtr EY =
      make_etale(R2, {frac(-y, ring_int(R2, 1)), fq(R2, 0), fq(R2, 1)});
  SplitPtr SY = make_splitting_data(
      EY, {-y, ring_int(R2, 0), ring_int(R2, 1)},
      {{fq(R2, 0), fq(R2, 1)}, {fq(R2, 0), fq(R2, -1)}});
  CHECK(err_code([&] {
          return candidate_set(SY, ring_elem(R2, "4*y"),
                               strategy_exhaustive());
        }) == "StrategyUnsupported");
  CHECK(err_code([&] {
          return candidate_set(SY, ring_elem(R2, "4*y"), strategy_bounded(2));
        }) == "StrategyUnsupported");

  // but a user-supplied set over that base is fine
  GElem u = g_gen(SY);
  CandidateSet FU = candidate_set(SY, ring_elem(R2, "4*y"),
                                  strategy_user({u + u, -(u + u)}, false));
  CHECK(FU.elements.size() == 2);
  CHECK_FALSE(FU.complete);
  std::vector<GElem> rts{g_root(SY, 0), g_root(SY, 1)};
  CHECK(verify_candidate_set(SY, FU, {rts}));
}

TEST_CASE("bounded search over a real quadratic field") {
  RingPtr Z = ring_Z();
  EtalePtr E = make_etale_q(Z, {Rat(-5), Rat(0), Rat(1)});  // X^2 - 5
  SplitPtr S = splitting_data(E);
  GElem u = g_gen(S);  // sqrt(5)

  CandidateSet F1 = candidate_set(S, ring_int(Z, 20), strategy_bounded(1));
  CandidateSet F2 = candidate_set(S, ring_int(Z, 20), strategy_bounded(2));
  CHECK_FALSE(F2.complete);
  // height 1: (+-1, 0), (0, +-1), (+-1, +-1) all pass N(eta)^2 | 400
  CHECK(F1.elements.size() == 8);
  // height 2 adds +-2, +-2u, +-(2 +- u)
  CHECK(F2.elements.size() == 16);
  CHECK(contains(F2, u + u));        // 2 sqrt(5), the true difference
  CHECK(contains(F2, -(u + u)));
  CHECK(contains(F2, g_int(S, 1)));
  CHECK_FALSE(contains(F2, g_int(S, 1) + u + u));  // N = -19 fails
  CHECK(negation_closed(F2));
  CHECK(subset(F1, F2));  // monotone in the height bound

  // the roots of X^2 - 5 differ by 2 sqrt(5)
  std::vector<GElem> rts{g_root(S, 0), g_root(S, 1)};
  CHECK(verify_candidate_set(S, F2, {rts}));

  // bad bounds are rejected up front
  CHECK(err_code([&] { return strategy_bounded(0); }) == "DomainError");
}

TEST_CASE("bounded search over the degree six splitting field of a cubic") {
  RingPtr Z = ring_Z();
  EtalePtr E = make_etale_q(Z, {Rat(-1), Rat(-1), Rat(0), Rat(1)});
  SplitPtr S = splitting_data(E);
  REQUIRE(S->degree == 6);
  RingElem delta = ring_int(Z, -23);

  CandidateSet F2 = candidate_set(S, delta, strategy_bounded(2));
  CHECK_FALSE(F2.complete);
  CHECK(negation_closed(F2));
  // differences of the roots of X^3 - X - 1 itself have small coordinates
  std::vector<GElem> rts{g_root(S, 0), g_root(S, 1), g_root(S, 2)};
  CHECK(verify_candidate_set(S, F2, {rts}));

  CandidateSet F8 = candidate_set(S, delta, strategy_bounded(8));
  CHECK(subset(F2, F8));
  CHECK(F8.elements.size() > F2.elements.size());
  CHECK(verify_candidate_set(S, F8, {rts}));
  // theta^2 generates the same field with the same discriminant; its
  // conjugate differences must be present as well
  std::vector<GElem> cj = conjugates(pow(alg_gen(E), 2), S);
  CHECK(verify_candidate_set(S, F8, {cj}));
}

TEST_CASE("user-supplied candidate sets are validated") {
  RingPtr Z = ring_Z();
  EtalePtr E = make_etale_q(Z, {Rat(-5), Rat(0), Rat(1)});
  SplitPtr S = splitting_data(E);
  GElem u = g_gen(S);
  RingElem delta = ring_int(Z, 20);

  // completeness is taken on faith from the caller
  CandidateSet F =
      candidate_set(S, delta, strategy_user({u + u, -(u + u)}, true));
  CHECK(F.complete);
  CHECK(F.elements.size() == 2);

  // duplicates collapse
  CandidateSet FD =
      candidate_set(S, delta, strategy_user({u, -u, u, u}, false));
  CHECK(FD.elements.size() == 2);

  // negation closure is enforced
  CHECK(err_code([&] {
          return candidate_set(S, delta, strategy_user({u}, false));
        }) == "VerificationFailed");

  // zero is never a root difference
  CHECK(err_code([&] {
          return candidate_set(S, delta,
                               strategy_user({g_int(S, 0)}, false));
        }) == "VerificationFailed");

  // elements of a different splitting field are rejected
  EtalePtr EI = make_etale_q(Z, {Rat(1), Rat(0), Rat(1)});
  SplitPtr SI = splitting_data(EI);
  CHECK(err_code([&] {
          return candidate_set(S, delta,
                               strategy_user({g_gen(SI), -g_gen(SI)}, false));
        }) == "OwnerMismatch");
}
