#include "doctest.h"
#include "fixtures.hpp"
#include "peqa/bck.hpp"

using namespace peqa;

TEST_CASE("psi images verify as pseudo BCK-meet-semilattices") {
  for (const FiniteEqAlgebra& a :
       {fixtures::diamond_b(), fixtures::diamond_a(), fixtures::chain_c(),
        fixtures::trivial()}) {
    FiniteBckMs b = psi(a);
    AxiomReport r = verify_bck(b);
    for (const auto& e : r.entries) {
      INFO(e.name);
      CHECK(e.pass);
    }
    CHECK(check_conditions(b).pC);
  }
}

TEST_CASE("psi of the diamond reproduces the implication rows") {
  FiniteBckMs b = psi(fixtures::diamond_b());
  // arrow row b = [a, a, 1, 1]
  CHECK(b.arrow(2, 0) == 1);
  CHECK(b.arrow(2, 1) == 1);
  CHECK(b.arrow(2, 2) == 3);
  CHECK(b.arrow(2, 3) == 3);
  // the diamond is symmetric, so squig equals arrow
  CHECK(b.squig == b.arrow);
}

TEST_CASE("psi of the chain") {
  FiniteBckMs c = psi(fixtures::chain_c());
  CHECK(c.arrow(2, 1) == 1);  // b -> a = a
  CHECK(verify_bck(c).all_pass());
}

TEST_CASE("arrow mutation breaks antisymmetry") {
  FiniteBckMs b = psi(fixtures::diamond_b());
  b.arrow.at(1, 0) = 3;  // a -> 0 := 1 forces a <= 0 while 0 <= a
  AxiomReport r = verify_bck(b);
  CHECK_FALSE(r.all_pass());
  const CheckEntry* b6 = r.find("B6'");
  REQUIRE(b6 != nullptr);
  CHECK_FALSE(b6->pass);
}

TEST_CASE("conditions on the diamond BCK structure") {
  FiniteBckMs b = psi(fixtures::diamond_b());
  BckConditionReport r = check_conditions(b);
  CHECK(r.pC);
  CHECK(r.pD);
  CHECK(r.pP);
  REQUIRE(r.prod.has_value());
  // the recovered product is the diamond's monoid table
  CHECK(*r.prod == BinTable::from_rows({{0, 0, 0, 0},
                                        {0, 1, 0, 1},
                                        {0, 0, 2, 2},
                                        {0, 1, 2, 3}}));
  CHECK(r.commutative);
  CHECK_FALSE(r.linear);
}

TEST_CASE("pD implies pC on every fixture image") {
  for (const FiniteEqAlgebra& a :
       {fixtures::diamond_b(), fixtures::diamond_a(), fixtures::chain_c()}) {
    BckConditionReport r = check_conditions(psi(a));
    if (r.pD) CHECK(r.pC);
  }
}

TEST_CASE("linearly ordered structures satisfy pP") {
  BckConditionReport r = check_conditions(psi(fixtures::chain_c()));
  CHECK(r.linear);
  CHECK(r.pP);
}

TEST_CASE("phi undoes psi on the invariant diamond") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  FiniteEqAlgebra back = phi(psi(b));
  CHECK(back == b);
}

TEST_CASE("phi of a nontrivial structure is never an equality algebra") {
  for (const FiniteEqAlgebra& a :
       {fixtures::diamond_b(), fixtures::diamond_a(), fixtures::chain_c()}) {
    FiniteEqAlgebra out = phi(psi(a));
    CHECK_FALSE(classify(out).equality);
  }
}

TEST_CASE("phi of the trivial structure is trivial") {
  FiniteEqAlgebra one = fixtures::trivial();
  CHECK(phi(psi(one)) == one);
}

TEST_CASE("phi requires the pC condition") {
  // a verified diamond structure that fails pC at (a,b,a)
  FiniteBckMs b = assemble_bck(
      peqa::make_carrier({"0", "a", "b", "1"}, "1"),
      BinTable::from_rows({{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}),
      BinTable::from_rows({{3, 3, 3, 3}, {0, 3, 2, 3}, {0, 1, 3, 3}, {0, 1, 2, 3}}),
      BinTable::from_rows({{3, 3, 3, 3}, {0, 3, 2, 3}, {0, 1, 3, 3}, {0, 1, 2, 3}}));
  REQUIRE(verify_bck(b).all_pass());
  BckConditionReport cond = check_conditions(b);
  REQUIRE_FALSE(cond.pC);
  CHECK_FALSE(cond.pD);  // pD would force pC
  try {
    phi(b);
    FAIL("expected PreconditionPCFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_pc_failed);
  }
}

TEST_CASE("roundtrip report distinguishes the two diamonds") {
  RoundtripReport rb = roundtrip_report(fixtures::diamond_b());
  CHECK(rb.psi_phi_psi_equal);
  CHECK(rb.phi_psi_equal);
  CHECK(rb.invariant_flag);

  RoundtripReport ra = roundtrip_report(fixtures::diamond_a());
  CHECK(ra.psi_phi_psi_equal);
  CHECK_FALSE(ra.phi_psi_equal);
  CHECK_FALSE(ra.invariant_flag);

  // The two diamonds share the same implication structure.
  CHECK(psi(fixtures::diamond_a()).arrow == psi(fixtures::diamond_b()).arrow);
  CHECK(psi(fixtures::diamond_a()).squig == psi(fixtures::diamond_b()).squig);
}

TEST_CASE("roundtrip equality matches invariance on all fixtures") {
  for (const FiniteEqAlgebra& a :
       {fixtures::diamond_b(), fixtures::diamond_a(), fixtures::chain_c(),
        fixtures::trivial()}) {
    RoundtripReport r = roundtrip_report(a);
    CHECK(r.psi_phi_psi_equal);
    CHECK(r.phi_psi_equal == r.invariant_flag);
  }
}

namespace {

FinitePseudoHoop diamond_hoop() {
  FinitePseudoHoop h;
  h.carrier = peqa::make_carrier({"0", "a", "b", "1"}, "1");
  h.prod = BinTable::from_rows(
      {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}});
  h.arrow = BinTable::from_rows(
      {{3, 3, 3, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {0, 1, 2, 3}});
  h.squig = h.arrow;
  return h;
}

}  // namespace

TEST_CASE("the diamond hoop verifies and converts back to the diamond") {
  FinitePseudoHoop h = diamond_hoop();
  AxiomReport r = verify_pseudo_hoop(h);
  for (const auto& e : r.entries) {
    INFO(e.name);
    CHECK(e.pass);
  }
  FiniteEqAlgebra back = hoop_to_eq(h);
  CHECK(back == fixtures::diamond_b());
  // hoops induce the pD condition on the implication structure
  CHECK(check_conditions(psi(back)).pD);
}

TEST_CASE("trivial hoop verifies") {
  FinitePseudoHoop h;
  h.carrier = peqa::make_carrier({"1"}, "1");
  h.prod = BinTable::from_rows({{0}});
  h.arrow = h.prod;
  h.squig = h.prod;
  CHECK(verify_pseudo_hoop(h).all_pass());
  CHECK(hoop_to_eq(h) == fixtures::trivial());
}

TEST_CASE("a broken product cell fails PH verification") {
  FinitePseudoHoop h = diamond_hoop();
  h.prod.at(1, 2) = 1;  // a (.) b := a
  AxiomReport r = verify_pseudo_hoop(h);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("pC contraction identity from the remark holds on psi images") {
  for (const FiniteEqAlgebra& a :
       {fixtures::diamond_b(), fixtures::diamond_a(), fixtures::chain_c()}) {
    FiniteBckMs b = psi(a);
    for (int x = 0; x < b.n(); ++x)
      for (int y = 0; y < b.n(); ++y) {
        CHECK(b.arrow(x, b.meet(x, y)) == b.arrow(x, y));
        CHECK(b.squig(x, b.meet(x, y)) == b.squig(x, y));
      }
  }
}
