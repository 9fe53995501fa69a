#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "peqa/bck.hpp"
#include "peqa/deduction.hpp"
#include "peqa/search.hpp"

using namespace peqa;

TEST_CASE("ds status on the diamond") {
  FiniteEqAlgebra b = fixtures::diamond_b();

  SubsetMask a1 = SubsetMask::of({1, 3}, 4);  // {a,1}
  DsStatus s = ds_status(b, a1);
  CHECK(s.is_ds);
  CHECK(s.ds3_prime_agrees);
  CHECK(s.is_normal);
  CHECK(s.is_closed);
  CHECK(s.is_proper);
  CHECK(s.is_maximal);

  SubsetMask top_only = SubsetMask::of({3}, 4);
  CHECK(ds_status(b, top_only).is_ds);

  SubsetMask just_b = SubsetMask::of({2}, 4);  // misses top
  DsStatus sb = ds_status(b, just_b);
  CHECK_FALSE(sb.is_ds);
  REQUIRE(sb.ds_witness.has_value());
  CHECK(sb.ds_witness->part == 1);  // the 1-membership condition fails
}

TEST_CASE("{top} is a deductive system of every fixture") {
  for (const FiniteEqAlgebra& a :
       {fixtures::diamond_b(), fixtures::diamond_a(), fixtures::chain_c(),
        fixtures::trivial()}) {
    SubsetMask d = SubsetMask::of({a.top()}, a.n());
    CHECK(ds_status(a, d).is_ds);
  }
}

TEST_CASE("diamond deductive systems are exactly the four expected, all normal") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  std::vector<SubsetMask> ds = enumerate_ds(b);
  REQUIRE(ds.size() == 4);
  CHECK(ds[0] == SubsetMask::of({3}, 4));
  CHECK(ds[1] == SubsetMask::of({1, 3}, 4));
  CHECK(ds[2] == SubsetMask::of({2, 3}, 4));
  CHECK(ds[3] == SubsetMask::full(4));
  CHECK(enumerate_ds(b, /*normal_only=*/true) == ds);
}

TEST_CASE("chain deductive systems are upward closed and intersection closed") {
  FiniteEqAlgebra c = fixtures::chain_c();
  std::vector<SubsetMask> ds = enumerate_ds(c);
  CHECK(std::find(ds.begin(), ds.end(), SubsetMask::of({3}, 4)) != ds.end());
  CHECK(std::find(ds.begin(), ds.end(), SubsetMask::full(4)) != ds.end());
  for (const SubsetMask& d : ds)
    for (int x : d.indices())
      for (int y = 0; y < 4; ++y)
        if (c.leq(x, y)) CHECK(d.contains(y));
  for (const SubsetMask& d1 : ds)
    for (const SubsetMask& d2 : ds) {
      SubsetMask inter{d1.bits & d2.bits, 4};
      CHECK(std::find(ds.begin(), ds.end(), inter) != ds.end());
    }
}

TEST_CASE("chain enumeration matches the raw powerset filter") {
  FiniteEqAlgebra c = fixtures::chain_c();
  std::vector<SubsetMask> expected;
  for (uint32_t bits = 0; bits < 16; ++bits) {
    SubsetMask d{bits, 4};
    if (ds_status(c, d, /*skip_maximality=*/true).is_ds) expected.push_back(d);
  }
  std::sort(expected.begin(), expected.end(), mask_less);
  CHECK(enumerate_ds(c) == expected);
}

TEST_CASE("trivial algebra has a single deductive system") {
  std::vector<SubsetMask> ds = enumerate_ds(fixtures::trivial());
  REQUIRE(ds.size() == 1);
  CHECK(ds[0] == SubsetMask::full(1));
}

TEST_CASE("generated deductive systems") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  CHECK(generated_ds(b, SubsetMask::of({1}, 4)) == SubsetMask::of({1, 3}, 4));
  CHECK(generated_ds(b, SubsetMask::empty(4)) == SubsetMask::of({3}, 4));
  CHECK(generated_ds(b, SubsetMask::of({0}, 4)) == SubsetMask::full(4));

  // generated system equals the least enumerated system containing the seed
  for (const FiniteEqAlgebra& a : {fixtures::diamond_b(), fixtures::chain_c()}) {
    std::vector<SubsetMask> all = enumerate_ds(a);
    for (uint32_t bits = 0; bits < (1u << a.n()); ++bits) {
      SubsetMask seed{bits, a.n()};
      SubsetMask gen = generated_ds(a, seed);
      SubsetMask best = SubsetMask::full(a.n());
      for (const SubsetMask& d : all)
        if (seed.subset_of(d) && d.popcount() < best.popcount()) best = d;
      CHECK(gen == best);
    }
  }
}

TEST_CASE("every deductive system of an invariant algebra is closed") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  REQUIRE(classify(b).invariant);
  for (const SubsetMask& d : enumerate_ds(b)) {
    DsStatus s = ds_status(b, d, /*skip_maximality=*/true);
    CHECK(s.is_closed);
  }
}

TEST_CASE("simplicity") {
  CHECK_FALSE(is_simple(fixtures::diamond_b()));
  CHECK_FALSE(is_simple(fixtures::chain_c()));
  CHECK(is_simple(fixtures::trivial()));
}

TEST_CASE("congruences of the diamond biject with its normal systems") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  CongruenceScan scan = congruences(b);
  CHECK(scan.exhaustive);
  CHECK(scan.all.size() == 4);
  CHECK(scan.from_normal_ds.size() == 4);
  CHECK(scan.bijection_holds);
}

TEST_CASE("theta classes of {a,1} on the diamond") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  CongruenceRelation rel = congruence_of_ds(b, SubsetMask::of({1, 3}, 4));
  // classes {0,b} and {a,1}
  CHECK(rel.class_of[0] == rel.class_of[2]);
  CHECK(rel.class_of[1] == rel.class_of[3]);
  CHECK(rel.class_of[0] != rel.class_of[1]);
}

TEST_CASE("trivial algebra has exactly one congruence") {
  CongruenceScan scan = congruences(fixtures::trivial());
  CHECK(scan.all.size() == 1);
}

TEST_CASE("quotient of the diamond by {a,1}") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  Quotient q = quotient(b, SubsetMask::of({1, 3}, 4));
  CHECK(q.algebra.n() == 2);
  CHECK(verify_axioms(q.algebra).all_pass());
  CHECK(q.algebra.carrier.name(0) == "0/H");
  CHECK(q.algebra.carrier.name(1) == "a/H");
  // projection is a homomorphism
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      auto pr = [&](int v) { return q.projection[static_cast<size_t>(v)]; };
      CHECK(pr(b.meet(x, y)) == q.algebra.meet(pr(x), pr(y)));
      CHECK(pr(b.tilde(x, y)) == q.algebra.tilde(pr(x), pr(y)));
      CHECK(pr(b.btilde(x, y)) == q.algebra.btilde(pr(x), pr(y)));
    }
}

TEST_CASE("quotient by the whole algebra is trivial") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  Quotient q = quotient(b, SubsetMask::full(4));
  CHECK(q.algebra.n() == 1);
  CHECK(verify_axioms(q.algebra).all_pass());
}

TEST_CASE("quotient by {top} is the identity relabeling") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  Quotient q = quotient(b, SubsetMask::of({3}, 4));
  CHECK(q.algebra.n() == 4);
  CHECK(q.algebra.meet == b.meet);
  CHECK(q.algebra.tilde == b.tilde);
  CHECK(q.algebra.btilde == b.btilde);
}

TEST_CASE("quotient requires a normal deductive system") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  CHECK_THROWS_AS(quotient(b, SubsetMask::of({2}, 4)), Error);
}

TEST_CASE("both detachment variants agree on every subset") {
  std::vector<FiniteEqAlgebra> algebras = {
      fixtures::diamond_b(), fixtures::diamond_a(), fixtures::chain_c()};
  for (int size : {2, 3, 4})
    for (const FiniteEqAlgebra& a : enumerate_models({size, {}, {}, 0, 2}))
      algebras.push_back(a);
  for (const FiniteEqAlgebra& a : algebras)
    for (uint32_t bits = 0; bits < (1u << a.n()); ++bits)
      CHECK(ds_status(a, SubsetMask{bits, a.n()}, true).ds3_prime_agrees);
}

TEST_CASE("deductive systems of pD implication structures are subalgebras") {
  std::vector<FiniteEqAlgebra> algebras = {fixtures::diamond_b(),
                                           fixtures::chain_c()};
  for (const FiniteEqAlgebra& a : enumerate_models({4, {}, {}, 0, 2}))
    algebras.push_back(a);
  int swept = 0;
  for (const FiniteEqAlgebra& a : algebras) {
    FiniteBckMs bm = psi(a);
    if (!check_conditions(bm).pD) continue;
    const int n = bm.n();
    for (uint32_t bits = 0; bits < (1u << n); ++bits) {
      SubsetMask d{bits, n};
      // BCK deductive system: contains top, closed under arrow detachment.
      if (!d.contains(bm.top())) continue;
      bool ds = true;
      for (int x = 0; x < n && ds; ++x) {
        if (!d.contains(x)) continue;
        for (int y = 0; y < n && ds; ++y)
          if (d.contains(bm.arrow(x, y)) && !d.contains(y)) ds = false;
      }
      if (!ds) continue;
      ++swept;
      for (int x : d.indices())
        for (int y : d.indices()) {
          CHECK(d.contains(bm.meet(x, y)));
          CHECK(d.contains(bm.arrow(x, y)));
          CHECK(d.contains(bm.squig(x, y)));
        }
    }
  }
  CHECK(swept > 0);
}

TEST_CASE("congruence scan beyond the raw partition cap") {
  set_max_carrier_size(16);
  FiniteEqAlgebra two = quotient(fixtures::diamond_b(), SubsetMask::of({1, 3}, 4)).algebra;
  FiniteEqAlgebra p = product(fixtures::diamond_b(), two);  // 8 elements
  REQUIRE(p.n() == 8);
  CongruenceScan scan = congruences(p);
  CHECK_FALSE(scan.exhaustive);
  CHECK(scan.all.size() == scan.from_normal_ds.size());
  for (const auto& [h, rel] : scan.from_normal_ds)
    CHECK(std::find(scan.all.begin(), scan.all.end(), rel) != scan.all.end());
  set_max_carrier_size(12);
}

TEST_CASE("products of deductive systems are deductive systems of the product") {
  set_max_carrier_size(16);
  FiniteEqAlgebra b = fixtures::diamond_b();
  FiniteEqAlgebra p = product(b, b);
  // D1 = {a,1}, D2 = {1}
  SubsetMask d = SubsetMask::empty(16);
  for (int x : {1, 3}) d.insert(x * 4 + 3);
  DsStatus s = ds_status(p, d, /*skip_maximality=*/true);
  CHECK(s.is_ds);
  CHECK(s.is_normal);
  // and every pair of factor systems multiplies to a product system
  for (const SubsetMask& d1 : enumerate_ds(b))
    for (const SubsetMask& d2 : enumerate_ds(b)) {
      SubsetMask prod_mask = SubsetMask::empty(16);
      for (int x : d1.indices())
        for (int y : d2.indices()) prod_mask.insert(x * 4 + y);
      CHECK(ds_status(p, prod_mask, true).is_ds);
    }
  set_max_carrier_size(12);
}

TEST_CASE("normal-DS round trip recovers the system from its congruence") {
  for (const FiniteEqAlgebra& a : {fixtures::diamond_b(), fixtures::chain_c()}) {
    for (const SubsetMask& h : enumerate_ds(a, /*normal_only=*/true)) {
      CongruenceRelation rel = congruence_of_ds(a, h);
      SubsetMask back = SubsetMask::empty(a.n());
      const int tc = rel.class_of[static_cast<size_t>(a.top())];
      for (int x = 0; x < a.n(); ++x)
        if (rel.class_of[static_cast<size_t>(x)] == tc) back.insert(x);
      CHECK(back == h);
    }
  }
}
