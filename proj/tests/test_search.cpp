#include "doctest.h"
#include "fixtures.hpp"
#include "peqa/bck.hpp"
#include "peqa/search.hpp"
#include "peqa/states.hpp"

using namespace peqa;

// Frozen regression constants, computed once from the unpruned oracle
// (enumerate_models_unpruned) and pinned.
constexpr size_t PEQA_SIZE2_COUNT = 2;
constexpr size_t PEQA_SIZE3_COUNT = 9;

TEST_CASE("semilattice enumeration at small sizes") {
  CHECK(enumerate_semilattices(1).size() == 1);
  CHECK(enumerate_semilattices(2).size() == 1);
  CHECK(enumerate_semilattices(3).size() == 1);  // only the chain has meets
  CHECK(enumerate_semilattices(4).size() == 2);  // chain and diamond
}

TEST_CASE("canonical forms separate the fixtures and identify relabelings") {
  FiniteEqAlgebra b = fixtures::diamond_b();
  FiniteEqAlgebra a = fixtures::diamond_a();
  CHECK(canonical_form(b) != canonical_form(a));

  // relabeled copy of the diamond: swap the two atoms
  const std::vector<std::string> names = {"0", "b", "a", "1"};
  std::vector<std::vector<int>> meet(4, std::vector<int>(4));
  std::vector<std::vector<int>> tilde(4, std::vector<int>(4));
  std::vector<std::vector<int>> btilde(4, std::vector<int>(4));
  const int perm[4] = {0, 2, 1, 3};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      meet[static_cast<size_t>(perm[x])][static_cast<size_t>(perm[y])] = perm[b.meet(x, y)];
      tilde[static_cast<size_t>(perm[x])][static_cast<size_t>(perm[y])] = perm[b.tilde(x, y)];
      btilde[static_cast<size_t>(perm[x])][static_cast<size_t>(perm[y])] = perm[b.btilde(x, y)];
    }
  FiniteEqAlgebra swapped = build_algebra(names, meet, tilde, btilde, "1");
  CHECK(canonical_form(swapped) == canonical_form(b));

  FiniteEqAlgebra rebuilt = algebra_from_canonical(canonical_form(b), 4);
  CHECK(verify_axioms(rebuilt).all_pass());
  CHECK(canonical_form(rebuilt) == canonical_form(b));
}

TEST_CASE("size-1 search finds exactly the trivial model") {
  std::vector<FiniteEqAlgebra> models = enumerate_models({1, {"pseudo-eq"}, {}, 0, 1});
  REQUIRE(models.size() == 1);
  CHECK(models[0].n() == 1);
}

TEST_CASE("pruned search matches the unpruned oracle at sizes 2 and 3") {
  for (int size : {2, 3}) {
    std::vector<FiniteEqAlgebra> pruned = enumerate_models({size, {}, {}, 0, 1});
    std::vector<FiniteEqAlgebra> oracle = enumerate_models_unpruned(size);
    REQUIRE(pruned.size() == oracle.size());
    for (size_t i = 0; i < pruned.size(); ++i)
      CHECK(canonical_form(pruned[i]) == canonical_form(oracle[i]));
  }
}

TEST_CASE("frozen model counts at sizes 2 and 3") {
  // computed once from the unpruned oracle and pinned as regression values
  CHECK(enumerate_models({2, {}, {}, 0, 1}).size() == PEQA_SIZE2_COUNT);
  CHECK(enumerate_models({3, {}, {}, 0, 1}).size() == PEQA_SIZE3_COUNT);
}

TEST_CASE("search output is deterministic and independent of job count") {
  std::vector<FiniteEqAlgebra> one = enumerate_models({3, {}, {}, 0, 1});
  std::vector<FiniteEqAlgebra> four = enumerate_models({3, {}, {}, 0, 4});
  REQUIRE(one.size() == four.size());
  for (size_t i = 0; i < one.size(); ++i) CHECK(one[i] == four[i]);
}

TEST_CASE("every emitted model re-verifies and satisfies the law suite") {
  for (int size : {2, 3}) {
    for (const FiniteEqAlgebra& a : enumerate_models({size, {}, {}, 0, 2})) {
      CHECK(verify_axioms(a).all_pass());
      CHECK(derived_law_suite(a).all_pass());
    }
  }
}

TEST_CASE("equality models are symmetric, everywhere") {
  for (int size : {1, 2, 3, 4})
    for (const FiniteEqAlgebra& a : enumerate_models({size, {}, {}, 0, 2})) {
      PropertyFlags f = classify(a);
      if (f.equality) CHECK(f.symmetric);
    }
}

TEST_CASE("search limit truncates the canonical order") {
  std::vector<FiniteEqAlgebra> all = enumerate_models({4, {}, {}, 0, 1});
  std::vector<FiniteEqAlgebra> some = enumerate_models({4, {}, {}, 3, 1});
  REQUIRE(some.size() == 3);
  for (size_t i = 0; i < some.size(); ++i) CHECK(some[i] == all[i]);
}

TEST_CASE("require/forbid filters") {
  std::vector<FiniteEqAlgebra> with =
      enumerate_models({4, {"pseudo-eq", "invariant", "commutative", "symmetric"},
                        {}, 0, 2});
  bool found_diamond = false;
  const std::vector<int> diamond = canonical_form(fixtures::diamond_b());
  for (const FiniteEqAlgebra& a : with)
    if (canonical_form(a) == diamond) found_diamond = true;
  CHECK(found_diamond);

  for (const FiniteEqAlgebra& a : enumerate_models({3, {"linear"}, {}, 0, 1}))
    CHECK(classify(a).linear);
  for (const FiniteEqAlgebra& a : enumerate_models({3, {}, {"equality"}, 0, 1}))
    CHECK_FALSE(classify(a).equality);
}

TEST_CASE("unknown property and oversized search are rejected") {
  CHECK_THROWS_AS(enumerate_models({3, {"shiny"}, {}, 0, 1}), Error);
  CHECK_THROWS_AS(enumerate_models({max_search_size() + 1, {}, {}, 0, 1}), Error);
}

TEST_CASE("claim: the two state types separate first at size 3") {
  SearchSpec spec;
  spec.jobs = 2;

  for (int size : {1, 2}) {
    spec.size = size;
    CHECK_FALSE(find_counterexample(spec, "IS_I != IS_II").has_value());
  }

  // The smallest separating model is a 3-chain (the 4-chain fixture also
  // separates, see the correspondence tests); verified independently against
  // the unpruned oracle below.
  spec.size = 3;
  std::optional<FiniteEqAlgebra> w = find_counterexample(spec, "IS_I != IS_II");
  REQUIRE(w.has_value());
  CHECK(w->n() == 3);
  CHECK(classify(*w).linear);
  CHECK(classify(*w).equality);
  CHECK(enumerate_states(*w, StateKind::type_i) !=
        enumerate_states(*w, StateKind::type_ii));

  bool oracle_found = false;
  for (const FiniteEqAlgebra& a : enumerate_models_unpruned(3))
    if (enumerate_states(a, StateKind::type_i) !=
        enumerate_states(a, StateKind::type_ii))
      oracle_found = true;
  CHECK(oracle_found);

  spec.size = 4;
  std::optional<FiniteEqAlgebra> w4 = find_counterexample(spec, "IS_I != IS_II");
  REQUIRE(w4.has_value());
  CHECK(w4->n() == 4);
  CHECK(enumerate_states(*w4, StateKind::type_i) !=
        enumerate_states(*w4, StateKind::type_ii));
}

TEST_CASE("claim: non-invariant models exist from size 2 on") {
  SearchSpec spec;
  spec.size = 1;
  CHECK_FALSE(find_counterexample(spec, "not-invariant").has_value());
  for (int size : {2, 3, 4}) {
    spec.size = size;
    std::optional<FiniteEqAlgebra> w = find_counterexample(spec, "not-invariant");
    REQUIRE(w.has_value());
    CHECK(w->n() == size);
    CHECK_FALSE(classify(*w).invariant);
  }
}

TEST_CASE("claim: phi never lands on an equality algebra beyond size 1") {
  SearchSpec spec;
  spec.size = 1;
  CHECK_FALSE(find_counterexample(spec, "phi-not-equality").has_value());
  spec.size = 2;
  std::optional<FiniteEqAlgebra> w = find_counterexample(spec, "phi-not-equality");
  REQUIRE(w.has_value());
  CHECK(w->n() == 2);
  CHECK_FALSE(classify(phi(psi(*w))).equality);
}

TEST_CASE("unknown claims are rejected") {
  SearchSpec spec;
  spec.size = 2;
  CHECK_THROWS_AS(find_counterexample(spec, "riemann"), Error);
}
