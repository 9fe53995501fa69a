#pragma once

#include <optional>

#include "peqa/algebra.hpp"

namespace peqa {

int max_search_size();
void set_max_search_size(int n);

struct SearchSpec {
  int size = 0;
  std::vector<std::string> require;
  std::vector<std::string> forbid;
  int limit = 0;  // 0 = unlimited
  int jobs = 1;
};

// Closed vocabulary: pseudo-eq, equality, invariant, commutative, symmetric,
// linear, bounded, simple, pC, pD, pP. Throws UnknownProperty otherwise.
bool eval_property(const FiniteEqAlgebra& a, const std::string& prop);

// Lexicographically least (meet, tilde, btilde) triple over all relabelings;
// equal forms = isomorphic algebras.
std::vector<int> canonical_form(const FiniteEqAlgebra& a);

// Rebuild an algebra from a canonical form with elements named e0..e{n-1}.
FiniteEqAlgebra algebra_from_canonical(const std::vector<int>& form, int n);

// All canonical meet-semilattice tables with top on n elements, up to
// isomorphism, ascending.
std::vector<BinTable> enumerate_semilattices(int n);

// Complete up to isomorphism; every output passes verify_axioms, all
// `require` properties and no `forbid` property. Canonical order.
std::vector<FiniteEqAlgebra> enumerate_models(const SearchSpec& spec);

// Same search without the pruning propagation: raw table sweep + axiom
// filter. Only feasible for very small sizes; used as the search oracle.
std::vector<FiniteEqAlgebra> enumerate_models_unpruned(int size);

// Claims: "IS_I != IS_II", "not-invariant", "phi-not-equality".
// Returns the canonically least witness among the models of exactly
// spec.size, if any; scanning sizes upward locates the overall minimum.
std::optional<FiniteEqAlgebra> find_counterexample(const SearchSpec& spec,
                                                   const std::string& claim);

}  // namespace peqa
