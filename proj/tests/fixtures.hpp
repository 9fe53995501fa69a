#pragma once

#include "peqa/algebra.hpp"

// The three standing fixtures used across the suites:
//  - diamond_b: the diamond 0 < a,b < 1 with mirror-transposed equality
//    operations; invariant, commutative, symmetric.
//  - diamond_a: same carrier, one self-inverse equality operation
//    (tilde = btilde); an equality algebra that is not invariant.
//  - chain_c: the chain 0 < a < b < 1 equality algebra on which the identity
//    operator is a type I but not a type II internal state.
namespace fixtures {

peqa::FiniteEqAlgebra diamond_b();
peqa::FiniteEqAlgebra diamond_a();
peqa::FiniteEqAlgebra chain_c();
peqa::FiniteEqAlgebra trivial();

}  // namespace fixtures
