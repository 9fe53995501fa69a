#pragma once

#include <optional>

#include "peqa/bck.hpp"
#include "peqa/deduction.hpp"

namespace peqa {

struct PointedEqAlgebra {
  FiniteEqAlgebra base;
  int point = 0;
};

PointedEqAlgebra make_pointed(FiniteEqAlgebra base, std::string_view point_token);

// The four point-relative negation vectors, indexed by element.
struct NegationTables {
  std::vector<int> tilde_neg;   // a ~ x
  std::vector<int> btilde_neg;  // x backsim a
  std::vector<int> arrow_neg;   // x -> a
  std::vector<int> squig_neg;   // x ~> a
};

NegationTables negations(const PointedEqAlgebra& p);

struct PointedClass {
  bool good_sim = false;        // the two equality double negations agree
  bool good_arrow = false;      // the two implication double negations agree
  bool involutive_sim = false;  // equality double negations are the identity
  bool involutive_arrow = false;
  bool compatible = false;  // good_sim plus C1-C4
  std::optional<Witness> compat_witness;
};

PointedClass pointed_class(const PointedEqAlgebra& p);

struct ClosureResult {
  UnaryOperator gamma;  // x |-> double equality negation of x
  bool extensive = false;
  bool monotone = false;
  bool idempotent = false;
};

// Requires a compatible pointed algebra.
ClosureResult gamma_closure(const PointedEqAlgebra& p);

// Elements fixed by both double negations.
SubsetMask regular_elements(const PointedEqAlgebra& p);

enum class StateKind { type_i, type_ii };

using StateReport = CheckReport;

// IS1 over comparable pairs, IS2 (type I) or IS2' (type II), IS3, IS4 and
// optionally IS5, each with the least witness pair and both side values.
StateReport check_state(const FiniteEqAlgebra& a, const UnaryOperator& sigma,
                        StateKind kind, bool strong = false);

// Side values of the first IS2/IS2' equation at one pair; used by reports
// and by tests that pin specific violations.
std::pair<int, int> state_axiom_sides(const FiniteEqAlgebra& a,
                                      const UnaryOperator& sigma, StateKind kind,
                                      int x, int y, int part);

// Brute force over self-maps with sound pruning (sigma(1)=1, idempotence,
// monotonicity); canonically sorted by table.
std::vector<UnaryOperator> enumerate_states(const FiniteEqAlgebra& a,
                                            StateKind kind, int jobs = 1);

// SM1-SM4.
StateReport check_morphism(const FiniteEqAlgebra& a, const UnaryOperator& sigma);
std::vector<UnaryOperator> enumerate_morphisms(const FiniteEqAlgebra& a,
                                               int jobs = 1);

// x <= sigma(x) for every x.
bool is_extensive(const FiniteEqAlgebra& a, const UnaryOperator& sigma);

struct KernelInfo {
  SubsetMask kernel;
  DsStatus status;
  bool state_i = false;
  bool state_ii = false;
  bool morphism = false;
  bool strong = false;
};

// Requires sigma to pass check_state (either kind) or check_morphism.
KernelInfo kernel(const FiniteEqAlgebra& a, const UnaryOperator& sigma);

// Operator known only on a subset: entries outside the domain are ignored.
struct PartialOperator {
  UnaryOperator table;
  SubsetMask domain;
};

// Extension by x |-> sigma(double negation of x). sigma must be defined
// exactly on the regular elements, be a state-morphism of that subalgebra
// and fix the point.
UnaryOperator extend_morphism(const PointedEqAlgebra& p,
                              const PartialOperator& sigma_on_reg);

// Induced algebra on a subuniverse; fails if the subset is not closed.
FiniteEqAlgebra subalgebra(const FiniteEqAlgebra& a, const SubsetMask& s);

// SB axioms on a pseudo BCK-meet-semilattice.
StateReport check_bck_state(const FiniteBckMs& b, const UnaryOperator& mu,
                            StateKind kind);
std::vector<UnaryOperator> enumerate_bck_states(const FiniteBckMs& b,
                                                StateKind kind);

// Homomorphism for meet/arrow/squig plus idempotence.
StateReport check_bck_morphism(const FiniteBckMs& b, const UnaryOperator& mu);
std::vector<UnaryOperator> enumerate_bck_morphisms(const FiniteBckMs& b);

struct CorrespondenceReport {
  std::vector<UnaryOperator> is_i_eqa, is_ii_eqa, sm_eqa;
  std::vector<UnaryOperator> is_i_bck, is_ii_bck, sm_bck;
  bool linear = false, symmetric = false, invariant = false;

  struct Inclusion {
    std::string name;
    bool holds = false;
    bool asserted = false;  // guaranteed under the applicable hypotheses
    std::optional<UnaryOperator> violator;
  };
  std::vector<Inclusion> inclusions;
};

CorrespondenceReport state_correspondence(const FiniteEqAlgebra& a, int jobs = 1);

}  // namespace peqa
