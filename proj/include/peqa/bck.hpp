#pragma once

#include <optional>

#include "peqa/algebra.hpp"

namespace peqa {

// Pseudo BCK-meet-semilattice candidate: meet-semilattice with top plus the
// two implication tables. Axioms B1'-B6' are checked by verify_bck.
struct FiniteBckMs {
  Carrier carrier;
  BinTable meet;
  BinTable arrow;  // ->
  BinTable squig;  // ~>

  int n() const { return carrier.size(); }
  int top() const { return carrier.top; }
  bool leq(int x, int y) const { return leq_[static_cast<size_t>(x) * n() + y]; }
  void rebuild_order();

  bool operator==(const FiniteBckMs& o) const {
    return carrier == o.carrier && meet == o.meet && arrow == o.arrow &&
           squig == o.squig;
  }

private:
  std::vector<char> leq_;
};

FiniteBckMs assemble_bck(Carrier carrier, BinTable meet, BinTable arrow,
                         BinTable squig);

// B1'-B6' plus agreement of the arrow order with the meet order
// (x <= y iff x->y = 1 iff x~>y = 1).
AxiomReport verify_bck(const FiniteBckMs& b);

struct BckConditionReport {
  bool pC = false;
  std::optional<Witness> pC_witness;
  bool pD = false;
  std::optional<Witness> pD_witness;
  bool pP = false;
  std::optional<Witness> pP_witness;
  std::optional<BinTable> prod;  // the recovered product table when pP holds
  bool commutative = false;
  bool linear = false;
};

BckConditionReport check_conditions(const FiniteBckMs& b);

// x -> y = (x/\y) ~ x  and  x ~> y = x backsim (x/\y); shares the meet table.
FiniteBckMs psi(const FiniteEqAlgebra& a);

// x ~ y = y -> x  and  x backsim y = x ~> y. Requires the pC condition.
FiniteEqAlgebra phi(const FiniteBckMs& b);

struct RoundtripReport {
  bool psi_phi_psi_equal = false;  // always true on verified input
  bool phi_psi_equal = false;      // iff the algebra is invariant
  bool invariant_flag = false;     // classify() result, cross-checked
};

RoundtripReport roundtrip_report(const FiniteEqAlgebra& a);

struct FinitePseudoHoop {
  Carrier carrier;
  BinTable prod;   // (.)
  BinTable arrow;  // ->
  BinTable squig;  // ~>

  int n() const { return carrier.size(); }
  int top() const { return carrier.top; }
};

// PH1-PH5 plus antisymmetry of the arrow order and the derived meet being a
// greatest lower bound.
AxiomReport verify_pseudo_hoop(const FinitePseudoHoop& h);

// Derived meet table (x->y)(.)x; throws MeetIllDefined when the four PH5
// expressions disagree somewhere.
BinTable hoop_meet(const FinitePseudoHoop& h);

// x ~ y = y -> x, x backsim y = x ~> y over the derived meet.
FiniteEqAlgebra hoop_to_eq(const FinitePseudoHoop& h);

}  // namespace peqa
