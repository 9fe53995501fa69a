#pragma once

#include <string>
#include <vector>

#include "peqa/carrier.hpp"

namespace peqa {

// Finite pseudo equality algebra candidate: a meet-semilattice with top and
// two equality operations ~ (tilde) and its mirror (btilde). Construction
// validates only the semilattice part; the equality axioms A2-A7 are checked
// separately by verify_axioms so near-miss candidates can be diagnosed.
struct FiniteEqAlgebra {
  Carrier carrier;
  BinTable meet;
  BinTable tilde;   // x ~ y
  BinTable btilde;  // x backsim y

  int n() const { return carrier.size(); }
  int top() const { return carrier.top; }
  bool leq(int x, int y) const { return leq_[static_cast<size_t>(x) * n() + y]; }

  // Materializes the order x <= y  iff  x meet y = x.
  void rebuild_order();

  bool operator==(const FiniteEqAlgebra& o) const {
    return carrier == o.carrier && meet == o.meet && tilde == o.tilde &&
           btilde == o.btilde;
  }

private:
  std::vector<char> leq_;
};

using AxiomReport = CheckReport;
using LawReport = CheckReport;

struct PropertyFlags {
  bool bounded = false;
  int bottom = -1;
  bool linear = false;
  bool symmetric = false;
  bool invariant = false;
  bool commutative = false;
  bool equality = false;  // tilde table equals btilde table
};

// Validates tokens, table shape, meet-semilattice laws and top-greatest.
// Throws Error on violation; does not require A2-A7.
FiniteEqAlgebra build_algebra(const std::vector<std::string>& names,
                              const std::vector<std::vector<int>>& meet_rows,
                              const std::vector<std::vector<int>>& tilde_rows,
                              const std::vector<std::vector<int>>& btilde_rows,
                              std::string_view top_token);

// Same, with tables already packed; used by transforms and the model search.
FiniteEqAlgebra assemble_algebra(Carrier carrier, BinTable meet, BinTable tilde,
                                 BinTable btilde);

// Exhaustive check of A1 (semilattice + top greatest) and A2-A7; A4 is
// quantified over chains x <= y <= z only. Sub-inequalities get their own
// entries (A4a..A4d, A5a, A5b, ...).
AxiomReport verify_axioms(const FiniteEqAlgebra& a);

// Derived implications: x -> y = (x/\y) ~ x  and  x ~> y = x backsim (x/\y).
struct ImplicationTables {
  BinTable arrow;
  BinTable squig;
};
ImplicationTables implications(const FiniteEqAlgebra& a);

PropertyFlags classify(const FiniteEqAlgebra& a);

// Every derived inequality/identity that must hold on a verified algebra,
// checked exhaustively; a violation means the input is not actually a
// pseudo equality algebra (or the law table has a bug).
LawReport derived_law_suite(const FiniteEqAlgebra& a);

// Componentwise product; element tokens are "x|y".
FiniteEqAlgebra product(const FiniteEqAlgebra& a1, const FiniteEqAlgebra& a2);

}  // namespace peqa
