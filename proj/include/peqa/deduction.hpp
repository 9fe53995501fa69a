#pragma once

#include <optional>
#include <utility>

#include "peqa/algebra.hpp"

namespace peqa {

struct DsStatus {
  bool is_ds = false;      // DS1 + DS2 + DS3
  bool ds3_prime_agrees = true;  // DS3 and DS3' agree on this subset
  bool is_normal = false;  // DS4
  bool is_closed = false;
  bool is_proper = false;
  bool is_maximal = false;
  std::optional<Witness> ds_witness;      // first DS1/DS2/DS3 failure
  std::optional<Witness> normal_witness;  // first DS4 failure
  std::optional<Witness> closed_witness;
};

// Exhaustive status of one subset. Maximality is decided against the full
// enumeration, skip_maximality turns that off for callers that enumerate.
DsStatus ds_status(const FiniteEqAlgebra& a, const SubsetMask& d,
                   bool skip_maximality = false);

// All deductive systems, sorted by (popcount, lexicographic index list).
std::vector<SubsetMask> enumerate_ds(const FiniteEqAlgebra& a,
                                     bool normal_only = false);

// Least deductive system containing x: closure of x union {top} under
// up-sets and tilde-detachment.
SubsetMask generated_ds(const FiniteEqAlgebra& a, const SubsetMask& x);

bool is_simple(const FiniteEqAlgebra& a);

// Partition of the carrier; class ids are assigned in first-occurrence order.
struct CongruenceRelation {
  std::vector<int> class_of;

  int classes() const;
  std::vector<std::vector<int>> blocks() const;
  bool operator==(const CongruenceRelation&) const = default;
  bool operator<(const CongruenceRelation& o) const { return class_of < o.class_of; }
};

struct CongruenceScan {
  std::vector<CongruenceRelation> all;
  // H -> Theta_H for every normal deductive system.
  std::vector<std::pair<SubsetMask, CongruenceRelation>> from_normal_ds;
  bool exhaustive = false;       // carrier small enough for raw partition sweep
  bool bijection_holds = false;  // normal DS <-> congruences (invariant case)
};

CongruenceScan congruences(const FiniteEqAlgebra& a);

// Theta_H classes: x ~ y in H and y ~ x in H. Requires a normal DS.
CongruenceRelation congruence_of_ds(const FiniteEqAlgebra& a, const SubsetMask& h);

struct Quotient {
  FiniteEqAlgebra algebra;
  std::vector<int> projection;  // element index -> class index
};

// Class tokens are "<least member token>/H"; requires a normal DS.
Quotient quotient(const FiniteEqAlgebra& a, const SubsetMask& h);

}  // namespace peqa
