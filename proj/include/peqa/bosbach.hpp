#pragma once

#include <optional>

#include "peqa/rational.hpp"
#include "peqa/states.hpp"

namespace peqa {

struct LinEq {
  std::vector<Rational> coeff;  // one per carrier element
  Rational rhs;

  bool operator==(const LinEq&) const = default;
};

// Exact linear system over the state values; the unit box 0 <= v <= 1 is
// implicit on every variable.
struct LinearSystem {
  int nvars = 0;
  std::vector<LinEq> eqs;
};

// One equation per unordered pair for each of the two exchange identities,
// plus s(1) = 1 and s(a) = 0. Duplicates removed after sign normalization.
LinearSystem bosbach_system(const PointedEqAlgebra& p);

// Equivalent formulation over comparable pairs only; used as the second
// route of the cross-check inside solve_bosbach.
LinearSystem bosbach_system_comparable(const PointedEqAlgebra& p);

// The arrow/squig exchange system on the transformed structure.
LinearSystem bosbach_bck_system(const PointedEqAlgebra& p);

struct ParamInterval {
  bool empty = true;
  Rational lo, hi;
};

struct BosbachSolutionSpace {
  int nvars = 0;
  bool consistent = false;  // the equation system is solvable at all
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> basis;  // normalized, sorted
  int dimension = 0;
  // Exact projection of the box-constrained region onto each parameter.
  std::vector<ParamInterval> param_box;
  bool feasible = false;
  bool alt_formulation_agrees = false;
};

// Gaussian elimination over the rationals, then Fourier-Motzkin projection
// of the unit-box constraints onto each affine parameter.
BosbachSolutionSpace solve_bosbach(const PointedEqAlgebra& p);

// Solve an arbitrary system the same way (shared by the BCK comparison).
BosbachSolutionSpace solve_system(const LinearSystem& sys);

struct BosbachCheck {
  bool ok = false;
  std::string axiom;  // first violated axiom name when !ok
  int x = -1, y = -1;
  Rational lhs, rhs;
};

BosbachCheck is_bosbach(const PointedEqAlgebra& p, const std::vector<Rational>& s);

// s after a point-fixing state-morphism; the result is again a Bosbach state.
std::vector<Rational> compose_with_morphism(const PointedEqAlgebra& p,
                                            const std::vector<Rational>& s,
                                            const UnaryOperator& sigma);

struct BckCompareReport {
  BosbachSolutionSpace eqa;
  BosbachSolutionSpace bck;
  bool eqa_subset_of_bck = false;  // guaranteed always
  bool spaces_equal = false;       // guaranteed when the base is invariant
  bool equality_asserted = false;
};

BckCompareReport bosbach_bck_compare(const PointedEqAlgebra& p);

// Does every solution of `space` satisfy `sys`? (Exact affine containment.)
bool space_satisfies(const BosbachSolutionSpace& space, const LinearSystem& sys);

}  // namespace peqa
