#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semigame/lp.hpp"
#include "semigame/payoff.hpp"
#include "semigame/rational.hpp"
#include "semigame/semigroup.hpp"

namespace semigame {

// The linear equations cutting out the invariant measures inside the simplex:
// total mass 1, and for every element s and target i, the mass of the
// preimage fiber of i under left (and right) translation by s equals m[i].
// Fibers equal to {i} yield trivial rows and are omitted; empty fibers yield
// the row m[i] = 0 and are kept.
struct InvarianceSystem {
  int n = 0;
  std::vector<std::vector<Rational>> eq_coeffs;  // dense rows of width n
  std::vector<Rational> eq_rhs;
};

InvarianceSystem assemble_invariance_system(const FiniteSemigroup& s);

// Feasibility program: the equations plus m >= 0, zero objective.  Row order
// matches the system, so an infeasibility certificate from the polytope can
// be re-verified against this problem.
lp::Problem invariance_feasibility_lp(const InvarianceSystem& sys);

enum class PolytopeStatus { empty, nonempty };

struct InvariantMeasurePolytope {
  int n = 0;
  InvarianceSystem system;
  PolytopeStatus status = PolytopeStatus::empty;
  std::string empty_reason;               // set when empty
  std::vector<Rational> farkas;           // certificate over system rows, set when empty
  bool unique = false;                    // the polytope is a single point
  bool complete = true;                   // extreme_points lists every vertex
  int dim = 0;                            // dimension of the affine hull of the equation set
  std::vector<ProbabilityVector> extreme_points;  // nonempty iff status nonempty
};

// Exact feasibility decision for the invariant-measure polytope.  Vertices are
// enumerated exactly when the equation defect is at most max_enum_dim and the
// subset count stays under combination_cap; otherwise one feasible point is
// returned with complete = false.
InvariantMeasurePolytope invariant_measures(const FiniteSemigroup& s,
                                            int max_enum_dim = 8,
                                            long combination_cap = 200000);

struct ImBounds {
  Rational lower;
  Rational upper;
};

// Exact min and max of the mean payoff over the invariant-measure polytope.
// Throws NoInvariantMeasureError when the polytope is empty.
ImBounds im_bounds(const FiniteSemigroup& s, const PayoffFunction& f);

// True iff every invariant measure gives f the same mean (bounds coincide).
bool has_property_IM(const FiniteSemigroup& s, const PayoffFunction& f);

struct TileMeasureReport {
  int k = 0;
  Rational expected;                       // 1/k
  std::vector<Rational> point_measures;    // measure of W at each listed extreme point
  ImBounds bounds;                         // min/max of measure(W) over the whole polytope
  bool all_match = false;                  // bounds.lower == bounds.upper == 1/k
  std::vector<int> violations;             // extreme-point indices with measure != 1/k
};

// Checks that every invariant measure assigns exactly 1/k to the tile W.
// Throws NotATileError when the translates fail to tile, and
// NoInvariantMeasureError when the polytope is empty.
TileMeasureReport tile_measure_check(const FiniteSemigroup& s, const Subset& w,
                                     const std::vector<int>& translates);

}  // namespace semigame
