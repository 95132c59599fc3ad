#pragma once

#include <vector>

#include "semigame/measures.hpp"
#include "semigame/order.hpp"
#include "semigame/payoff.hpp"
#include "semigame/rational.hpp"
#include "semigame/semigroup.hpp"

namespace semigame {

enum class Side { row, column };

struct BestResponse {
  int index = 0;      // the responding side's pure strategy
  Rational payoff;    // resulting expected payoff to the row player
};

struct GameSolution {
  Rational value;            // payoff to the row player under optimal play
  ProbabilityVector p_star;  // row (maximizer) optimal strategy
  ProbabilityVector q_star;  // column (minimizer) optimal strategy
  // Exact minimax certificates, both equal to value:
  Rational row_guarantee;    // min over columns y of sum_x p_star[x] M[x][y]
  Rational col_guarantee;    // max over rows x of sum_y q_star[y] M[x][y]
};

// Exact minimax by linear programming; both players' programs are solved and
// the certificates above are recomputed and checked before returning.
GameSolution solve_zero_sum(const PayoffMatrix& m);

// Best pure reply for `responder` against the opponent's mixed strategy:
// the column minimizing (or the row maximizing) the row player's payoff.
// Ties go to the smallest index.
BestResponse best_response(const PayoffMatrix& m, const ProbabilityVector& opponent,
                           Side responder);

// The two iterated sums computed literally, inner loop first, with no
// algebraic rearrangement; finite Fubini says they agree.
Rational iterated_payoff(const PayoffMatrix& m, const ProbabilityVector& p,
                         const ProbabilityVector& q, SumOrder order);

// For one invariant measure: its mean payoff, whether that equals the game
// value, and the worst pure reply it faces when used by either player.
struct MeasureOptimalityCheck {
  ProbabilityVector measure;
  Rational mean;             // sum_i measure[i] f[i]
  bool value_matches = false;
  BestResponse reply_to_row; // best column reply when the measure plays row
  BestResponse reply_to_col; // best row reply when the measure plays column
  bool optimal_for_row = false;  // reply_to_row.payoff == value
  bool optimal_for_col = false;  // reply_to_col.payoff == value
};

struct TheoremReport {
  bool applicable = false;   // invariant-measure polytope nonempty
  GameSolution solution;
  InvariantMeasurePolytope polytope;
  std::vector<MeasureOptimalityCheck> checks;  // one per listed extreme point
  bool all_hold = false;     // applicable and every check fully passes
};

// Cross-verifies, for the game with payoff f(x*y): every extreme invariant
// measure has mean payoff equal to the game value and is an optimal strategy
// for both players.  With an empty polytope the report carries the solver's
// value alone and applicable = false.
TheoremReport verify_main_theorem(const FiniteSemigroup& s, const PayoffFunction& f);

}  // namespace semigame
