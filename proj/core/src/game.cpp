#include "semigame/game.hpp"

#include <utility>

#include "semigame/errors.hpp"
#include "semigame/lp.hpp"

namespace semigame {

namespace {

// Row program: maximize v subject to sum_x p[x] M[x][y] - v >= 0 for all y,
// sum p = 1, p >= 0, v free.
std::pair<ProbabilityVector, Rational> solve_row(const PayoffMatrix& m) {
  lp::Problem prob;
  for (int x = 0; x < m.rows(); ++x) prob.add_variable();
  int v = prob.add_variable(Rational(1), /*is_free=*/true);
  for (int y = 0; y < m.cols(); ++y) {
    std::vector<Rational> row(prob.num_vars, Rational(0));
    for (int x = 0; x < m.rows(); ++x) row[x] = m.at(x, y);
    row[v] = -1;
    prob.add_row(std::move(row), lp::Relation::ge, Rational(0));
  }
  std::vector<Rational> mass(prob.num_vars, Rational(0));
  for (int x = 0; x < m.rows(); ++x) mass[x] = 1;
  prob.add_row(std::move(mass), lp::Relation::eq, Rational(1));

  lp::Solution sol = lp::solve(prob);
  if (sol.status != lp::Status::optimal) {
    throw Error("internal error: row program did not reach an optimum");
  }
  std::vector<Rational> p(sol.x.begin(), sol.x.begin() + m.rows());
  return {ProbabilityVector(std::move(p)), sol.objective};
}

// Column program: minimize w (as maximize -w) subject to
// sum_y q[y] M[x][y] - w <= 0 for all x, sum q = 1, q >= 0, w free.
std::pair<ProbabilityVector, Rational> solve_col(const PayoffMatrix& m) {
  lp::Problem prob;
  for (int y = 0; y < m.cols(); ++y) prob.add_variable();
  int w = prob.add_variable(Rational(-1), /*is_free=*/true);
  for (int x = 0; x < m.rows(); ++x) {
    std::vector<Rational> row(prob.num_vars, Rational(0));
    for (int y = 0; y < m.cols(); ++y) row[y] = m.at(x, y);
    row[w] = -1;
    prob.add_row(std::move(row), lp::Relation::le, Rational(0));
  }
  std::vector<Rational> mass(prob.num_vars, Rational(0));
  for (int y = 0; y < m.cols(); ++y) mass[y] = 1;
  prob.add_row(std::move(mass), lp::Relation::eq, Rational(1));

  lp::Solution sol = lp::solve(prob);
  if (sol.status != lp::Status::optimal) {
    throw Error("internal error: column program did not reach an optimum");
  }
  std::vector<Rational> q(sol.x.begin(), sol.x.begin() + m.cols());
  return {ProbabilityVector(std::move(q)), -sol.objective};
}

}  // namespace

BestResponse best_response(const PayoffMatrix& m, const ProbabilityVector& opponent,
                           Side responder) {
  BestResponse best;
  if (responder == Side::column) {
    if (opponent.size() != m.rows()) {
      throw BadParamError("opponent strategy length does not match row count");
    }
    for (int y = 0; y < m.cols(); ++y) {
      Rational e(0);
      for (int x = 0; x < m.rows(); ++x) e += opponent[x] * m.at(x, y);
      if (y == 0 || e < best.payoff) best = {y, std::move(e)};
    }
  } else {
    if (opponent.size() != m.cols()) {
      throw BadParamError("opponent strategy length does not match column count");
    }
    for (int x = 0; x < m.rows(); ++x) {
      Rational e(0);
      for (int y = 0; y < m.cols(); ++y) e += opponent[y] * m.at(x, y);
      if (x == 0 || e > best.payoff) best = {x, std::move(e)};
    }
  }
  return best;
}

GameSolution solve_zero_sum(const PayoffMatrix& m) {
  if (m.rows() <= 0 || m.cols() <= 0) throw BadParamError("empty payoff matrix");
  auto [p_star, row_value] = solve_row(m);
  auto [q_star, col_value] = solve_col(m);
  if (row_value != col_value) {
    throw Error("internal error: row and column game values differ");
  }
  GameSolution sol{row_value, std::move(p_star), std::move(q_star), Rational(0),
                   Rational(0)};
  sol.row_guarantee = best_response(m, sol.p_star, Side::column).payoff;
  sol.col_guarantee = best_response(m, sol.q_star, Side::row).payoff;
  if (sol.row_guarantee != sol.value || sol.col_guarantee != sol.value) {
    throw Error("internal error: minimax certificates do not match the value");
  }
  return sol;
}

Rational iterated_payoff(const PayoffMatrix& m, const ProbabilityVector& p,
                         const ProbabilityVector& q, SumOrder order) {
  if (p.size() != m.rows() || q.size() != m.cols()) {
    throw BadParamError("strategy lengths do not match the payoff matrix");
  }
  Rational total(0);
  if (order == SumOrder::x_inner) {
    for (int y = 0; y < m.cols(); ++y) {
      Rational inner(0);
      for (int x = 0; x < m.rows(); ++x) inner += p[x] * m.at(x, y);
      total += q[y] * inner;
    }
  } else {
    for (int x = 0; x < m.rows(); ++x) {
      Rational inner(0);
      for (int y = 0; y < m.cols(); ++y) inner += q[y] * m.at(x, y);
      total += p[x] * inner;
    }
  }
  return total;
}

TheoremReport verify_main_theorem(const FiniteSemigroup& s, const PayoffFunction& f) {
  if (f.size() != s.size()) {
    throw BadParamError("payoff length does not match semigroup size");
  }
  PayoffMatrix m = build_payoff_matrix(s, f);
  TheoremReport report;
  report.solution = solve_zero_sum(m);
  report.polytope = invariant_measures(s);
  report.applicable = report.polytope.status == PolytopeStatus::nonempty;
  if (!report.applicable) {
    report.all_hold = false;
    return report;
  }
  report.all_hold = true;
  for (const ProbabilityVector& ell : report.polytope.extreme_points) {
    MeasureOptimalityCheck check{ell,
                                 mean_payoff(ell, f),
                                 false,
                                 best_response(m, ell, Side::column),
                                 best_response(m, ell, Side::row),
                                 false,
                                 false};
    check.value_matches = check.mean == report.solution.value;
    check.optimal_for_row = check.reply_to_row.payoff == report.solution.value;
    check.optimal_for_col = check.reply_to_col.payoff == report.solution.value;
    report.all_hold = report.all_hold && check.value_matches &&
                      check.optimal_for_row && check.optimal_for_col;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace semigame
