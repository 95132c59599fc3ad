#pragma once

#include <vector>

#include "semigame/rational.hpp"

namespace semigame::lp {

enum class Relation { le, eq, ge };
enum class Status { optimal, infeasible, unbounded };

// maximize objective . x  subject to the rows; x_j >= 0 unless free_var[j].
// All data exact rationals.
struct Problem {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<bool> free_var;
  std::vector<std::vector<Rational>> row_coeffs;
  std::vector<Relation> row_rel;
  std::vector<Rational> row_rhs;

  int add_variable(const Rational& obj = Rational(0), bool is_free = false);
  void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs);
};

struct Solution {
  Status status = Status::infeasible;
  Rational objective;        // valid when optimal
  std::vector<Rational> x;   // valid when optimal
  // Valid when infeasible: multipliers y over the original rows with
  //   y_i >= 0 on 'ge' rows, y_i <= 0 on 'le' rows, y_i free on 'eq' rows,
  //   (sum_i y_i a_i)_j <= 0 for sign-constrained x_j, == 0 for free x_j,
  //   sum_i y_i b_i > 0,
  // which certifies that no feasible x exists.
  std::vector<Rational> farkas;
};

// Dense tableau simplex, exact pivots, two phases, Bland's anti-cycling rule.
Solution solve(const Problem& p);

bool verify_farkas(const Problem& p, const std::vector<Rational>& y);

}  // namespace semigame::lp
