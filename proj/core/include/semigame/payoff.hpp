#pragma once

#include <vector>

#include "semigame/rational.hpp"
#include "semigame/semigroup.hpp"

namespace semigame {

// f : S -> [-1,1], one exact rational per element.
class PayoffFunction {
 public:
  explicit PayoffFunction(std::vector<Rational> values);
  static PayoffFunction characteristic(const Subset& w);          // chi_W, values in {0,1}
  static PayoffFunction signed_characteristic(const Subset& w);   // chi_W - chi_complement

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

// Exact mixed strategy on a finite set: nonnegative entries, sum exactly 1.
class ProbabilityVector {
 public:
  // Empty placeholder (size 0), for report structs filled in later; the
  // validating constructor below is the only way to obtain a real one.
  ProbabilityVector() = default;
  explicit ProbabilityVector(std::vector<Rational> weights);
  static ProbabilityVector uniform(int n);
  static ProbabilityVector point_mass(int n, int i);

  int size() const { return static_cast<int>(p_.size()); }
  const Rational& operator[](int i) const { return p_[i]; }
  const std::vector<Rational>& weights() const { return p_; }

  bool operator==(const ProbabilityVector&) const = default;

 private:
  std::vector<Rational> p_;
};

// M[x][y] = f(x*y): the row player picks x, the column player picks y.
class PayoffMatrix {
 public:
  PayoffMatrix(int rows, int cols) : rows_(rows), cols_(cols), m_(static_cast<std::size_t>(rows) * cols) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int x, int y) { return m_[static_cast<std::size_t>(x) * cols_ + y]; }
  const Rational& at(int x, int y) const { return m_[static_cast<std::size_t>(x) * cols_ + y]; }

 private:
  int rows_, cols_;
  std::vector<Rational> m_;
};

PayoffMatrix build_payoff_matrix(const FiniteSemigroup& s, const PayoffFunction& f);

// Mean payoff sum_i m[i] * f[i].
Rational mean_payoff(const ProbabilityVector& m, const PayoffFunction& f);

}  // namespace semigame
