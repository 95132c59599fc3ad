#pragma once

#include <utility>
#include <vector>

#include "semigame/rational.hpp"

namespace semigame {

// A countably additive mixed strategy for pick-the-bigger-integer: finitely
// many atoms at nonnegative integers, positive weights summing to 1.
class FiniteSupportStrategy {
 public:
  explicit FiniteSupportStrategy(std::vector<std::pair<BigInt, Rational>> atoms);

  const std::vector<std::pair<BigInt, Rational>>& atoms() const { return atoms_; }
  const BigInt& max_support() const { return atoms_.back().first; }

  Rational mass_below(const BigInt& t) const;  // P(s < t)
  Rational mass_above(const BigInt& t) const;  // P(s > t)

 private:
  std::vector<std::pair<BigInt, Rational>> atoms_;  // sorted by point
};

// sign(s - t): payoff to the player who named s.
int wald_payoff(const BigInt& s, const BigInt& t);
inline int wald_payoff(long long s, long long t) {
  return s < t ? -1 : (s > t ? 1 : 0);
}

// E_{s~p} sign(s - t).
Rational wald_expected_payoff(const FiniteSupportStrategy& p, const BigInt& t);

struct WaldResponse {
  BigInt reply;
  Rational payoff;  // to the strategy owner; always -1 for finite support
};

// The pure reply minimizing the strategy owner's expected payoff.  The
// expectation is nonincreasing in t and constant between breakpoints, so the
// scan covers 0, every atom, and every atom + 1; the minimum is -1, first
// attained at max_support + 1.
WaldResponse wald_best_response(const FiniteSupportStrategy& p);

}  // namespace semigame
