#pragma once

#include <set>
#include <string>
#include <vector>

#include "semigame/integer_sets.hpp"
#include "semigame/rational.hpp"

namespace semigame {

inline constexpr int kPnDefaultCap = 6;

// P_n: positive integers whose prime factorization uses only the first n
// primes, each with exponent at most n; |P_n| = (n+1)^n.
std::vector<BigInt> generate_pn(int n, int cap = kPnDefaultCap);  // sorted

BigInt pn_size(int n);  // (n+1)^n without enumeration

// Exact |A ∩ P_n| / |P_n| by enumeration of P_n.
Rational multiplicative_density(const IntegerSet& a, int n, int cap = kPnDefaultCap);

// Share of P_n whose leading decimal digit lies in `digits`.  Labeled an
// estimate: no convergence claim is attached to these ratios.
struct BenfordEstimate {
  int n = 0;
  BigInt hits;
  BigInt total;
  Rational ratio;
  std::string label = "ESTIMATE";
};
BenfordEstimate benford_density_estimate(const std::set<int>& digits, int n,
                                         int cap = kPnDefaultCap);

}  // namespace semigame
