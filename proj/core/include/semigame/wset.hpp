#pragma once

#include <string>
#include <vector>

#include "semigame/interval_set.hpp"
#include "semigame/rational.hpp"

namespace semigame {

// The oscillating set W = union over k >= 0 of [2^(2^(2k)), 2^(2^(2k+1)) - 1]:
// blocks [2,3], [16,255], [65536, 2^32-1], [2^64, 2^128-1], ...
// Membership: x >= 2 and floor(log2(floor(log2 x))) even.
bool w_contains(const BigInt& x);

// W ∩ [2, n] as explicit intervals (the last block clipped at n).
IntervalSet w_blocks_up_to(const BigInt& n);

// |W ∩ [2, n]| by closed-form interval counting; n >= 2.
BigInt w_count(const BigInt& n);

// w_count(n) / (n - 2); n >= 3.
Rational w_density_ratio(const BigInt& n);

// The ratio at the oscillation nodes: low nodes n = 2^(2^(2j)) - 1 (just
// before a block opens, ratio sinks toward 0) and high nodes n = 2^(2^(2j+1))
// (just after a block closes, ratio climbs toward 1).
struct WOscillationRow {
  int j = 0;
  BigInt low_n;
  BigInt high_n;
  Rational low_ratio;
  Rational high_ratio;
  Rational one_minus_high;
};

// Rows for j = 1..j_max; j_max <= 6 (beyond that the exact integers get
// needlessly enormous) else CapExceededError.
std::vector<WOscillationRow> w_oscillation_table(int j_max);

// Caveat attached to oscillation reports: the numerators are exact counts.
std::string w_table_note();

}  // namespace semigame
