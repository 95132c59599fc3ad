#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semigame/integer_sets.hpp"
#include "semigame/rational.hpp"

namespace semigame {

// Averaging stage sequences along which densities are taken:
//   z_symmetric:       F_n = {-n..n}           (2n+1 points)
//   n_interval(base):  F_n = {base..n-1}       (n - base points)
//   pos_even:          F_n = {2,4,...,2n}      (n points)
//   neg_even:          F_n = {-2,-4,...,-2n}   (n points)
//   pn_multiplicative: F_n = P_n               ((n+1)^n points)
enum class SeqKind { z_symmetric, n_interval, pos_even, neg_even, pn_multiplicative };

struct AveragingSequence {
  SeqKind kind = SeqKind::z_symmetric;
  BigInt base = 0;  // n_interval only

  static AveragingSequence z_symmetric() { return {SeqKind::z_symmetric, 0}; }
  static AveragingSequence n_interval(BigInt base = 0) {
    return {SeqKind::n_interval, std::move(base)};
  }
  static AveragingSequence pos_even() { return {SeqKind::pos_even, 0}; }
  static AveragingSequence neg_even() { return {SeqKind::neg_even, 0}; }
  static AveragingSequence pn_multiplicative() {
    return {SeqKind::pn_multiplicative, 0};
  }
};

std::string describe_sequence(const AveragingSequence& seq);

// The stage as an arithmetic progression {start + i*step : 0 <= i < count};
// BadParamError for pn_multiplicative (not progression-shaped) or an empty stage.
struct StageProgression {
  BigInt start, step, count;
};
StageProgression stage_progression(const AveragingSequence& seq, const BigInt& n);

BigInt stage_size(const AveragingSequence& seq, const BigInt& n);

inline constexpr long long kDefaultEnumCap = 10'000'000;

// Exact |A ∩ F_n| / |F_n|.  Closed-form counting whenever the set supports
// it; predicate sets are enumerated when |F_n| <= enum_cap, else
// PredicateNotCountableError.
Rational density_along(const AveragingSequence& seq, const IntegerSet& a,
                       const BigInt& n, long long enum_cap = kDefaultEnumCap);

struct StabilizationParams {
  int window = 5;
  Rational threshold = Rational(1, 1'000'000);
};

enum class Verdict { converged, oscillating, undecided };

struct StabilizationResult {
  Verdict verdict = Verdict::undecided;
  bool exact = false;   // converged with zero spread over the trailing window
  Rational value;       // set when converged: the simplest rational inside the
                        // threshold-padded trailing window
  Rational low, high;   // global sample envelope
  Rational window_low, window_high, window_spread;
};

// Verdict over exact samples: converged when the trailing window's spread is
// within the threshold; oscillating when the samples both rise and fall by
// more than the threshold; undecided otherwise.
StabilizationResult assess_samples(
    const std::vector<std::pair<BigInt, Rational>>& samples,
    const StabilizationParams& params);

struct DensityReport {
  AveragingSequence seq;
  std::string set_description;
  std::vector<std::pair<BigInt, Rational>> samples;  // (stage index, exact ratio)
  StabilizationParams params;
  StabilizationResult result;
};

// Geometric n = 2^4..2^30 for progression-shaped kinds (deep enough that a
// 10^-6 window can actually close); n = 1..6 for pn stages.
std::vector<BigInt> default_schedule(const AveragingSequence& seq);

DensityReport limit_density(const AveragingSequence& seq, const IntegerSet& a,
                            std::vector<BigInt> schedule = {},
                            StabilizationParams params = {},
                            long long enum_cap = kDefaultEnumCap);

}  // namespace semigame
