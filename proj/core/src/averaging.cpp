#include "semigame/averaging.hpp"

#include <algorithm>

#include "semigame/errors.hpp"
#include "semigame/pn.hpp"

namespace semigame {

std::string describe_sequence(const AveragingSequence& seq) {
  switch (seq.kind) {
    case SeqKind::z_symmetric: return "z_symmetric";
    case SeqKind::n_interval: return "n_interval:" + seq.base.str();
    case SeqKind::pos_even: return "pos_even";
    case SeqKind::neg_even: return "neg_even";
    case SeqKind::pn_multiplicative: return "pn";
  }
  return "unknown";
}

StageProgression stage_progression(const AveragingSequence& seq, const BigInt& n) {
  switch (seq.kind) {
    case SeqKind::z_symmetric:
      if (n < 0) throw BadParamError("stage index must be nonnegative");
      return {BigInt(-n), 1, BigInt(2 * n + 1)};
    case SeqKind::n_interval:
      if (n <= seq.base) {
        throw BadParamError("stage index must exceed the interval base");
      }
      return {seq.base, 1, BigInt(n - seq.base)};
    case SeqKind::pos_even:
      if (n < 1) throw BadParamError("stage index must be positive");
      return {2, 2, n};
    case SeqKind::neg_even:
      if (n < 1) throw BadParamError("stage index must be positive");
      return {-2, -2, n};
    case SeqKind::pn_multiplicative:
      throw BadParamError("P_n stages are not arithmetic progressions");
  }
  throw BadParamError("unknown sequence kind");
}

BigInt stage_size(const AveragingSequence& seq, const BigInt& n) {
  if (seq.kind == SeqKind::pn_multiplicative) {
    if (n < 0 || n > 1000) throw BadParamError("P_n stage index out of range");
    return pn_size(static_cast<int>(n));
  }
  return stage_progression(seq, n).count;
}

Rational density_along(const AveragingSequence& seq, const IntegerSet& a,
                       const BigInt& n, long long enum_cap) {
  if (seq.kind == SeqKind::pn_multiplicative) {
    if (n < 0 || n > 1000) throw BadParamError("P_n stage index out of range");
    int idx = static_cast<int>(n);
    if (pn_size(idx) > enum_cap) {
      throw CapExceededError("P_" + n.str() + " exceeds the enumeration cap");
    }
    return multiplicative_density(a, idx, /*cap=*/idx);
  }
  StageProgression prog = stage_progression(seq, n);
  std::optional<BigInt> hits =
      count_in_progression(a, prog.start, prog.step, prog.count);
  if (!hits) {
    if (prog.count > enum_cap) {
      throw PredicateNotCountableError(
          "set has no closed counting form and the stage (" + prog.count.str() +
          " points) exceeds the enumeration cap");
    }
    BigInt found = 0;
    BigInt x = prog.start;
    for (BigInt i = 0; i < prog.count; ++i, x += prog.step) {
      if (set_contains(a, x)) ++found;
    }
    hits = std::move(found);
  }
  return Rational(*hits, prog.count);
}

StabilizationResult assess_samples(
    const std::vector<std::pair<BigInt, Rational>>& samples,
    const StabilizationParams& params) {
  if (samples.empty()) throw BadParamError("no samples to assess");
  StabilizationResult res;
  res.low = res.high = samples.front().second;
  for (const auto& [n, v] : samples) {
    res.low = std::min(res.low, v);
    res.high = std::max(res.high, v);
  }
  const int window = std::max(1, params.window);
  if (static_cast<int>(samples.size()) >= window) {
    std::size_t from = samples.size() - window;
    res.window_low = res.window_high = samples[from].second;
    for (std::size_t i = from; i < samples.size(); ++i) {
      res.window_low = std::min(res.window_low, samples[i].second);
      res.window_high = std::max(res.window_high, samples[i].second);
    }
    res.window_spread = res.window_high - res.window_low;
    if (res.window_spread <= params.threshold) {
      res.verdict = Verdict::converged;
      res.exact = res.window_spread == 0;
      res.value = res.exact
                      ? res.window_low
                      : simplest_in_interval(res.window_low - params.threshold,
                                             res.window_high + params.threshold);
      return res;
    }
  }
  // Oscillation: the samples both rise and fall by more than the threshold.
  Rational max_rise(0), max_fall(0);
  Rational running_min = samples.front().second;
  Rational running_max = samples.front().second;
  for (const auto& [n, v] : samples) {
    max_rise = std::max(max_rise, Rational(v - running_min));
    max_fall = std::max(max_fall, Rational(running_max - v));
    running_min = std::min(running_min, v);
    running_max = std::max(running_max, v);
  }
  res.verdict = (max_rise > params.threshold && max_fall > params.threshold)
                    ? Verdict::oscillating
                    : Verdict::undecided;
  return res;
}

std::vector<BigInt> default_schedule(const AveragingSequence& seq) {
  std::vector<BigInt> schedule;
  if (seq.kind == SeqKind::pn_multiplicative) {
    for (int n = 1; n <= kPnDefaultCap; ++n) schedule.emplace_back(n);
    return schedule;
  }
  for (int i = 4; i <= 30; ++i) schedule.push_back(BigInt(1) << i);
  return schedule;
}

DensityReport limit_density(const AveragingSequence& seq, const IntegerSet& a,
                            std::vector<BigInt> schedule,
                            StabilizationParams params, long long enum_cap) {
  if (schedule.empty()) schedule = default_schedule(seq);
  if (!std::is_sorted(schedule.begin(), schedule.end())) {
    throw BadParamError("schedule indices must be increasing");
  }
  DensityReport report;
  report.seq = seq;
  report.set_description = describe_set(a);
  report.params = params;
  for (const BigInt& n : schedule) {
    report.samples.emplace_back(n, density_along(seq, a, n, enum_cap));
  }
  report.result = assess_samples(report.samples, params);
  return report;
}

}  // namespace semigame
