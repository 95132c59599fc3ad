#pragma once

#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "semigame/averaging.hpp"
#include "semigame/errors.hpp"
#include "semigame/order.hpp"
#include "semigame/rational.hpp"
#include "semigame/wald.hpp"

namespace semigame {

// One player's measure: an averaging stage sequence (asymptotic, finitely
// additive in the limit) or a finite-support strategy (countably additive).
struct SideMeasure {
  std::variant<AveragingSequence, FiniteSupportStrategy> m;

  static SideMeasure averaging(AveragingSequence seq) { return {std::move(seq)}; }
  static SideMeasure finite(FiniteSupportStrategy p) { return {std::move(p)}; }
  bool is_finite() const {
    return std::holds_alternative<FiniteSupportStrategy>(m);
  }
};

// How a stage (inner or outer) arrived at its value:
//   finite_support - exact weighted sum over the atoms
//   constant_tail  - every schedule sample identical (exact)
//   rational_tail  - samples fit a + b/size exactly at every mark (exact
//                    limit a); this is the generic shape of an average whose
//                    integrand is eventually constant in the tail
//   window         - trailing-window spread within threshold (approximate)
//   oscillating    - samples rise and fall beyond the threshold; no value
//   undecided      - none of the above
enum class StageMode {
  finite_support,
  constant_tail,
  rational_tail,
  window,
  oscillating,
  undecided
};

inline const char* stage_mode_name(StageMode m) {
  switch (m) {
    case StageMode::finite_support: return "finite_support";
    case StageMode::constant_tail: return "constant_tail";
    case StageMode::rational_tail: return "rational_tail";
    case StageMode::window: return "window";
    case StageMode::oscillating: return "oscillating";
    case StageMode::undecided: return "undecided";
  }
  return "unknown";
}

struct StageEvidence {
  StageMode mode = StageMode::undecided;
  bool exact = false;
  bool decided = false;                                // value is meaningful
  Rational value;
  Rational low, high;                                  // sample envelope
  std::vector<std::pair<long long, Rational>> samples; // (stage index, average)
  std::string note;
};

struct IteratedParams {
  std::vector<long long> outer_schedule;  // default 2^4 .. 2^9
  long long inner_base_min = 16;          // first inner mark, before adaptation
  int inner_samples = 6;                  // geometric marks per inner stage
  StabilizationParams stab;               // window mode parameters
  long long eval_cap = 200'000'000;       // total integrand-evaluation guard
};

struct IteratedReport {
  SumOrder order = SumOrder::x_inner;
  bool decided = false;
  bool exact = false;
  Rational value;
  StageEvidence outer;
  long long inner_example_point = 0;  // outer point whose inner evidence is shown
  StageEvidence inner_example;        // evidence at the largest-|point| inner stage
  long long inner_stages = 0;
  long long inner_undecided = 0;
  long long evaluations = 0;          // integrand calls performed
  std::string note;
};

namespace iterated_detail {

template <class F>
using result_t = std::invoke_result_t<F, long long, long long>;

// Exact verdict ladder over per-mark averages; sizes[] are the |F_n| the
// averages were taken over (the variable of the rational-tail fit).
inline StageEvidence judge_samples(
    const std::vector<std::pair<long long, Rational>>& samples,
    const std::vector<long long>& sizes, const StabilizationParams& stab) {
  StageEvidence ev;
  ev.samples = samples;
  ev.low = ev.high = samples.front().second;
  for (const auto& s : samples) {
    if (s.second < ev.low) ev.low = s.second;
    if (s.second > ev.high) ev.high = s.second;
  }

  bool all_equal = true;
  for (const auto& s : samples) all_equal &= s.second == samples.front().second;
  if (all_equal) {
    ev.mode = StageMode::constant_tail;
    ev.exact = ev.decided = true;
    ev.value = samples.front().second;
    return ev;
  }

  if (samples.size() >= 4) {
    // Fit v = a + b / size through the last two marks, then demand an exact
    // match at every mark.
    const std::size_t k = samples.size();
    Rational n1(sizes[k - 2]), n2(sizes[k - 1]);
    const Rational& v1 = samples[k - 2].second;
    const Rational& v2 = samples[k - 1].second;
    Rational b = (v2 - v1) / (Rational(1) / n2 - Rational(1) / n1);
    Rational a = v2 - b / n2;
    bool fits = true;
    for (std::size_t j = 0; j < k && fits; ++j) {
      fits = samples[j].second == a + b / Rational(sizes[j]);
    }
    if (fits) {
      ev.mode = StageMode::rational_tail;
      ev.exact = ev.decided = true;
      ev.value = a;
      ev.note = "samples match a + b/size exactly with b = " + format_rational(b);
      return ev;
    }
  }

  std::vector<std::pair<BigInt, Rational>> big_samples;
  big_samples.reserve(samples.size());
  for (const auto& s : samples) big_samples.emplace_back(s.first, s.second);
  StabilizationResult res = assess_samples(big_samples, stab);
  switch (res.verdict) {
    case Verdict::converged:
      ev.mode = StageMode::window;
      ev.decided = true;
      ev.exact = false;
      ev.value = res.value;
      ev.note = "window spread " + format_rational(res.window_spread) +
                " within threshold; value is the simplest rational in the window";
      break;
    case Verdict::oscillating:
      ev.mode = StageMode::oscillating;
      break;
    case Verdict::undecided:
      ev.mode = StageMode::undecided;
      break;
  }
  return ev;
}

inline long long to_ll(const BigInt& x, const char* what) {
  if (x < std::numeric_limits<long long>::min() ||
      x > std::numeric_limits<long long>::max()) {
    throw CapExceededError(std::string(what) + " exceeds the 64-bit range");
  }
  return static_cast<long long>(x);
}

// Visit the elements of F_next \ F_prev (prev < next; prev = 0 means "all of
// F_next" for kinds whose smallest stage at index 0 is empty or a single
// origin handled by the caller).
template <class Fn>
void for_each_new_point(const AveragingSequence& seq, long long prev,
                        long long next, Fn&& fn) {
  switch (seq.kind) {
    case SeqKind::z_symmetric:
      if (prev < 0) {
        fn(0);
        prev = 0;
      }
      for (long long k = prev + 1; k <= next; ++k) {
        fn(k);
        fn(-k);
      }
      return;
    case SeqKind::n_interval: {
      long long base = to_ll(seq.base, "interval base");
      for (long long x = std::max(prev, base); x < next; ++x) fn(x);
      return;
    }
    case SeqKind::pos_even:
      for (long long k = prev + 1; k <= next; ++k) fn(2 * k);
      return;
    case SeqKind::neg_even:
      for (long long k = prev + 1; k <= next; ++k) fn(-2 * k);
      return;
    case SeqKind::pn_multiplicative:
      throw BadParamError("multiplicative stages are not supported in iterated integrals");
  }
}

// Sentinel "nothing enumerated yet" start value per kind.
inline long long empty_stage_mark(const AveragingSequence& seq) {
  switch (seq.kind) {
    case SeqKind::z_symmetric: return -1;  // -1 => origin not yet emitted
    case SeqKind::n_interval: return to_ll(seq.base, "interval base");
    default: return 0;
  }
}

template <class F>
class Engine {
 public:
  Engine(F f, const SideMeasure& mu, const SideMeasure& nu, SumOrder order,
         const IteratedParams& params)
      : f_(std::move(f)), order_(order), params_(params),
        inner_measure_(order == SumOrder::x_inner ? mu : nu),
        outer_measure_(order == SumOrder::x_inner ? nu : mu) {
    if (params_.outer_schedule.empty()) {
      // Six geometric marks: enough for the trailing window and the tail
      // fits while the adaptive inner stages stay well under eval_cap.
      for (long long n = 16; n <= 512; n *= 2) {
        params_.outer_schedule.push_back(n);
      }
    }
  }

  IteratedReport run() {
    IteratedReport report;
    report.order = order_;
    if (outer_measure_.is_finite()) {
      run_finite_outer(report);
    } else {
      run_averaging_outer(report);
    }
    report.evaluations = evals_;
    report.inner_stages = inner_stages_;
    report.inner_undecided = inner_undecided_;
    return report;
  }

 private:
  // f with (inner variable, outer point) mapped back to f(x, y).
  auto eval(long long inner_v, long long outer_v) {
    ++evals_;
    if (evals_ > params_.eval_cap) {
      throw CapExceededError("iterated integral exceeded the evaluation cap");
    }
    return order_ == SumOrder::x_inner ? f_(inner_v, outer_v)
                                       : f_(outer_v, inner_v);
  }

  // Exact inner value for a finite-support inner measure.
  StageEvidence inner_finite(long long outer_point) {
    const auto& p = std::get<FiniteSupportStrategy>(inner_measure_.m);
    Rational total(0);
    for (const auto& atom : p.atoms()) {
      total += atom.second * Rational(eval(to_ll(atom.first, "atom"), outer_point));
    }
    StageEvidence ev;
    ev.mode = StageMode::finite_support;
    ev.exact = ev.decided = true;
    ev.value = std::move(total);
    ev.low = ev.high = ev.value;
    return ev;
  }

  // Inner average along the inner sequence at geometric marks adapted to the
  // outer point's magnitude, judged by the exact ladder.
  StageEvidence inner_averaging(long long outer_point) {
    const auto& seq = std::get<AveragingSequence>(inner_measure_.m);
    long long base = std::max<long long>(params_.inner_base_min, 16);
    long long need = 4 * (std::llabs(outer_point) + 2);
    long long seq_base = seq.kind == SeqKind::n_interval
                             ? to_ll(seq.base, "interval base")
                             : 0;
    while (base < need || base <= seq_base) base *= 2;

    std::vector<long long> marks(static_cast<std::size_t>(params_.inner_samples));
    for (std::size_t j = 0; j < marks.size(); ++j) marks[j] = base << j;

    using R = result_t<F>;
    using Acc = std::conditional_t<std::is_integral_v<R>, long long, Rational>;
    Acc sum{};
    std::vector<std::pair<long long, Rational>> samples;
    std::vector<long long> sizes;
    long long prev = empty_stage_mark(seq);
    for (long long mark : marks) {
      for_each_new_point(seq, prev, mark,
                         [&](long long x) { sum += eval(x, outer_point); });
      prev = mark;
      long long size = to_ll(stage_size(seq, BigInt(mark)), "stage size");
      samples.emplace_back(mark, Rational(sum) / size);
      sizes.push_back(size);
    }
    return judge_samples(samples, sizes, params_.stab);
  }

  const StageEvidence& inner_value(long long outer_point) {
    auto it = memo_.find(outer_point);
    if (it == memo_.end()) {
      StageEvidence ev = inner_measure_.is_finite() ? inner_finite(outer_point)
                                                    : inner_averaging(outer_point);
      ++inner_stages_;
      if (!ev.decided) ++inner_undecided_;
      it = memo_.emplace(outer_point, std::move(ev)).first;
      // Showcase the most informative inner stage: any failing one beats a
      // decided one; otherwise the largest-|point| stage (hardest instance).
      constexpr long long kUnset = std::numeric_limits<long long>::min();
      bool cur_fails = !it->second.decided;
      bool example_fails =
          example_point_ != kUnset && !memo_.at(example_point_).decided;
      if (example_point_ == kUnset || (cur_fails && !example_fails) ||
          (cur_fails == example_fails &&
           std::llabs(outer_point) > std::llabs(example_point_))) {
        example_point_ = outer_point;
      }
    }
    return it->second;
  }

  void finish(IteratedReport& report) {
    if (example_point_ != std::numeric_limits<long long>::min()) {
      report.inner_example_point = example_point_;
      report.inner_example = memo_.at(example_point_);
    }
    bool inner_all_exact = true;
    bool inner_all_decided = true;
    for (const auto& kv : memo_) {
      inner_all_exact &= kv.second.exact;
      inner_all_decided &= kv.second.decided;
    }
    report.decided = inner_all_decided && report.outer.decided;
    report.exact = report.decided && inner_all_exact && report.outer.exact;
    if (report.decided) {
      report.value = report.outer.value;
      if (!report.exact) {
        report.note = "some stage used the approximate window criterion";
      }
    } else if (inner_undecided_ > 0) {
      report.note = "inner integral failed to stabilize at " +
                    std::to_string(inner_undecided_) + " outer point(s)";
    } else {
      report.note = "outer samples did not stabilize (" +
                    std::string(stage_mode_name(report.outer.mode)) + ")";
    }
  }

  void run_finite_outer(IteratedReport& report) {
    const auto& q = std::get<FiniteSupportStrategy>(outer_measure_.m);
    Rational total(0);
    bool all_decided = true;
    for (const auto& atom : q.atoms()) {
      const StageEvidence& ev = inner_value(to_ll(atom.first, "atom"));
      if (!ev.decided) {
        all_decided = false;
        continue;
      }
      total += atom.second * ev.value;
    }
    report.outer.mode = StageMode::finite_support;
    report.outer.decided = all_decided;
    report.outer.exact = all_decided;
    if (all_decided) {
      report.outer.value = std::move(total);
      report.outer.low = report.outer.high = report.outer.value;
    }
    finish(report);
  }

  void run_averaging_outer(IteratedReport& report) {
    const auto& seq = std::get<AveragingSequence>(outer_measure_.m);
    if (seq.kind == SeqKind::pn_multiplicative) {
      throw BadParamError("multiplicative stages are not supported in iterated integrals");
    }
    Rational sum(0);
    bool all_decided = true;
    std::vector<std::pair<long long, Rational>> samples;
    std::vector<long long> sizes;
    long long prev = empty_stage_mark(seq);
    for (long long mark : params_.outer_schedule) {
      for_each_new_point(seq, prev, mark, [&](long long c) {
        const StageEvidence& ev = inner_value(c);
        if (ev.decided) {
          sum += ev.value;
        } else {
          all_decided = false;
        }
      });
      prev = mark;
      if (!all_decided) break;
      long long size = to_ll(stage_size(seq, BigInt(mark)), "stage size");
      samples.emplace_back(mark, sum / size);
      sizes.push_back(size);
    }
    if (!all_decided || samples.empty()) {
      report.outer.mode = StageMode::undecided;
      finish(report);
      return;
    }
    report.outer = judge_samples(samples, sizes, params_.stab);
    finish(report);
  }

  F f_;
  SumOrder order_;
  IteratedParams params_;
  SideMeasure inner_measure_;
  SideMeasure outer_measure_;
  std::map<long long, StageEvidence> memo_;
  long long evals_ = 0;
  long long inner_stages_ = 0;
  long long inner_undecided_ = 0;
  long long example_point_ = std::numeric_limits<long long>::min();
};

}  // namespace iterated_detail

// The nested asymptotic integral of f(x, y): the inner variable's measure is
// averaged (or summed, for finite support) to a detected exact limit for each
// fixed outer point, then the outer measure is applied to those inner values
// the same way.  Stabilization is detected, never assumed: the report says
// how each stage concluded and returns decided = false rather than guessing.
//
// f must be callable as f(long long x, long long y) with x the first player's
// variable; it may return any integral type (fast path) or a Rational.
template <class F>
IteratedReport iterated_asymptotic_integral(F f, const SideMeasure& mu,
                                            const SideMeasure& nu, SumOrder order,
                                            const IteratedParams& params = {}) {
  iterated_detail::Engine<F> engine(std::move(f), mu, nu, order, params);
  return engine.run();
}

}  // namespace semigame
