// Acceptance gate: one line per criterion, [PASS]/[FAIL] with the elapsed
// time against a wall-clock budget.  A criterion passes only when its checks
// hold AND it finishes inside the budget; the process exits nonzero if any
// line fails.  All arithmetic below is exact unless a check says otherwise.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "semigame/averaging.hpp"
#include "semigame/game.hpp"
#include "semigame/iterated.hpp"
#include "semigame/lp.hpp"
#include "semigame/measures.hpp"
#include "semigame/payoff.hpp"
#include "semigame/pn.hpp"
#include "semigame/random_instances.hpp"
#include "semigame/rational.hpp"
#include "semigame/semigroup.hpp"
#include "semigame/wald.hpp"
#include "semigame/wset.hpp"

namespace {

using namespace semigame;
using R = Rational;

struct Criterion {
  std::string name;
  double budget_s;
  std::function<bool(std::string&)> run;
};

bool fail(std::string& why, const std::string& msg) {
  if (why.empty()) why = msg;
  return false;
}

// ---------------------------------------------------------------------------
// 1. On a cyclic group the game value is the mean payoff and the uniform
//    measure is an optimal strategy for both players.
bool crit_cyclic_mean(std::string& why) {
  InstanceRng rng(90101);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + (i % 23);  // sizes 2..24, cycled
    FiniteSemigroup s = make_cyclic_group(n);
    PayoffFunction f = random_payoff(rng, n);
    TheoremReport rep = verify_main_theorem(s, f);
    R mean(0);
    for (int x = 0; x < n; ++x) mean += f.values()[x] / n;
    if (rep.solution.value != mean)
      return fail(why, "value != mean payoff at size " + std::to_string(n));
    if (!rep.applicable || !rep.all_hold)
      return fail(why, "uniform measure not certified optimal");
    if (!rep.polytope.unique || rep.checks.size() != 1)
      return fail(why, "expected exactly one invariant measure");
    for (int x = 0; x < n; ++x)
      if (rep.checks[0].measure[x] != R(1, n))
        return fail(why, "invariant measure is not uniform");
  }
  return true;
}

// 2. Winning on a residue class mod k inside the 6-element cyclic group is
//    worth exactly 1/k, for every divisor k of 6 and every residue.
bool crit_residue_values(std::string& why) {
  FiniteSemigroup s = make_cyclic_group(6);
  PayoffFunction half = PayoffFunction::characteristic(
      Subset::from_indices(6, std::vector<int>{0, 1, 2}));
  if (solve_zero_sum(build_payoff_matrix(s, half)).value != R(1, 2))
    return fail(why, "winning on {0,1,2} is not worth 1/2");
  for (int k : {1, 2, 3, 6}) {
    for (int r = 0; r < k; ++r) {
      std::vector<int> idx;
      for (int x = 0; x < 6; ++x)
        if (x % k == r) idx.push_back(x);
      PayoffFunction f = PayoffFunction::characteristic(Subset::from_indices(6, idx));
      GameSolution sol = solve_zero_sum(build_payoff_matrix(s, f));
      if (sol.value != R(1, k))
        return fail(why, "class " + std::to_string(r) + " mod " +
                             std::to_string(k) + " priced wrong");
    }
  }
  return true;
}

// 3. In a min-of-two chain the bottom element absorbs everything: the unique
//    invariant measure is the point mass at 0 and every game is worth f(0).
bool crit_min_chain(std::string& why) {
  InstanceRng rng(90303);
  for (int n = 2; n <= 10; ++n) {
    FiniteSemigroup s = make_min_chain(n);
    InvariantMeasurePolytope poly = invariant_measures(s);
    if (poly.status != PolytopeStatus::nonempty || !poly.unique)
      return fail(why, "chain measure not unique at size " + std::to_string(n));
    const ProbabilityVector& m = poly.extreme_points.at(0);
    for (int x = 0; x < n; ++x)
      if (m[x] != (x == 0 ? R(1) : R(0)))
        return fail(why, "chain measure is not the bottom point mass");
    for (int t = 0; t < 3; ++t) {
      PayoffFunction f = random_payoff(rng, n);
      GameSolution sol = solve_zero_sum(build_payoff_matrix(s, f));
      if (sol.value != f.values()[0])
        return fail(why, "chain game value differs from payoff at the bottom");
    }
  }
  return true;
}

// 4. Structures where one side dictates the product have no two-sided
//    invariant measure; the emptiness comes with a verified infeasibility
//    certificate and the measure-based optimality argument declines.
bool crit_no_measure(std::string& why) {
  std::vector<FiniteSemigroup> subjects;
  for (int n = 2; n <= 6; ++n) {
    subjects.push_back(make_left_zero(n));
    subjects.push_back(make_right_zero(n));
  }
  subjects.push_back(make_rps());
  for (const FiniteSemigroup& s : subjects) {
    InvariantMeasurePolytope poly = invariant_measures(s);
    if (poly.status != PolytopeStatus::empty)
      return fail(why, "expected an empty polytope");
    if (poly.farkas.empty() ||
        !lp::verify_farkas(invariance_feasibility_lp(poly.system), poly.farkas))
      return fail(why, "infeasibility certificate did not check out");
    PayoffFunction f = PayoffFunction::characteristic(
        Subset::from_indices(s.size(), std::vector<int>{0}));
    TheoremReport rep = verify_main_theorem(s, f);
    if (rep.applicable || rep.all_hold)
      return fail(why, "optimality argument should not apply here");
  }
  return true;
}

// 5. Tiles get measure exactly 1/k: every interval tile of every cyclic group
//    up to size 24, under every divisor block count.
bool crit_tile_law(std::string& why) {
  for (int n = 1; n <= 24; ++n) {
    FiniteSemigroup s = make_cyclic_group(n);
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      const int b = n / k;  // block length
      std::vector<int> w_idx, translates;
      for (int x = 0; x < b; ++x) w_idx.push_back(x);
      for (int t = 0; t < k; ++t) translates.push_back(t * b);
      Subset w = Subset::from_indices(n, w_idx);
      TileMeasureReport rep = tile_measure_check(s, w, translates);
      if (rep.k != k || rep.expected != R(1, k) || !rep.all_match)
        return fail(why, "tile of " + std::to_string(k) + " blocks in C" +
                             std::to_string(n) + " not measured 1/k");
      if (rep.bounds.lower != R(1, k) || rep.bounds.upper != R(1, k))
        return fail(why, "tile measure bounds not pinned to 1/k");
    }
  }
  return true;
}

// 6. Finite order exchange: for random (structure, payoff, strategy pair)
//    instances the two iterated sums, computed literally in both orders,
//    agree exactly.
bool crit_finite_fubini(std::string& why) {
  InstanceRng rng(90606);
  for (int i = 0; i < 1000; ++i) {
    FiniteSemigroup s = random_semigroup(rng, 6);
    const int n = s.size();
    PayoffFunction f = random_payoff(rng, n);
    PayoffMatrix m = build_payoff_matrix(s, f);
    ProbabilityVector p = random_probability_vector(rng, n);
    ProbabilityVector q = random_probability_vector(rng, n);
    R a = iterated_payoff(m, p, q, SumOrder::x_inner);
    R b = iterated_payoff(m, p, q, SumOrder::y_inner);
    if (a != b) return fail(why, "iterated sums disagreed on a finite game");
  }
  return true;
}

// 7. The doubly-exponential block set: counts agree with a brute-force scan
//    to one million, and the density envelope keeps widening toward 0 and 1.
bool crit_wset(std::string& why) {
  // Brute membership: x lies in block m = floor(log2 floor(log2 x)); member
  // iff m is even.  Runs on machine integers, independent of the library.
  auto brute_member = [](unsigned long long x) {
    if (x < 2) return false;
    int b = 63 - __builtin_clzll(x);        // floor(log2 x) >= 1
    int m = 31 - __builtin_clz(static_cast<unsigned>(b));
    return m % 2 == 0;
  };
  const std::vector<unsigned long long> checkpoints{
      2, 3, 4, 15, 16, 255, 256, 65535, 65536, 123456, 500000, 1000000};
  unsigned long long running = 0;
  std::size_t next = 0;
  for (unsigned long long x = 2; x <= 1000000; ++x) {
    if (brute_member(x)) ++running;
    while (next < checkpoints.size() && checkpoints[next] == x) {
      if (w_count(BigInt(static_cast<long long>(x))) !=
          BigInt(static_cast<long long>(running)))
        return fail(why, "count mismatch at " + std::to_string(x));
      ++next;
    }
  }
  if (next != checkpoints.size()) return fail(why, "checkpoint scan incomplete");

  std::vector<WOscillationRow> table = w_oscillation_table(6);
  if (table.size() != 6) return fail(why, "expected six oscillation rows");
  if (table[0].low_ratio != R(2, 13) || table[0].high_ratio != R(121, 127))
    return fail(why, "first oscillation row off");
  if (table[1].low_ratio != R(242, 65533))
    return fail(why, "second low node off");
  if (table[2].low_ratio !=
      R(BigInt("4294902002"), (BigInt(1) << 64) - 3))
    return fail(why, "third low node off");
  for (const WOscillationRow& row : table)
    if (!(row.high_ratio >= R(95, 100)))
      return fail(why, "a high node fell below 0.95");
  for (std::size_t j = 1; j < table.size(); ++j) {
    if (!(table[j].low_ratio < table[j - 1].low_ratio))
      return fail(why, "low envelope not strictly falling");
    if (!(table[j].high_ratio > table[j - 1].high_ratio))
      return fail(why, "high envelope not strictly rising");
    if (!(table[j].one_minus_high < table[j - 1].one_minus_high))
      return fail(why, "gap to 1 not shrinking");
  }
  if (!(table.back().low_ratio < R(1, 1000)) ||
      !(table.back().high_ratio > R(999, 1000)))
    return fail(why, "envelope has not spread past [0.001, 0.999]");
  return true;
}

// 8. Multiplicative stage sets: the enumerated size matches (n+1)^n, and the
//    share of even elements is exactly n/(n+1).
bool crit_pn(std::string& why) {
  for (int n = 0; n <= 5; ++n) {
    std::vector<BigInt> pn = generate_pn(n);
    BigInt expect = 1;
    for (int i = 0; i < n; ++i) expect *= (n + 1);
    if (BigInt(static_cast<long long>(pn.size())) != expect ||
        pn_size(n) != expect)
      return fail(why, "stage size wrong at n = " + std::to_string(n));
    if (n == 0) continue;
    long long evens = 0;
    for (const BigInt& x : pn)
      if (x % 2 == 0) ++evens;
    if (R(BigInt(evens), BigInt(static_cast<long long>(pn.size()))) !=
        R(n, n + 1))
      return fail(why, "even density wrong at n = " + std::to_string(n));
    IntegerSet evens_set = make_residue(2, 0);
    if (multiplicative_density(evens_set, n) != R(n, n + 1))
      return fail(why, "density routine disagrees at n = " + std::to_string(n));
  }
  return true;
}

// 9. Guess-the-bigger-integer: every finite-support strategy is beaten to -1
//    by the reply just past its support, yet the order-of-averaging report
//    hands +1 to whichever side integrates second.
bool crit_wald(std::string& why) {
  InstanceRng rng(90909);
  for (int i = 0; i < 100; ++i) {
    FiniteSupportStrategy p = random_finite_support_strategy(rng);
    WaldResponse best = wald_best_response(p);
    if (best.payoff != R(-1))
      return fail(why, "a finite-support strategy avoided payoff -1");
    if (best.reply != p.max_support() + 1)
      return fail(why, "best reply is not just past the support");
    if (wald_expected_payoff(p, best.reply) != R(-1))
      return fail(why, "recomputed expectation disagrees");
  }
  auto f = [](long long x, long long y) { return wald_payoff(x, y); };
  SideMeasure mu = SideMeasure::averaging(AveragingSequence::n_interval(0));
  IteratedReport xi = iterated_asymptotic_integral(f, mu, mu, SumOrder::x_inner);
  IteratedReport yi = iterated_asymptotic_integral(f, mu, mu, SumOrder::y_inner);
  if (!xi.decided || xi.value != R(1))
    return fail(why, "x-inner averaging did not settle at +1");
  if (!yi.decided || yi.value != R(-1))
    return fail(why, "y-inner averaging did not settle at -1");
  if (xi.outer.samples.empty() || xi.inner_stages == 0)
    return fail(why, "report carries no stage evidence");
  return true;
}

// 10. Sign-of-the-sum demo on even numbers of opposite signs: the iterated
//     averages exist in both orders and differ (1 versus 0), exactly.
bool crit_parity_exchange(std::string& why) {
  auto f = [](long long x, long long y) -> long long {
    long long z = x + y;
    if (z <= 0) return 0;
    return z % 2 == 0 ? 1 : -1;
  };
  SideMeasure mu = SideMeasure::averaging(AveragingSequence::pos_even());
  SideMeasure nu = SideMeasure::averaging(AveragingSequence::neg_even());
  IteratedReport xi = iterated_asymptotic_integral(f, mu, nu, SumOrder::x_inner);
  IteratedReport yi = iterated_asymptotic_integral(f, mu, nu, SumOrder::y_inner);
  if (!xi.decided || !xi.exact || xi.value != R(1))
    return fail(why, "x-inner order is not exactly 1");
  if (!yi.decided || !yi.exact || yi.value != R(0))
    return fail(why, "y-inner order is not exactly 0");
  return true;
}

// 11. Random commutative structures always carry exactly one invariant
//     measure, and it is finitely additive: disjoint unions add, and removing
//     a nested part subtracts.
bool crit_commutative_additivity(std::string& why) {
  InstanceRng rng(91111);
  for (int i = 0; i < 100; ++i) {
    FiniteSemigroup s = random_commutative_semigroup(rng, 10);
    InvariantMeasurePolytope poly = invariant_measures(s);
    if (poly.status != PolytopeStatus::nonempty || !poly.unique)
      return fail(why, "commutative structure lacked a unique measure");
    const ProbabilityVector& m = poly.extreme_points.at(0);
    const int n = s.size();
    auto mass = [&](const Subset& w) {
      R total(0);
      for (int x = 0; x < n; ++x)
        if (w.contains(x)) total += m[x];
      return total;
    };
    auto [a, b] = random_disjoint_pair(rng, n);
    Subset u = a.set_union(b);
    if (mass(u) != mass(a) + mass(b))
      return fail(why, "disjoint union did not add");
    auto [inner, outer] = random_nested_pair(rng, n);
    Subset diff = outer.set_minus(inner);
    if (mass(diff) != mass(outer) - mass(inner))
      return fail(why, "nested difference did not subtract");
    // The same additions phrased through the payoff bounds must agree.
    ImBounds bu = im_bounds(s, PayoffFunction::characteristic(u));
    if (bu.lower != bu.upper || bu.lower != mass(u))
      return fail(why, "payoff bounds disagree with the point measure");
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"cyclic-group games are worth the mean payoff, uniform play optimal", 10.0,
       crit_cyclic_mean},
      {"residue-class games on the 6-cycle are worth exactly 1/k", 1.0,
       crit_residue_values},
      {"min-chains: point mass at the bottom, value = payoff there", 1.0,
       crit_min_chain},
      {"one-sided structures: empty polytope with a verified certificate", 1.0,
       crit_no_measure},
      {"every k-block tile of a cyclic group gets measure exactly 1/k", 5.0,
       crit_tile_law},
      {"1000 finite games: iterated sums agree in both orders", 10.0,
       crit_finite_fubini},
      {"block-set counts match brute force to 1e6; envelope widens", 10.0,
       crit_wset},
      {"multiplicative stages: size (n+1)^n, even share n/(n+1)", 30.0,
       crit_pn},
      {"bigger-integer game: -1 against every support, +-1 by order", 5.0,
       crit_wald},
      {"sign-of-sum demo: orders settle at 1 and 0, exactly", 1.0,
       crit_parity_exchange},
      {"random commutative structures: unique, finitely additive measure", 30.0,
       crit_commutative_additivity},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string why;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && elapsed > c.budget_s) {
      ok = false;
      why = "over budget";
    }
    std::printf("[%s] %02zu %-68s (%.2fs / budget %.0fs)%s%s\n",
                ok ? "PASS" : "FAIL", i + 1, c.name.c_str(), elapsed,
                c.budget_s, why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
