// Randomized invariants over generated instances.  Seeds are fixed so every
// run replays the same instances.

#include <vector>

#include "doctest.h"
#include "semigame/game.hpp"
#include "semigame/measures.hpp"
#include "semigame/random_instances.hpp"
#include "semigame/rational.hpp"
#include "semigame/wset.hpp"

using namespace semigame;

namespace {

bool invariant_by_table(const FiniteSemigroup& s, const ProbabilityVector& m) {
  for (int t = 0; t < s.size(); ++t) {
    for (int i = 0; i < s.size(); ++i) {
      Rational left_mass(0), right_mass(0);
      for (int x = 0; x < s.size(); ++x) {
        if (s.op(t, x) == i) left_mass += m[x];
        if (s.op(x, t) == i) right_mass += m[x];
      }
      if (left_mass != m[i] || right_mass != m[i]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("random structured tables: the polytope is empty or a single point") {
  InstanceRng rng(2024);
  int nonempty_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    FiniteSemigroup s = random_semigroup(rng);
    InvariantMeasurePolytope poly = invariant_measures(s);
    if (poly.status == PolytopeStatus::empty) {
      CHECK(lp::verify_farkas(invariance_feasibility_lp(poly.system), poly.farkas));
      continue;
    }
    ++nonempty_count;
    CHECK(poly.unique);
    REQUIRE(poly.extreme_points.size() == 1);
    // Independent invariance check, straight off the table.
    CHECK(invariant_by_table(s, poly.extreme_points[0]));
  }
  CHECK(nonempty_count > 10);  // the generator mixes both kinds
}

TEST_CASE("random commutative tables always carry a unique invariant measure") {
  InstanceRng rng(515151);
  for (int trial = 0; trial < 40; ++trial) {
    FiniteSemigroup s = random_commutative_semigroup(rng);
    InvariantMeasurePolytope poly = invariant_measures(s);
    REQUIRE(poly.status == PolytopeStatus::nonempty);
    CHECK(poly.unique);
    CHECK(invariant_by_table(s, poly.extreme_points[0]));
  }
}

TEST_CASE("measure of a disjoint union is the sum of the parts") {
  InstanceRng rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteSemigroup s = random_commutative_semigroup(rng);
    auto ab = random_disjoint_pair(rng, s.size());
    PayoffFunction fa = PayoffFunction::characteristic(ab.first);
    PayoffFunction fb = PayoffFunction::characteristic(ab.second);
    PayoffFunction fu = PayoffFunction::characteristic(ab.first.set_union(ab.second));
    ImBounds ba = im_bounds(s, fa), bb = im_bounds(s, fb), bu = im_bounds(s, fu);
    // Unique measure: both ends coincide, and masses add.
    CHECK(ba.lower == ba.upper);
    CHECK(bu.lower == ba.lower + bb.lower);
  }
}

TEST_CASE("measure of a set difference is the difference of measures") {
  InstanceRng rng(31415);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteSemigroup s = random_commutative_semigroup(rng);
    auto ab = random_nested_pair(rng, s.size());  // first inside second
    PayoffFunction fa = PayoffFunction::characteristic(ab.first);
    PayoffFunction fb = PayoffFunction::characteristic(ab.second);
    PayoffFunction fd = PayoffFunction::characteristic(ab.second.set_minus(ab.first));
    CHECK(im_bounds(s, fd).lower == im_bounds(s, fb).lower - im_bounds(s, fa).lower);
  }
}

TEST_CASE("iterated matrix sums never depend on the order") {
  InstanceRng rng(606060);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = static_cast<int>(rng.uniform(1, 6));
    int cols = static_cast<int>(rng.uniform(1, 6));
    PayoffMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational_in_pm1();
    ProbabilityVector p = random_probability_vector(rng, rows);
    ProbabilityVector q = random_probability_vector(rng, cols);
    CHECK(iterated_payoff(m, p, q, SumOrder::x_inner) ==
          iterated_payoff(m, p, q, SumOrder::y_inner));
  }
}

TEST_CASE("generated payoffs and mixes satisfy their contracts") {
  InstanceRng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 9));
    PayoffFunction f = random_payoff(rng, n);
    for (int i = 0; i < n; ++i) {
      CHECK(f[i] >= Rational(-1));
      CHECK(f[i] <= Rational(1));
    }
    ProbabilityVector p = random_probability_vector(rng, n);
    Rational total(0);
    for (int i = 0; i < n; ++i) {
      CHECK(p[i] >= 0);
      total += p[i];
    }
    CHECK(total == Rational(1));
  }
}

TEST_CASE("subset pair generators honor disjointness and nesting") {
  InstanceRng rng(4711);
  for (int trial = 0; trial < 50; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 12));
    auto dis = random_disjoint_pair(rng, n);
    CHECK(dis.first.disjoint_with(dis.second));
    auto nest = random_nested_pair(rng, n);
    CHECK(nest.first.is_subset_of(nest.second));
  }
}

TEST_CASE("tiles of cyclic groups always measure 1/k") {
  for (int n = 2; n <= 12; ++n) {
    FiniteSemigroup s = make_cyclic_group(n);
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      const int block = n / k;
      std::vector<int> w_indices, translates;
      for (int i = 0; i < block; ++i) w_indices.push_back(i);
      for (int j = 0; j < k; ++j) translates.push_back(j * block);
      TileMeasureReport rep =
          tile_measure_check(s, Subset::from_indices(n, w_indices), translates);
      CHECK(rep.all_match);
      CHECK(rep.expected == Rational(1, k));
      CHECK(rep.bounds.lower == Rational(1, k));
      CHECK(rep.bounds.upper == Rational(1, k));
    }
  }
}

TEST_CASE("solver certificates are internally consistent on random games") {
  InstanceRng rng(246810);
  for (int trial = 0; trial < 25; ++trial) {
    FiniteSemigroup s = random_commutative_semigroup(rng, 6);
    PayoffFunction f = random_payoff(rng, s.size());
    PayoffMatrix m = build_payoff_matrix(s, f);
    GameSolution sol = solve_zero_sum(m);
    CHECK(sol.row_guarantee == sol.value);
    CHECK(sol.col_guarantee == sol.value);
    // Recompute the guarantees from scratch.
    CHECK(best_response(m, sol.p_star, Side::column).payoff == sol.value);
    CHECK(best_response(m, sol.q_star, Side::row).payoff == sol.value);
  }
}

TEST_CASE("the full cross-verification holds on random commutative instances") {
  InstanceRng rng(135791);
  for (int trial = 0; trial < 15; ++trial) {
    FiniteSemigroup s = random_commutative_semigroup(rng, 8);
    PayoffFunction f = random_payoff(rng, s.size());
    TheoremReport rep = verify_main_theorem(s, f);
    REQUIRE(rep.applicable);
    CHECK(rep.all_hold);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].mean == rep.solution.value);
  }
}

TEST_CASE("format/parse round trip on random rationals") {
  InstanceRng rng(22222);
  for (int trial = 0; trial < 200; ++trial) {
    Rational q(rng.uniform(-1'000'000, 1'000'000), rng.uniform(1, 999'983));
    CHECK(parse_rational(format_rational(q)) == q);
  }
}

TEST_CASE("closed-form block counts equal interval totals at random points") {
  InstanceRng rng(7777);
  for (int trial = 0; trial < 200; ++trial) {
    BigInt n = rng.uniform(2, 4'000'000);
    CHECK(w_count(n) == w_blocks_up_to(n).total_count());
  }
}
