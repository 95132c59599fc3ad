#include <vector>

#include "doctest.h"
#include "semigame/errors.hpp"
#include "semigame/semigroup.hpp"

using namespace semigame;

namespace {

bool commutes(const FiniteSemigroup& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (s.op(x, y) != s.op(y, x)) return false;
  return true;
}

bool associative_scan(const FiniteSemigroup& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      for (int z = 0; z < s.size(); ++z)
        if (s.op(s.op(x, y), z) != s.op(x, s.op(y, z))) return false;
  return true;
}

// a^k in s, generator g, exponents from 1.
int power(const FiniteSemigroup& s, int g, int k) {
  int acc = g;
  for (int i = 1; i < k; ++i) acc = s.op(acc, g);
  return acc;
}

}  // namespace

TEST_CASE("standard constructions have the advertised operations") {
  FiniteSemigroup c6 = make_cyclic_group(6);
  CHECK(c6.size() == 6);
  CHECK(c6.op(4, 5) == 3);
  CHECK(c6.is_associative());
  CHECK(commutes(c6));

  FiniteSemigroup lz = make_left_zero(3);
  FiniteSemigroup rz = make_right_zero(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(lz.op(x, y) == x);
      CHECK(rz.op(x, y) == y);
    }
  CHECK(lz.is_associative());
  CHECK(rz.is_associative());

  FiniteSemigroup chain = make_min_chain(4);
  CHECK(chain.op(2, 3) == 2);
  CHECK(chain.op(0, 3) == 0);
  CHECK(commutes(chain));

  FiniteSemigroup null4 = make_null_semigroup(4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(null4.op(x, y) == 0);
}

TEST_CASE("monogenic semigroup satisfies the index/period law") {
  const int index = 2, period = 3;
  FiniteSemigroup s = make_monogenic(index, period);
  CHECK(s.size() == index + period - 1);
  CHECK(s.is_associative());
  // Powers a^1..a^(index+period-1) are pairwise distinct...
  for (int i = 1; i < index + period; ++i)
    for (int j = i + 1; j < index + period; ++j)
      CHECK(power(s, 0, i) != power(s, 0, j));
  // ...and the defining relation a^(index+period) = a^index holds.
  CHECK(power(s, 0, index + period) == power(s, 0, index));
  // Degenerate cases: pure cycle (index 1) and a single idempotent.
  CHECK(make_monogenic(1, 5).size() == 5);
  CHECK(make_monogenic(1, 1).size() == 1);
  CHECK_THROWS_AS(make_monogenic(0, 3), BadParamError);
}

TEST_CASE("rock-paper-scissors magma is commutative but not associative") {
  FiniteSemigroup rps = make_rps();
  CHECK(rps.size() == 3);
  CHECK(!rps.is_associative());
  CHECK(commutes(rps));
  CHECK(!associative_scan(rps));
  auto w = rps.associativity_witness();
  REQUIRE(w.has_value());
  auto [x, y, z] = *w;
  CHECK(rps.op(rps.op(x, y), z) != rps.op(x, rps.op(y, z)));
  // Each duel: the winner absorbs.
  CHECK(rps.op(0, 1) == 1);
  CHECK(rps.op(1, 2) == 2);
  CHECK(rps.op(0, 2) == 0);
}

TEST_CASE("validate rejects non-closed and non-associative tables") {
  CHECK_THROWS_AS(FiniteSemigroup::validate({{0, 1}, {1, 5}}), NonClosedError);
  CHECK_THROWS_AS(FiniteSemigroup::validate({{0, 1}, {-1, 0}}), NonClosedError);
  // Rock-paper-scissors in strict mode is rejected with a witness.
  std::vector<std::vector<long long>> rps{{0, 1, 0}, {1, 1, 2}, {0, 2, 2}};
  CHECK_THROWS_AS(FiniteSemigroup::validate(rps, true), NonAssociativeError);
  FiniteSemigroup magma = FiniteSemigroup::validate(rps, false);
  CHECK(!magma.is_associative());
  CHECK(magma.associativity_witness().has_value());
  CHECK_THROWS_AS(FiniteSemigroup::validate({}), BadParamError);
}

TEST_CASE("direct product multiplies componentwise") {
  FiniteSemigroup p = make_direct_product(make_cyclic_group(2), make_cyclic_group(3));
  CHECK(p.size() == 6);
  CHECK(p.is_associative());
  CHECK(commutes(p));
  // (i, j) is packed as i*3 + j; check the packing on a sample.
  CHECK(p.op(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);  // (1+1, 2+2) = (0, 1)
  // C2 x C3 is cyclic of order 6: some element has order 6.
  bool found_generator = false;
  for (int g = 0; g < 6 && !found_generator; ++g) {
    std::vector<bool> seen(6, false);
    int acc = g;
    int count = 0;
    while (!seen[acc]) {
      seen[acc] = true;
      ++count;
      acc = p.op(acc, g);
    }
    found_generator = count == 6;
  }
  CHECK(found_generator);
}

TEST_CASE("subsets support the boolean operations") {
  Subset a = Subset::from_indices(6, {0, 1, 2});
  Subset b = Subset::from_indices(6, {2, 3});
  CHECK(a.count() == 3);
  CHECK(a.contains(1));
  CHECK(!a.contains(4));
  CHECK(a.complement().indices() == std::vector<int>{3, 4, 5});
  CHECK(a.set_union(b).indices() == std::vector<int>{0, 1, 2, 3});
  CHECK(a.set_minus(b).indices() == std::vector<int>{0, 1});
  CHECK(!a.disjoint_with(b));
  CHECK(a.disjoint_with(Subset::from_indices(6, {4, 5})));
  CHECK(Subset::from_indices(6, {0, 1}).is_subset_of(a));
  CHECK(!a.is_subset_of(b));
  CHECK_THROWS_AS(Subset::from_indices(3, {3}), BadParamError);
  CHECK_THROWS_AS(Subset::from_indices(3, {-1}), BadParamError);
}

TEST_CASE("translation maps mirror the table") {
  FiniteSemigroup s = make_monogenic(2, 2);
  TranslationMaps maps = translation_maps(s);
  for (int t = 0; t < s.size(); ++t)
    for (int x = 0; x < s.size(); ++x) {
      CHECK(maps.left[t][x] == s.op(t, x));
      CHECK(maps.right[t][x] == s.op(x, t));
    }
}

TEST_CASE("verify_tile accepts exact partitions and reports defects") {
  FiniteSemigroup c6 = make_cyclic_group(6);
  Subset w = Subset::from_indices(6, {0, 1});

  TileCheck ok = verify_tile(c6, w, {0, 2, 4});
  CHECK(ok.ok);
  CHECK(ok.k == 3);
  CHECK(!ok.uncovered.has_value());
  CHECK(!ok.overlap.has_value());

  TileCheck gap = verify_tile(c6, w, {0, 3});
  CHECK(!gap.ok);
  CHECK(gap.uncovered.has_value());
  // 0*W = {0,1}, 3*W = {3,4}: element 2 (and 5) is missed.
  int missed = *gap.uncovered;
  CHECK((missed == 2 || missed == 5));

  const std::vector<int> translates{0, 1, 4};
  TileCheck clash = verify_tile(c6, w, translates);
  CHECK(!clash.ok);
  CHECK(clash.overlap.has_value());
  auto [i, j, e] = *clash.overlap;
  CHECK(i < j);
  // The overlapping element really is in both translates.
  Subset ti(6), tj(6);
  for (int x : w.indices()) {
    ti.add(c6.op(translates[static_cast<std::size_t>(i)], x));
    tj.add(c6.op(translates[static_cast<std::size_t>(j)], x));
  }
  CHECK(ti.contains(e));
  CHECK(tj.contains(e));
}
