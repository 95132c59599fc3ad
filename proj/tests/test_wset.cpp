#include <vector>

#include "doctest.h"
#include "semigame/errors.hpp"
#include "semigame/interval_set.hpp"
#include "semigame/wset.hpp"

using namespace semigame;

namespace {

// Independent membership test: x >= 2 and floor(log2(floor(log2 x))) even,
// computed with plain shift loops.
bool w_member_brute(unsigned long long x) {
  if (x < 2) return false;
  int log1 = -1;
  for (unsigned long long v = x; v > 0; v >>= 1) ++log1;
  int log2v = -1;
  for (int v = log1; v > 0; v >>= 1) ++log2v;
  return log2v % 2 == 0;
}

}  // namespace

TEST_CASE("interval sets merge, count, and look up exactly") {
  IntervalSet s;
  s.add(10, 20);
  s.add(1, 3);
  s.add(21, 25);  // adjacent to [10,20]: merges
  s.add(5, 5);
  REQUIRE(s.intervals().size() == 3);
  CHECK(s.intervals()[0] == std::pair<BigInt, BigInt>(1, 3));
  CHECK(s.intervals()[1] == std::pair<BigInt, BigInt>(5, 5));
  CHECK(s.intervals()[2] == std::pair<BigInt, BigInt>(10, 25));
  CHECK(s.contains(2));
  CHECK(!s.contains(4));
  CHECK(s.contains(25));
  CHECK(!s.contains(26));
  CHECK(s.count_in(0, 100) == s.total_count());
  CHECK(s.total_count() == 3 + 1 + 16);
  CHECK(s.count_in(3, 11) == 1 + 1 + 2);  // {3}, {5}, {10,11}
  CHECK(s.count_in(26, 30) == 0);

  IntervalSet overlapping;
  overlapping.add(1, 10);
  overlapping.add(5, 20);
  REQUIRE(overlapping.intervals().size() == 1);
  CHECK(overlapping.total_count() == 20);
}

TEST_CASE("block membership matches the brute-force logarithm test") {
  // Sweep across the [16,255] and [65536,...] boundaries.
  for (unsigned long long x = 0; x <= 70000; ++x) {
    CHECK(w_contains(BigInt(x)) == w_member_brute(x));
  }
  // Spot checks around the block edges.
  CHECK(!w_contains(1));
  CHECK(w_contains(2));
  CHECK(w_contains(3));
  CHECK(!w_contains(4));
  CHECK(!w_contains(15));
  CHECK(w_contains(16));
  CHECK(w_contains(255));
  CHECK(!w_contains(256));
  CHECK(!w_contains(65535));
  CHECK(w_contains(65536));
  BigInt two32 = BigInt(1) << 32;
  CHECK(w_contains(two32 - 1));
  CHECK(!w_contains(two32));
  BigInt two64 = BigInt(1) << 64;
  CHECK(!w_contains(two64 - 1));
  CHECK(w_contains(two64));
  BigInt two128 = BigInt(1) << 128;
  CHECK(w_contains(two128 - 1));
  CHECK(!w_contains(two128));
}

TEST_CASE("block extraction clips at the bound") {
  IntervalSet b = w_blocks_up_to(300);
  REQUIRE(b.intervals().size() == 2);
  CHECK(b.intervals()[0] == std::pair<BigInt, BigInt>(2, 3));
  CHECK(b.intervals()[1] == std::pair<BigInt, BigInt>(16, 255));

  IntervalSet clipped = w_blocks_up_to(100);
  REQUIRE(clipped.intervals().size() == 2);
  CHECK(clipped.intervals()[1] == std::pair<BigInt, BigInt>(16, 100));
  CHECK(clipped.total_count() == 2 + 85);
}

TEST_CASE("closed-form counts hit the known landmarks") {
  CHECK(w_count(2) == 1);
  CHECK(w_count(3) == 2);
  CHECK(w_count(15) == 2);
  CHECK(w_count(16) == 3);
  CHECK(w_count(255) == 242);
  CHECK(w_count(256) == 242);
  CHECK(w_count(65535) == 242);
  CHECK(w_count(65536) == 243);
  BigInt two32 = BigInt(1) << 32;
  CHECK(w_count(two32 - 1) == BigInt("4294902002"));
  CHECK(w_count(two32) == BigInt("4294902002"));
  BigInt two64 = BigInt(1) << 64;
  CHECK(w_count(two64 - 1) == BigInt("4294902002"));
  CHECK(w_count(two64) == BigInt("4294902003"));

  // Closed form vs direct loop on a modest prefix.
  BigInt running(0);
  for (unsigned long long x = 2; x <= 5000; ++x) {
    if (w_member_brute(x)) ++running;
    CHECK(w_count(BigInt(x)) == running);
  }
}

TEST_CASE("density ratio at the oscillation nodes") {
  CHECK(w_density_ratio(15) == Rational(2, 13));
  CHECK(w_density_ratio(256) == Rational(121, 127));
  CHECK(w_density_ratio(65535) == Rational(242, 65533));
  BigInt two32 = BigInt(1) << 32;
  CHECK(w_density_ratio(two32) ==
        Rational(BigInt("4294902002"), two32 - 2));
}

TEST_CASE("the oscillation table swings between 0 and 1") {
  std::vector<WOscillationRow> rows = w_oscillation_table(6);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].j == 1);
  CHECK(rows[0].low_n == 15);
  CHECK(rows[0].low_ratio == Rational(2, 13));
  CHECK(rows[0].high_n == 256);
  CHECK(rows[0].high_ratio == Rational(121, 127));
  CHECK(rows[1].low_n == 65535);
  CHECK(rows[1].low_ratio == Rational(242, 65533));

  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].low_ratio < Rational(1, 4));
    CHECK(rows[i].high_ratio > Rational(3, 4));
    CHECK(rows[i].one_minus_high == 1 - rows[i].high_ratio);
    if (i > 0) {
      CHECK(rows[i].low_ratio < rows[i - 1].low_ratio);
      CHECK(rows[i].high_ratio > rows[i - 1].high_ratio);
      CHECK(rows[i].one_minus_high < rows[i - 1].one_minus_high);
    }
  }
  // Low nodes sink below the first one from the second row on.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].low_ratio < Rational(2, 13));
  }

  CHECK(!w_table_note().empty());
  CHECK_THROWS_AS(w_oscillation_table(7), CapExceededError);
}

TEST_CASE("ratio domain guards") {
  CHECK_THROWS_AS(w_density_ratio(2), BadParamError);
  CHECK_THROWS_AS(w_count(1), BadParamError);
}
