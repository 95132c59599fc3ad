#include <vector>

#include "doctest.h"
#include "semigame/errors.hpp"
#include "semigame/pn.hpp"

using namespace semigame;

TEST_CASE("small multiplicative stages are exactly right") {
  CHECK(generate_pn(1) == std::vector<BigInt>{1, 2});
  CHECK(generate_pn(2) == std::vector<BigInt>{1, 2, 3, 4, 6, 9, 12, 18, 36});
}

TEST_CASE("stage sizes follow the closed form (n+1)^n") {
  CHECK(pn_size(1) == 2);
  CHECK(pn_size(2) == 9);
  CHECK(pn_size(3) == 64);
  CHECK(pn_size(4) == 625);
  CHECK(pn_size(5) == 7776);
  for (int n = 1; n <= 5; ++n) {
    std::vector<BigInt> elems = generate_pn(n);
    CHECK(BigInt(elems.size()) == pn_size(n));
    // Sorted and duplicate-free by construction.
    for (std::size_t i = 1; i < elems.size(); ++i) CHECK(elems[i - 1] < elems[i]);
  }
}

TEST_CASE("density of evens in stage n is n/(n+1)") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(multiplicative_density(make_evens(), n) == Rational(n, n + 1));
  }
}

TEST_CASE("density of multiples of six is (n/(n+1))^2 once both primes exist") {
  for (int n = 2; n <= 4; ++n) {
    Rational expected = Rational(n, n + 1) * Rational(n, n + 1);
    CHECK(multiplicative_density(make_residue(6, 0), n) == expected);
  }
}

TEST_CASE("densities in a fixed stage are finitely additive") {
  // 1 mod 3 and 2 mod 3 partition the non-multiples of 3.
  for (int n = 1; n <= 4; ++n) {
    Rational d0 = multiplicative_density(make_residue(3, 0), n);
    Rational d1 = multiplicative_density(make_residue(3, 1), n);
    Rational d2 = multiplicative_density(make_residue(3, 2), n);
    CHECK(d0 + d1 + d2 == Rational(1));
  }
}

TEST_CASE("leading-digit shares carry the estimate label") {
  BenfordEstimate est = benford_density_estimate({1, 2, 3}, 2);
  CHECK(est.n == 2);
  CHECK(est.total == 9);
  CHECK(est.hits == 6);  // 1, 2, 3, 12, 18, 36
  CHECK(est.ratio == Rational(2, 3));
  CHECK(est.label == "ESTIMATE");

  BenfordEstimate one = benford_density_estimate({1}, 2);
  CHECK(one.hits == 3);  // 1, 12, 18
  CHECK(one.ratio == Rational(1, 3));
}

TEST_CASE("the stage cap is enforced") {
  CHECK_THROWS_AS(generate_pn(7), CapExceededError);
  CHECK_THROWS_AS(generate_pn(3, 2), CapExceededError);
  CHECK_THROWS_AS(multiplicative_density(make_evens(), 9), CapExceededError);
  CHECK_THROWS_AS(generate_pn(-1), BadParamError);
  // The zeroth stage is the empty product: just {1}.
  CHECK(generate_pn(0) == std::vector<BigInt>{1});
  CHECK(pn_size(0) == 1);
}
