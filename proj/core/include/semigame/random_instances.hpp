#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "semigame/payoff.hpp"
#include "semigame/semigroup.hpp"
#include "semigame/wald.hpp"

namespace semigame {

// Deterministic instance generator: identical seeds replay identical
// instances on every platform (raw engine draws only; the std::uniform_*
// distributions are implementation-defined and are deliberately avoided).
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  long long uniform(long long lo, long long hi);  // inclusive bounds
  bool coin() { return (raw() & 1) != 0; }
  Rational rational_in_unit(long long max_den = 12);  // in [0, 1]
  Rational rational_in_pm1(long long max_den = 12);   // in [-1, 1]

 private:
  std::mt19937_64 engine_;
};

// A random associative table drawn from structured families (uniformly random
// tables are almost never associative); may be non-commutative or lack an
// invariant measure (left/right-zero members).
FiniteSemigroup random_semigroup(InstanceRng& rng, int max_size = 8);

// Commutative by construction, and always carrying at least one invariant
// measure: cyclic groups, min-chains, null semigroups, monogenic semigroups,
// and direct products of those.
FiniteSemigroup random_commutative_semigroup(InstanceRng& rng, int max_size = 12);

PayoffFunction random_payoff(InstanceRng& rng, int n);
ProbabilityVector random_probability_vector(InstanceRng& rng, int n);
Subset random_subset(InstanceRng& rng, int universe);
std::pair<Subset, Subset> random_disjoint_pair(InstanceRng& rng, int universe);
// Nested pair A ⊆ B.
std::pair<Subset, Subset> random_nested_pair(InstanceRng& rng, int universe);

FiniteSupportStrategy random_finite_support_strategy(InstanceRng& rng,
                                                     int max_atoms = 6,
                                                     long long max_point = 50);

}  // namespace semigame
