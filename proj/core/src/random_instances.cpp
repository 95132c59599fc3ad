#include "semigame/random_instances.hpp"

#include <algorithm>
#include <set>

#include "semigame/errors.hpp"

namespace semigame {

long long InstanceRng::uniform(long long lo, long long hi) {
  if (lo > hi) throw BadParamError("empty range for uniform draw");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(raw() % span);
}

Rational InstanceRng::rational_in_unit(long long max_den) {
  long long den = uniform(1, max_den);
  return Rational(uniform(0, den), den);
}

Rational InstanceRng::rational_in_pm1(long long max_den) {
  long long den = uniform(1, max_den);
  return Rational(uniform(-den, den), den);
}

namespace {

FiniteSemigroup random_amenable_factor(InstanceRng& rng, int max_size) {
  int n = static_cast<int>(rng.uniform(1, std::max(1, max_size)));
  switch (rng.uniform(0, 3)) {
    case 0: return make_cyclic_group(std::max(1, n));
    case 1: return make_min_chain(std::max(1, n));
    case 2: return make_null_semigroup(std::max(1, n));
    default: {
      int period = static_cast<int>(rng.uniform(1, std::max(1, n)));
      int index = std::max(1, n - period + 1);
      return make_monogenic(index, period);
    }
  }
}

}  // namespace

FiniteSemigroup random_semigroup(InstanceRng& rng, int max_size) {
  int n = static_cast<int>(rng.uniform(2, std::max(2, max_size)));
  switch (rng.uniform(0, 5)) {
    case 0: return make_left_zero(n);
    case 1: return make_right_zero(n);
    default: return random_commutative_semigroup(rng, n);
  }
}

FiniteSemigroup random_commutative_semigroup(InstanceRng& rng, int max_size) {
  if (rng.uniform(0, 3) == 0 && max_size >= 4) {
    int a = static_cast<int>(rng.uniform(2, max_size / 2));
    int b = std::max(2, max_size / a);
    FiniteSemigroup left = random_amenable_factor(rng, a);
    FiniteSemigroup right = random_amenable_factor(rng, b);
    return make_direct_product(left, right);
  }
  return random_amenable_factor(rng, max_size);
}

PayoffFunction random_payoff(InstanceRng& rng, int n) {
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values.push_back(rng.rational_in_pm1());
  return PayoffFunction(std::move(values));
}

ProbabilityVector random_probability_vector(InstanceRng& rng, int n) {
  std::vector<long long> weights(static_cast<std::size_t>(n));
  long long total = 0;
  for (auto& w : weights) {
    w = rng.uniform(0, 9);
    total += w;
  }
  if (total == 0) {
    weights[static_cast<std::size_t>(rng.uniform(0, n - 1))] = 1;
    total = 1;
  }
  std::vector<Rational> p;
  p.reserve(weights.size());
  for (long long w : weights) p.emplace_back(w, total);
  return ProbabilityVector(std::move(p));
}

Subset random_subset(InstanceRng& rng, int universe) {
  Subset s(universe);
  for (int i = 0; i < universe; ++i) {
    if (rng.coin()) s.add(i);
  }
  return s;
}

std::pair<Subset, Subset> random_disjoint_pair(InstanceRng& rng, int universe) {
  Subset a(universe), b(universe);
  for (int i = 0; i < universe; ++i) {
    switch (rng.uniform(0, 2)) {
      case 1: a.add(i); break;
      case 2: b.add(i); break;
      default: break;
    }
  }
  return {std::move(a), std::move(b)};
}

std::pair<Subset, Subset> random_nested_pair(InstanceRng& rng, int universe) {
  Subset a(universe), b(universe);
  for (int i = 0; i < universe; ++i) {
    switch (rng.uniform(0, 2)) {
      case 1: b.add(i); break;
      case 2: a.add(i); b.add(i); break;
      default: break;
    }
  }
  return {std::move(a), std::move(b)};
}

FiniteSupportStrategy random_finite_support_strategy(InstanceRng& rng,
                                                     int max_atoms,
                                                     long long max_point) {
  int k = static_cast<int>(rng.uniform(1, max_atoms));
  std::set<long long> points;
  while (static_cast<int>(points.size()) < k) {
    points.insert(rng.uniform(0, max_point));
  }
  std::vector<long long> weights(points.size());
  long long total = 0;
  for (auto& w : weights) {
    w = rng.uniform(1, 9);
    total += w;
  }
  std::vector<std::pair<BigInt, Rational>> atoms;
  std::size_t i = 0;
  for (long long pt : points) {
    atoms.emplace_back(pt, Rational(weights[i++], total));
  }
  return FiniteSupportStrategy(std::move(atoms));
}

}  // namespace semigame
