#include "semigame/pn.hpp"

#include <algorithm>

#include "semigame/errors.hpp"

namespace semigame {

namespace {

constexpr int kFirstPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

}  // namespace

BigInt pn_size(int n) {
  if (n < 0) throw BadParamError("P_n index must be nonnegative");
  return boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n));
}

std::vector<BigInt> generate_pn(int n, int cap) {
  if (n < 0) throw BadParamError("P_n index must be nonnegative");
  if (n > cap) {
    throw CapExceededError("P_" + std::to_string(n) + " exceeds the enumeration cap (" +
                           std::to_string(cap) + ")");
  }
  if (n > static_cast<int>(std::size(kFirstPrimes))) {
    throw CapExceededError("P_n enumeration supports n up to " +
                           std::to_string(std::size(kFirstPrimes)));
  }
  std::vector<BigInt> elements{BigInt(1)};
  for (int i = 0; i < n; ++i) {
    const int p = kFirstPrimes[i];
    std::vector<BigInt> extended;
    extended.reserve(elements.size() * (n + 1));
    for (const BigInt& x : elements) {
      BigInt power = x;
      extended.push_back(x);
      for (int e = 1; e <= n; ++e) {
        power *= p;
        extended.push_back(power);
      }
    }
    elements = std::move(extended);
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

Rational multiplicative_density(const IntegerSet& a, int n, int cap) {
  std::vector<BigInt> elements = generate_pn(n, cap);
  BigInt hits = 0;
  for (const BigInt& x : elements) {
    if (set_contains(a, x)) ++hits;
  }
  return Rational(hits, BigInt(elements.size()));
}

BenfordEstimate benford_density_estimate(const std::set<int>& digits, int n, int cap) {
  IntegerSet target = make_benford(digits);
  std::vector<BigInt> elements = generate_pn(n, cap);
  BenfordEstimate est;
  est.n = n;
  est.total = static_cast<long long>(elements.size());
  est.hits = 0;
  for (const BigInt& x : elements) {
    if (set_contains(target, x)) ++est.hits;
  }
  est.ratio = Rational(est.hits, est.total);
  return est;
}

}  // namespace semigame
