#include "semigame/interval_set.hpp"

#include <algorithm>

#include "semigame/errors.hpp"

namespace semigame {

IntervalSet IntervalSet::from_intervals(std::vector<std::pair<BigInt, BigInt>> parts) {
  IntervalSet set;
  for (auto& [lo, hi] : parts) set.add(std::move(lo), std::move(hi));
  return set;
}

void IntervalSet::add(BigInt lo, BigInt hi) {
  if (lo > hi) {
    throw BadParamError("interval lower endpoint exceeds upper endpoint");
  }
  std::vector<std::pair<BigInt, BigInt>> merged;
  merged.reserve(parts_.size() + 1);
  std::size_t i = 0;
  // Intervals strictly left of [lo-1, ...] stay; adjacency (hi + 1 == lo) merges.
  while (i < parts_.size() && parts_[i].second + 1 < lo) merged.push_back(parts_[i++]);
  while (i < parts_.size() && parts_[i].first <= hi + 1) {
    lo = std::min(lo, parts_[i].first);
    hi = std::max(hi, parts_[i].second);
    ++i;
  }
  merged.emplace_back(std::move(lo), std::move(hi));
  while (i < parts_.size()) merged.push_back(parts_[i++]);
  parts_ = std::move(merged);
}

bool IntervalSet::contains(const BigInt& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const BigInt& v, const std::pair<BigInt, BigInt>& p) {
                               return v < p.first;
                             });
  if (it == parts_.begin()) return false;
  --it;
  return x <= it->second;
}

BigInt IntervalSet::count_in(const BigInt& lo, const BigInt& hi) const {
  BigInt total = 0;
  if (lo > hi) return total;
  for (const auto& [a, b] : parts_) {
    if (b < lo) continue;
    if (a > hi) break;
    const BigInt& left = a > lo ? a : lo;
    const BigInt& right = b < hi ? b : hi;
    total += right - left + 1;
  }
  return total;
}

BigInt IntervalSet::total_count() const {
  BigInt total = 0;
  for (const auto& [a, b] : parts_) total += b - a + 1;
  return total;
}

}  // namespace semigame
