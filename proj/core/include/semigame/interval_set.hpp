#pragma once

#include <utility>
#include <vector>

#include "semigame/rational.hpp"

namespace semigame {

// A union of disjoint closed integer intervals [lo, hi] with big-integer
// endpoints, kept sorted and merged; membership and counting are exact.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet from_intervals(std::vector<std::pair<BigInt, BigInt>> parts);

  void add(BigInt lo, BigInt hi);  // merges with neighbours as needed

  bool empty() const { return parts_.empty(); }
  bool contains(const BigInt& x) const;
  // |set ∩ [lo, hi]| exactly.
  BigInt count_in(const BigInt& lo, const BigInt& hi) const;
  BigInt total_count() const;

  const std::vector<std::pair<BigInt, BigInt>>& intervals() const { return parts_; }

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<std::pair<BigInt, BigInt>> parts_;  // sorted, disjoint, non-adjacent
};

}  // namespace semigame
