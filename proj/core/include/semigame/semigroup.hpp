#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "semigame/errors.hpp"

namespace semigame {

// A subset of {0..n-1}, used both for winning sets and for tile checks.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe) : mask_(universe, false) {}
  static Subset from_indices(int universe, const std::vector<int>& indices);

  int universe() const { return static_cast<int>(mask_.size()); }
  int count() const;
  bool contains(int i) const { return mask_[i]; }
  void add(int i) { mask_[i] = true; }

  Subset complement() const;
  Subset set_union(const Subset& other) const;
  Subset set_minus(const Subset& other) const;
  bool disjoint_with(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;
  std::vector<int> indices() const;

  bool operator==(const Subset&) const = default;

 private:
  std::vector<bool> mask_;
};

// A finite binary structure given by its Cayley table. Construction always
// runs the closure check and the full n^3 associativity scan; whether an
// associativity violation is a rejection or just recorded depends on the
// require_associative flag (magma mode keeps the table and clears the flag).
class FiniteSemigroup {
 public:
  static FiniteSemigroup validate(const std::vector<std::vector<long long>>& raw_table,
                                  bool require_associative = true,
                                  std::vector<std::string> labels = {});

  int size() const { return n_; }
  int op(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  bool is_associative() const { return associative_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int i) const { return labels_[i]; }

  // The violating triple found by the scan, if any (magma mode only).
  std::optional<std::tuple<int, int, int>> associativity_witness() const { return witness_; }

  std::vector<std::vector<int>> table() const;

 private:
  FiniteSemigroup() = default;
  int n_ = 0;
  std::vector<int> table_;
  bool associative_ = true;
  std::optional<std::tuple<int, int, int>> witness_;
  std::vector<std::string> labels_;
};

// Standard constructions. All return validated structures.
FiniteSemigroup make_cyclic_group(int n);                // x*y = (x+y) mod n
FiniteSemigroup make_left_zero(int n);                   // x*y = x
FiniteSemigroup make_right_zero(int n);                  // x*y = y
FiniteSemigroup make_min_chain(int n);                   // x*y = min(x,y)
FiniteSemigroup make_null_semigroup(int n);              // x*y = 0
FiniteSemigroup make_monogenic(int index, int period);   // a^(m+r) = a^m
FiniteSemigroup make_rps();                              // rock-paper-scissors magma
FiniteSemigroup make_direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b);

struct TranslationMaps {
  // left[s][x] = s*x, right[s][x] = x*s
  std::vector<std::vector<int>> left;
  std::vector<std::vector<int>> right;
};
TranslationMaps translation_maps(const FiniteSemigroup& s);

// Does {t*W : t in translates} partition S under left translation?
struct TileCheck {
  bool ok = false;
  int k = 0;
  std::optional<int> uncovered;                      // element missed by the union
  std::optional<std::tuple<int, int, int>> overlap;  // (i, j, element) with i<j
};
TileCheck verify_tile(const FiniteSemigroup& s, const Subset& w,
                      const std::vector<int>& translates);

}  // namespace semigame
