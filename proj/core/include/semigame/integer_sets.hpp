#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "semigame/interval_set.hpp"
#include "semigame/rational.hpp"

namespace semigame {

// Subsets of the integers used as density targets.  Every kind except
// PredicateSet supports closed-form exact counting along arithmetic
// progressions, which is what lets density stages grow to 2^30 and beyond.

struct FullSet {};

struct ResidueClass {
  BigInt modulus;  // >= 1
  BigInt residue;  // in [0, modulus)
};

struct FiniteIntSet {
  std::vector<BigInt> elements;  // sorted, unique
};

struct WSetTag {};  // the oscillating block set from wset.hpp

struct BenfordSet {
  std::set<int> digits;  // leading decimal digits, subset of {1..9}
};

struct PredicateSet {
  std::function<bool(const BigInt&)> pred;
  std::string name;
};

using IntegerSet =
    std::variant<FullSet, ResidueClass, IntervalSet, FiniteIntSet, WSetTag,
                 BenfordSet, PredicateSet>;

IntegerSet make_residue(BigInt modulus, BigInt residue);  // normalizes the residue
IntegerSet make_finite(std::vector<BigInt> elements);     // sorts, dedupes
IntegerSet make_evens();                                  // residue 0 mod 2
IntegerSet make_benford(std::set<int> digits);

bool set_contains(const IntegerSet& a, const BigInt& x);

// |{i in [0, count) : start + i*step in A}| exactly, or nullopt for
// predicate-defined sets (the caller may fall back to enumeration).
// step must be nonzero; count >= 0.
std::optional<BigInt> count_in_progression(const IntegerSet& a, const BigInt& start,
                                           const BigInt& step, const BigInt& count);

// {x + delta : x in A}; supported for full/residue/interval/finite kinds.
IntegerSet shift_set(const IntegerSet& a, const BigInt& delta);

std::string describe_set(const IntegerSet& a);

// First decimal digit of x >= 1.
int leading_decimal_digit(const BigInt& x);

// floor / ceil division with sign-correct semantics for big integers.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

}  // namespace semigame
