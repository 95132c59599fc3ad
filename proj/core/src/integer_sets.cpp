#include "semigame/integer_sets.hpp"

#include <algorithm>

#include "semigame/errors.hpp"
#include "semigame/wset.hpp"

namespace semigame {

namespace {

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

// gcd g = ax + by, g >= 0.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return a < 0 ? BigInt(-a) : a;
  }
  BigInt x1, y1;
  BigInt g = ext_gcd(b, BigInt(a % b), x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Count of i in [0, count) with i ≡ i0 (mod m), m >= 1, i0 in [0, m).
BigInt count_congruent(const BigInt& i0, const BigInt& m, const BigInt& count) {
  if (i0 >= count) return 0;
  return floor_div(count - 1 - i0, m) + 1;
}

BigInt count_progression_in_intervals(const IntervalSet& set, const BigInt& start,
                                      const BigInt& step, const BigInt& count) {
  BigInt total = 0;
  for (const auto& [a, b] : set.intervals()) {
    // i-range with start + i*step in [a, b]
    BigInt lo_i, hi_i;
    if (step > 0) {
      lo_i = ceil_div(a - start, step);
      hi_i = floor_div(b - start, step);
    } else {
      lo_i = ceil_div(b - start, step);   // dividing by negative flips the bounds
      hi_i = floor_div(a - start, step);
    }
    if (lo_i < 0) lo_i = 0;
    if (hi_i > count - 1) hi_i = count - 1;
    if (lo_i <= hi_i) total += hi_i - lo_i + 1;
  }
  return total;
}

// Progression endpoints as a closed range [min, max].
std::pair<BigInt, BigInt> progression_span(const BigInt& start, const BigInt& step,
                                           const BigInt& count) {
  BigInt last = start + (count - 1) * step;
  return start <= last ? std::make_pair(start, last) : std::make_pair(last, start);
}

IntervalSet benford_decades(const BenfordSet& b, const BigInt& hi) {
  IntervalSet decades;
  if (hi < 1) return decades;
  const std::size_t num_digits = hi.str().size();
  BigInt p10 = 1;
  for (std::size_t p = 0; p < num_digits; ++p) {
    for (int d : b.digits) {
      BigInt lo = d * p10;
      if (lo > hi) continue;
      BigInt top = (d + 1) * p10 - 1;
      decades.add(std::move(lo), std::min(top, hi));
    }
    p10 *= 10;
  }
  return decades;
}

}  // namespace

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
  return q;
}

IntegerSet make_residue(BigInt modulus, BigInt residue) {
  if (modulus < 1) throw BadParamError("residue modulus must be >= 1");
  BigInt r = mod_nonneg(residue, modulus);
  return ResidueClass{std::move(modulus), std::move(r)};
}

IntegerSet make_finite(std::vector<BigInt> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FiniteIntSet{std::move(elements)};
}

IntegerSet make_evens() { return make_residue(2, 0); }

IntegerSet make_benford(std::set<int> digits) {
  for (int d : digits) {
    if (d < 1 || d > 9) throw BadParamError("leading digits must lie in 1..9");
  }
  return BenfordSet{std::move(digits)};
}

int leading_decimal_digit(const BigInt& x) {
  if (x < 1) throw BadParamError("leading digit defined for positive integers only");
  return x.str()[0] - '0';
}

bool set_contains(const IntegerSet& a, const BigInt& x) {
  return std::visit(
      [&x](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FullSet>) {
          return true;
        } else if constexpr (std::is_same_v<T, ResidueClass>) {
          return mod_nonneg(x, s.modulus) == s.residue;
        } else if constexpr (std::is_same_v<T, IntervalSet>) {
          return s.contains(x);
        } else if constexpr (std::is_same_v<T, FiniteIntSet>) {
          return std::binary_search(s.elements.begin(), s.elements.end(), x);
        } else if constexpr (std::is_same_v<T, WSetTag>) {
          return w_contains(x);
        } else if constexpr (std::is_same_v<T, BenfordSet>) {
          return x >= 1 && s.digits.count(leading_decimal_digit(x)) > 0;
        } else {
          return s.pred(x);
        }
      },
      a);
}

std::optional<BigInt> count_in_progression(const IntegerSet& a, const BigInt& start,
                                           const BigInt& step, const BigInt& count) {
  if (step == 0) throw BadParamError("progression step must be nonzero");
  if (count < 0) throw BadParamError("progression count must be nonnegative");
  if (count == 0) return BigInt(0);
  return std::visit(
      [&](const auto& s) -> std::optional<BigInt> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FullSet>) {
          return count;
        } else if constexpr (std::is_same_v<T, ResidueClass>) {
          // start + i*step ≡ residue (mod m)
          const BigInt& m = s.modulus;
          BigInt u, v;
          BigInt g = ext_gcd(mod_nonneg(step, m), m, u, v);
          BigInt target = mod_nonneg(s.residue - start, m);
          if (target % g != 0) return BigInt(0);
          BigInt m2 = m / g;
          if (m2 == 1) return count;  // every index solves the congruence
          BigInt i0 = mod_nonneg((target / g) * u, m2);
          return count_congruent(i0, m2, count);
        } else if constexpr (std::is_same_v<T, IntervalSet>) {
          return count_progression_in_intervals(s, start, step, count);
        } else if constexpr (std::is_same_v<T, FiniteIntSet>) {
          BigInt total = 0;
          for (const BigInt& x : s.elements) {
            BigInt diff = x - start;
            if (diff % step != 0) continue;
            BigInt i = diff / step;
            if (i >= 0 && i < count) ++total;
          }
          return total;
        } else if constexpr (std::is_same_v<T, WSetTag>) {
          auto span = progression_span(start, step, count);
          if (span.second < 2) return BigInt(0);
          return count_progression_in_intervals(w_blocks_up_to(span.second),
                                                start, step, count);
        } else if constexpr (std::is_same_v<T, BenfordSet>) {
          auto span = progression_span(start, step, count);
          return count_progression_in_intervals(benford_decades(s, span.second),
                                                start, step, count);
        } else {
          return std::nullopt;
        }
      },
      a);
}

IntegerSet shift_set(const IntegerSet& a, const BigInt& delta) {
  return std::visit(
      [&delta](const auto& s) -> IntegerSet {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FullSet>) {
          return s;
        } else if constexpr (std::is_same_v<T, ResidueClass>) {
          return make_residue(s.modulus, BigInt(s.residue + delta));
        } else if constexpr (std::is_same_v<T, IntervalSet>) {
          IntervalSet shifted;
          for (const auto& [lo, hi] : s.intervals()) {
            shifted.add(BigInt(lo + delta), BigInt(hi + delta));
          }
          return shifted;
        } else if constexpr (std::is_same_v<T, FiniteIntSet>) {
          std::vector<BigInt> elems;
          elems.reserve(s.elements.size());
          for (const BigInt& x : s.elements) elems.emplace_back(x + delta);
          return FiniteIntSet{std::move(elems)};
        } else {
          throw BadParamError("set kind does not support shifting");
        }
      },
      a);
}

std::string describe_set(const IntegerSet& a) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FullSet>) {
          return "all";
        } else if constexpr (std::is_same_v<T, ResidueClass>) {
          return "residue:" + s.modulus.str() + ":" + s.residue.str();
        } else if constexpr (std::is_same_v<T, IntervalSet>) {
          std::string out = "intervals:";
          bool first = true;
          for (const auto& [lo, hi] : s.intervals()) {
            if (!first) out += ";";
            out += "[" + lo.str() + "," + hi.str() + "]";
            first = false;
          }
          return out;
        } else if constexpr (std::is_same_v<T, FiniteIntSet>) {
          std::string out = "finite:{";
          bool first = true;
          for (const BigInt& x : s.elements) {
            if (!first) out += ",";
            out += x.str();
            first = false;
          }
          return out + "}";
        } else if constexpr (std::is_same_v<T, WSetTag>) {
          return "wset";
        } else if constexpr (std::is_same_v<T, BenfordSet>) {
          std::string out = "benford:";
          for (int d : s.digits) out += static_cast<char>('0' + d);
          return out;
        } else {
          return s.name.empty() ? "predicate" : "predicate:" + s.name;
        }
      },
      a);
}

}  // namespace semigame
