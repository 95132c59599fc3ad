#include "semigame/rational.hpp"

#include <cctype>

#include "semigame/errors.hpp"

namespace semigame {

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<BigInt> try_parse_bigint(std::string_view text) {
  if (!is_integer_token(text)) return std::nullopt;
  return BigInt(std::string(text));
}

BigInt parse_bigint(std::string_view text) {
  auto v = try_parse_bigint(text);
  if (!v) throw ParseError("not an integer: '" + std::string(text) + "'");
  return *v;
}

std::optional<Rational> try_parse_rational(std::string_view text) {
  // Trim surrounding whitespace; signs inside the tokens stay rejected.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto num = try_parse_bigint(text);
    if (!num) return std::nullopt;
    return Rational(*num);
  }
  std::string_view den_token = text.substr(slash + 1);
  // The sign belongs to the numerator only; "1/-2" is not on the wire format.
  if (den_token.empty() || den_token[0] == '+' || den_token[0] == '-')
    return std::nullopt;
  auto num = try_parse_bigint(text.substr(0, slash));
  auto den = try_parse_bigint(den_token);
  if (!num || !den || *den == 0) return std::nullopt;
  // Division canonicalizes (lowest terms, positive denominator); the
  // two-argument constructor must not see anything but positive values.
  Rational r(*num);
  r /= *den;
  return r;
}

Rational parse_rational(std::string_view text) {
  auto v = try_parse_rational(text);
  if (!v) throw ParseError("not a rational: '" + std::string(text) + "'");
  return *v;
}

namespace {

// Both endpoints > 0.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  BigInt floor_lo = numerator(lo) / denominator(lo);  // lo > 0, truncation = floor
  BigInt ceil_lo = floor_lo + (floor_lo * denominator(lo) == numerator(lo) ? 0 : 1);
  if (Rational(ceil_lo) <= hi) return Rational(ceil_lo);
  // No integer in range: recurse on the fractional parts, 1/(hi-a) .. 1/(lo-a).
  Rational a(floor_lo);
  Rational inner = simplest_positive(1 / (hi - a), 1 / (lo - a));
  return a + 1 / inner;
}

}  // namespace

Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw BadParamError("simplest_in_interval: empty interval");
  if (lo <= 0 && 0 <= hi) return Rational(0);
  if (hi < 0) return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

}  // namespace semigame
