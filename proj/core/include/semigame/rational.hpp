#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace semigame {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// "num/den" in lowest terms with the denominator always spelled out,
// e.g. "3/1", "-1/2". This is the wire format for every exact value.
std::string format_rational(const Rational& q);

// Accepts "p/q" or a plain integer, arbitrary precision, optional sign on the
// numerator. Canonicalizes (so "2/4" parses to 1/2). Rejects zero denominators.
std::optional<Rational> try_parse_rational(std::string_view text);
Rational parse_rational(std::string_view text);  // throws ParseError

std::optional<BigInt> try_parse_bigint(std::string_view text);
BigInt parse_bigint(std::string_view text);  // throws ParseError

// The unique rational in [lo, hi] with minimal denominator (ties broken by
// minimal |numerator|), via the Stern-Brocot / continued-fraction walk.
// Used to turn a tight sample envelope into an exact limit candidate.
Rational simplest_in_interval(const Rational& lo, const Rational& hi);

inline double approx(const Rational& q) { return q.template convert_to<double>(); }

}  // namespace semigame
