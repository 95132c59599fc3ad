#include "semigame/payoff.hpp"

#include "semigame/errors.hpp"

namespace semigame {

PayoffFunction::PayoffFunction(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw BadParamError("payoff function needs at least one value");
  for (const auto& v : values_)
    if (v < -1 || v > 1)
      throw BadParamError("payoff value " + format_rational(v) + " outside [-1,1]");
}

PayoffFunction PayoffFunction::characteristic(const Subset& w) {
  std::vector<Rational> v(w.universe(), Rational(0));
  for (int i = 0; i < w.universe(); ++i)
    if (w.contains(i)) v[i] = 1;
  return PayoffFunction(std::move(v));
}

PayoffFunction PayoffFunction::signed_characteristic(const Subset& w) {
  std::vector<Rational> v(w.universe());
  for (int i = 0; i < w.universe(); ++i) v[i] = w.contains(i) ? 1 : -1;
  return PayoffFunction(std::move(v));
}

ProbabilityVector::ProbabilityVector(std::vector<Rational> weights) : p_(std::move(weights)) {
  if (p_.empty()) throw BadParamError("probability vector needs at least one entry");
  Rational sum(0);
  for (const auto& w : p_) {
    if (w < 0) throw BadParamError("negative probability " + format_rational(w));
    sum += w;
  }
  if (sum != 1) throw BadParamError("probabilities sum to " + format_rational(sum) + ", not 1");
}

ProbabilityVector ProbabilityVector::uniform(int n) {
  if (n < 1) throw BadParamError("uniform needs n >= 1");
  return ProbabilityVector(std::vector<Rational>(n, Rational(1, n)));
}

ProbabilityVector ProbabilityVector::point_mass(int n, int i) {
  if (i < 0 || i >= n) throw BadParamError("point mass index out of range");
  std::vector<Rational> p(n, Rational(0));
  p[i] = 1;
  return ProbabilityVector(std::move(p));
}

PayoffMatrix build_payoff_matrix(const FiniteSemigroup& s, const PayoffFunction& f) {
  if (f.size() != s.size()) throw BadParamError("payoff length does not match semigroup size");
  PayoffMatrix m(s.size(), s.size());
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y) m.at(x, y) = f[s.op(x, y)];
  return m;
}

Rational mean_payoff(const ProbabilityVector& m, const PayoffFunction& f) {
  if (m.size() != f.size()) throw BadParamError("dimension mismatch in mean_payoff");
  Rational out(0);
  for (int i = 0; i < m.size(); ++i) out += m[i] * f[i];
  return out;
}

}  // namespace semigame
