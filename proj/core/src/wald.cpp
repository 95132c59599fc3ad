#include "semigame/wald.hpp"

#include <algorithm>

#include "semigame/errors.hpp"

namespace semigame {

FiniteSupportStrategy::FiniteSupportStrategy(
    std::vector<std::pair<BigInt, Rational>> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw BadParamError("strategy needs at least one atom");
  std::sort(atoms_.begin(), atoms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational total(0);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].first < 0) {
      throw BadParamError("atoms must sit at nonnegative integers");
    }
    if (i > 0 && atoms_[i].first == atoms_[i - 1].first) {
      throw BadParamError("duplicate atom at " + atoms_[i].first.str());
    }
    if (atoms_[i].second <= 0) {
      throw BadParamError("atom weights must be positive");
    }
    total += atoms_[i].second;
  }
  if (total != 1) {
    throw BadParamError("atom weights sum to " + format_rational(total) +
                        ", expected 1");
  }
}

Rational FiniteSupportStrategy::mass_below(const BigInt& t) const {
  Rational mass(0);
  for (const auto& [point, weight] : atoms_) {
    if (point >= t) break;
    mass += weight;
  }
  return mass;
}

Rational FiniteSupportStrategy::mass_above(const BigInt& t) const {
  Rational mass(0);
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    if (it->first <= t) break;
    mass += it->second;
  }
  return mass;
}

int wald_payoff(const BigInt& s, const BigInt& t) {
  return s < t ? -1 : (s > t ? 1 : 0);
}

Rational wald_expected_payoff(const FiniteSupportStrategy& p, const BigInt& t) {
  return p.mass_above(t) - p.mass_below(t);
}

WaldResponse wald_best_response(const FiniteSupportStrategy& p) {
  std::vector<BigInt> candidates{0};
  for (const auto& atom : p.atoms()) {
    candidates.push_back(atom.first);
    candidates.push_back(atom.first + 1);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  WaldResponse best{candidates.front(),
                    wald_expected_payoff(p, candidates.front())};
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Rational e = wald_expected_payoff(p, candidates[i]);
    if (e < best.payoff) best = {candidates[i], std::move(e)};
  }
  return best;
}

}  // namespace semigame
