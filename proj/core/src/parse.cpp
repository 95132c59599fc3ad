#include "semigame/parse.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "semigame/errors.hpp"

namespace semigame {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// "prefix:rest" -> rest, or nullopt when the prefix does not match.
std::optional<std::string> strip_prefix(const std::string& spec,
                                        const std::string& prefix) {
  if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(trim(current));
  return parts;
}

long long parse_int(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError("expected an integer, got an empty string");
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + t + "'");
  }
  if (pos != t.size()) throw ParseError("trailing characters in integer: '" + t + "'");
  return value;
}

FiniteSemigroup parse_semigroup_spec(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "rps") return make_rps();
  if (auto rest = strip_prefix(spec, "cyclic:")) {
    return make_cyclic_group(static_cast<int>(parse_int(*rest)));
  }
  if (auto rest = strip_prefix(spec, "leftzero:")) {
    return make_left_zero(static_cast<int>(parse_int(*rest)));
  }
  if (auto rest = strip_prefix(spec, "rightzero:")) {
    return make_right_zero(static_cast<int>(parse_int(*rest)));
  }
  if (auto rest = strip_prefix(spec, "minchain:")) {
    return make_min_chain(static_cast<int>(parse_int(*rest)));
  }
  if (auto rest = strip_prefix(spec, "null:")) {
    return make_null_semigroup(static_cast<int>(parse_int(*rest)));
  }
  if (auto rest = strip_prefix(spec, "monogenic:")) {
    auto parts = split_top_level(*rest, ':');
    if (parts.size() != 2) {
      throw ParseError("monogenic spec needs index:period, got '" + spec + "'");
    }
    return make_monogenic(static_cast<int>(parse_int(parts[0])),
                          static_cast<int>(parse_int(parts[1])));
  }
  if (auto rest = strip_prefix(spec, "product(")) {
    if (rest->empty() || rest->back() != ')') {
      throw ParseError("unbalanced parentheses in '" + spec + "'");
    }
    auto parts = split_top_level(rest->substr(0, rest->size() - 1), ',');
    if (parts.size() != 2) {
      throw ParseError("product takes exactly two factors, got '" + spec + "'");
    }
    FiniteSemigroup a = parse_semigroup_spec(parts[0]);
    FiniteSemigroup b = parse_semigroup_spec(parts[1]);
    return make_direct_product(a, b);
  }
  if (auto rest = strip_prefix(spec, "file:")) {
    return parse_cayley_file(*rest, /*require_associative=*/true);
  }
  if (auto rest = strip_prefix(spec, "magmafile:")) {
    return parse_cayley_file(*rest, /*require_associative=*/false);
  }
  throw ParseError("unknown semigroup spec: '" + spec + "'");
}

FiniteSemigroup parse_cayley_text(const std::string& text, bool require_associative) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty Cayley table input");
  line = trim(line);
  auto header = strip_prefix(line, "n=");
  if (!header) throw ParseError("Cayley table must start with 'n=<count>'");
  long long n = parse_int(*header);
  if (n < 1) throw ParseError("Cayley table size must be at least 1");
  std::vector<std::vector<long long>> table;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    std::vector<long long> row;
    for (const std::string& cell : split_top_level(line, ',')) {
      row.push_back(parse_int(cell));
    }
    if (static_cast<long long>(row.size()) != n) {
      throw ParseError("Cayley row has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
    }
    table.push_back(std::move(row));
  }
  if (static_cast<long long>(table.size()) != n) {
    throw ParseError("Cayley table has " + std::to_string(table.size()) +
                     " rows, expected " + std::to_string(n));
  }
  return FiniteSemigroup::validate(table, require_associative);
}

FiniteSemigroup parse_cayley_file(const std::string& path, bool require_associative) {
  return parse_cayley_text(read_file(path), require_associative);
}

Subset parse_subset_spec(const std::string& raw, int n) {
  const std::string spec = trim(raw);
  if (auto rest = strip_prefix(spec, "residue:")) {
    auto parts = split_top_level(*rest, ':');
    if (parts.size() != 2) {
      throw ParseError("residue spec needs modulus:residue, got '" + spec + "'");
    }
    long long k = parse_int(parts[0]);
    long long r = parse_int(parts[1]);
    if (k < 1) throw ParseError("residue modulus must be positive");
    Subset s(n);
    for (int i = 0; i < n; ++i) {
      if (((i % k) + k) % k == ((r % k) + k) % k) s.add(i);
    }
    return s;
  }
  std::vector<int> indices;
  for (const std::string& part : split_top_level(spec, ',')) {
    if (part.empty()) continue;
    indices.push_back(static_cast<int>(parse_int(part)));
  }
  return Subset::from_indices(n, indices);
}

PayoffFunction parse_payoff_spec(const std::string& raw, int n) {
  const std::string spec = trim(raw);
  auto values_from_text = [n](const std::string& text, char sep) {
    std::vector<Rational> values;
    for (const std::string& tok : split_top_level(text, sep)) {
      if (tok.empty()) continue;
      values.push_back(parse_rational(tok));
    }
    if (static_cast<int>(values.size()) != n) {
      throw ParseError("payoff has " + std::to_string(values.size()) +
                       " values, expected " + std::to_string(n));
    }
    return PayoffFunction(std::move(values));
  };
  if (auto rest = strip_prefix(spec, "inline:")) {
    return values_from_text(*rest, ',');
  }
  if (auto rest = strip_prefix(spec, "file:")) {
    return values_from_text(read_file(*rest), '\n');
  }
  if (auto rest = strip_prefix(spec, "chi:")) {
    return PayoffFunction::characteristic(parse_subset_spec(*rest, n));
  }
  if (auto rest = strip_prefix(spec, "signed:")) {
    return PayoffFunction::signed_characteristic(parse_subset_spec(*rest, n));
  }
  throw ParseError("unknown payoff spec: '" + spec + "'");
}

IntegerSet parse_set_spec(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "all") return FullSet{};
  if (spec == "evens") return make_evens();
  if (spec == "wset") return WSetTag{};
  if (auto rest = strip_prefix(spec, "residue:")) {
    auto parts = split_top_level(*rest, ':');
    if (parts.size() != 2) {
      throw ParseError("residue spec needs modulus:residue, got '" + spec + "'");
    }
    return make_residue(parse_bigint(parts[0]), parse_bigint(parts[1]));
  }
  if (auto rest = strip_prefix(spec, "intervals:")) {
    IntervalSet set;
    for (const std::string& part : split_top_level(*rest, ';')) {
      if (part.empty()) continue;
      if (part.front() != '[' || part.back() != ']') {
        throw ParseError("interval must look like [a,b], got '" + part + "'");
      }
      auto ends = split_top_level(part.substr(1, part.size() - 2), ',');
      if (ends.size() != 2) {
        throw ParseError("interval needs two endpoints, got '" + part + "'");
      }
      set.add(parse_bigint(ends[0]), parse_bigint(ends[1]));
    }
    if (set.empty()) throw ParseError("interval set is empty");
    return set;
  }
  if (auto rest = strip_prefix(spec, "finite:")) {
    std::string body = trim(*rest);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
      throw ParseError("finite set must look like {x1,x2,...}");
    }
    std::vector<BigInt> elements;
    for (const std::string& part :
         split_top_level(body.substr(1, body.size() - 2), ',')) {
      if (part.empty()) continue;
      elements.push_back(parse_bigint(part));
    }
    return make_finite(std::move(elements));
  }
  if (auto rest = strip_prefix(spec, "benford:")) {
    return make_benford(parse_digit_set(*rest));
  }
  throw ParseError("unknown set spec: '" + spec + "'");
}

AveragingSequence parse_sequence_spec(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "z") return AveragingSequence::z_symmetric();
  if (spec == "interval") return AveragingSequence::n_interval(0);
  if (auto rest = strip_prefix(spec, "interval:")) {
    return AveragingSequence::n_interval(parse_bigint(*rest));
  }
  if (spec == "poseven") return AveragingSequence::pos_even();
  if (spec == "negeven") return AveragingSequence::neg_even();
  if (spec == "pn") return AveragingSequence::pn_multiplicative();
  throw ParseError("unknown sequence spec: '" + spec + "'");
}

FiniteSupportStrategy parse_support_spec(const std::string& raw) {
  std::vector<std::pair<BigInt, Rational>> atoms;
  for (const std::string& part : split_top_level(trim(raw), ',')) {
    if (part.empty()) continue;
    auto pieces = split_top_level(part, ':');
    if (pieces.size() != 2) {
      throw ParseError("atom must look like point:weight, got '" + part + "'");
    }
    atoms.emplace_back(parse_bigint(pieces[0]), parse_rational(pieces[1]));
  }
  if (atoms.empty()) throw ParseError("support spec has no atoms");
  return FiniteSupportStrategy(std::move(atoms));
}

std::vector<BigInt> parse_schedule_spec(const std::string& raw) {
  const std::string spec = trim(raw);
  if (auto rest = strip_prefix(spec, "pow2:")) {
    auto dots = rest->find("..");
    if (dots == std::string::npos) {
      throw ParseError("pow2 schedule needs lo..hi, got '" + spec + "'");
    }
    long long lo = parse_int(rest->substr(0, dots));
    long long hi = parse_int(rest->substr(dots + 2));
    if (lo < 0 || hi < lo || hi > 512) {
      throw ParseError("pow2 schedule exponents out of range");
    }
    std::vector<BigInt> schedule;
    for (long long i = lo; i <= hi; ++i) schedule.push_back(BigInt(1) << i);
    return schedule;
  }
  std::vector<BigInt> schedule;
  for (const std::string& part : split_top_level(spec, ',')) {
    if (part.empty()) continue;
    schedule.push_back(parse_bigint(part));
  }
  if (schedule.empty()) throw ParseError("schedule is empty");
  return schedule;
}

std::set<int> parse_digit_set(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec.empty()) throw ParseError("digit set is empty");
  std::set<int> digits;
  for (char c : spec) {
    if (c < '1' || c > '9') {
      throw ParseError("digit set must use digits 1..9, got '" + spec + "'");
    }
    digits.insert(c - '0');
  }
  return digits;
}

}  // namespace semigame
