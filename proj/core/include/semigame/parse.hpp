#pragma once

#include <set>
#include <string>
#include <vector>

#include "semigame/averaging.hpp"
#include "semigame/integer_sets.hpp"
#include "semigame/payoff.hpp"
#include "semigame/semigroup.hpp"
#include "semigame/wald.hpp"

namespace semigame {

// "cyclic:6", "leftzero:3", "rightzero:3", "minchain:4", "null:4", "rps",
// "monogenic:<index>:<period>", "product(<spec>,<spec>)", "file:<path>"
// (Cayley CSV), "magmafile:<path>" (same format, associativity not required).
FiniteSemigroup parse_semigroup_spec(const std::string& spec);

// Cayley CSV: first line "n=<count>", then n lines of n comma-separated
// 0-based entries.
FiniteSemigroup parse_cayley_text(const std::string& text,
                                  bool require_associative = true);
FiniteSemigroup parse_cayley_file(const std::string& path,
                                  bool require_associative = true);

// "0,1,2" (explicit indices) or "residue:<k>:<r>" (all i with i ≡ r mod k);
// n is the universe size.
Subset parse_subset_spec(const std::string& spec, int n);

// "inline:1,-1/2,0", "file:<path>" (one rational per line), "chi:<subset>",
// "signed:<subset>" (χ_W − χ_complement).
PayoffFunction parse_payoff_spec(const std::string& spec, int n);

// "all", "evens", "wset", "residue:<k>:<r>", "intervals:[a,b];[c,d];...",
// "finite:{x1,x2,...}", "benford:<digits>".
IntegerSet parse_set_spec(const std::string& spec);

// "z", "interval" or "interval:<base>", "poseven", "negeven", "pn".
AveragingSequence parse_sequence_spec(const std::string& spec);

// "0:1/10,5:9/10" — point:weight atoms.
FiniteSupportStrategy parse_support_spec(const std::string& spec);

// "16,32,64,128" (explicit) or "pow2:<lo>..<hi>" (powers 2^lo..2^hi).
std::vector<BigInt> parse_schedule_spec(const std::string& spec);

// "123" -> {1,2,3}; digits must lie in 1..9.
std::set<int> parse_digit_set(const std::string& spec);

// Shared helpers (exposed for the CLI's own parsing needs).
std::vector<std::string> split_top_level(const std::string& text, char sep);
long long parse_int(const std::string& text);

}  // namespace semigame
