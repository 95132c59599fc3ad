#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "semigame/rational.hpp"

namespace semigame::cli {

// Reports keep insertion order so output bytes are reproducible.
using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

// Floating-point companion for human reading; exact values stay strings.
double approx_of(const Rational& q);

// The envelope around a subcommand's results.  Everything inside "results"
// is a pure function of the inputs; duration lives outside it.
Json make_report(const std::string& command, Json inputs, Json results,
                 double duration_ms);

// format: "json", "csv" (flattened path,value lines of the results payload),
// or "table" (aligned key/value view of the same flattening).
std::string render_report(const Json& report, const std::string& format);

}  // namespace semigame::cli
