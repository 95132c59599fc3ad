#include "report.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include "semigame/errors.hpp"
#include "semigame/version.hpp"

namespace semigame::cli {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << v;
  return os.str();
}

double approx_of(const Rational& q) { return approx(q); }

Json make_report(const std::string& command, Json inputs, Json results,
                 double duration_ms) {
  Json report;
  report["tool"] = "semigame";
  report["version"] = kVersion;
  report["command"] = command;
  report["inputs"] = std::move(inputs);
  report["input_digest"] = hex64(fnv1a64(report["inputs"].dump()));
  report["results"] = std::move(results);
  report["duration_ms"] = duration_ms;
  return report;
}

namespace {

void flatten(const Json& node, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& value : node) {
      flatten(value, path + "[" + std::to_string(i) + "]", out);
      ++i;
    }
    if (node.empty()) out.emplace_back(path, "[]");
  } else if (node.is_string()) {
    out.emplace_back(path, node.get<std::string>());
  } else {
    out.emplace_back(path, node.dump());
  }
}

std::string csv_escape(const std::string& s) {
  bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string render_report(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";

  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report.at("results"), "", rows);

  std::ostringstream os;
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& row : rows) {
      os << csv_escape(row.first) << "," << csv_escape(row.second) << "\n";
    }
    return os.str();
  }
  if (format == "table") {
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& row : rows) {
      os << std::left << std::setw(static_cast<int>(width)) << row.first
         << "  " << row.second << "\n";
    }
    return os.str();
  }
  throw BadParamError("unknown format: " + format);
}

}  // namespace semigame::cli
