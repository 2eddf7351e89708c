#pragma once

// Text and JSON renderings of theorem reports.

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "quandlekit/theorems.hpp"

namespace quandlekit {

inline constexpr int kReportSchema = 1;

inline nlohmann::ordered_json to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["theorem_id"] = r.theorem_id;
  j["passed"] = r.passed();
  j["instances_tested"] = r.instances_tested;
  j["elapsed_seconds"] = r.elapsed.count();
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) failures.push_back({{"input", f.input}, {"clause", f.clause}});
  j["failures"] = std::move(failures);
  auto facts = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.facts) facts.push_back({{"key", k}, {"value", v}});
  j["facts"] = std::move(facts);
  return j;
}

inline nlohmann::ordered_json to_json(const std::vector<TheoremReport>& reports) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  bool all = true;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    all = all && r.passed();
    arr.push_back(to_json(r));
  }
  j["passed"] = all;
  j["reports"] = std::move(arr);
  return j;
}

/// One summary line, then failures; facts only when requested.
inline void write_text(std::ostream& out, const TheoremReport& r, bool with_facts) {
  std::ostringstream time;
  time << std::fixed << std::setprecision(3) << r.elapsed.count();
  out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(28) << r.theorem_id
      << " instances=" << r.instances_tested << " failures=" << r.failures.size() << " time=" << time.str() << "s\n";
  for (const auto& f : r.failures) out << "  counterexample: " << f.input << ": " << f.clause << '\n';
  if (with_facts) {
    for (const auto& [k, v] : r.facts) out << "  " << k << " = " << v << '\n';
  }
}

}  // namespace quandlekit
