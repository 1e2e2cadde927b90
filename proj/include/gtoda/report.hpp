#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gtoda {

/// One checked claim: what was expected, what came out, and the verdict.
struct CheckRecord {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::optional<double> residual;
  std::optional<double> tolerance;
  std::string note;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  std::string command;
  std::vector<CheckRecord> records;
  std::vector<std::string> warnings;
  std::map<std::string, std::string> metadata;  // grid settings, route, ...
  std::optional<double> wall_time;              // seconds; only when requested

  friend bool operator==(const Report&, const Report&) = default;

  bool all_pass() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
  }
  void append(const Report& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  }
};

}  // namespace gtoda
