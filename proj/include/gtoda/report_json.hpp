#pragma once

#include <string>

#include "gtoda/report.hpp"
#include "json.hpp"

namespace gtoda {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

inline nlohmann::ordered_json to_json(const CheckRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["pass"] = r.pass;
  j["residual"] = r.residual ? nlohmann::ordered_json(*r.residual) : nlohmann::ordered_json(nullptr);
  j["tolerance"] = r.tolerance ? nlohmann::ordered_json(*r.tolerance) : nlohmann::ordered_json(nullptr);
  j["note"] = r.note;
  return j;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = r.command;
  j["pass"] = r.all_pass();
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : r.records) j["records"].push_back(to_json(rec));
  j["warnings"] = r.warnings;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.metadata) j["metadata"][k] = v;
  j["wall_time_s"] = r.wall_time ? nlohmann::ordered_json(*r.wall_time) : nlohmann::ordered_json(nullptr);
  return j;
}

inline CheckRecord record_from_json(const nlohmann::ordered_json& j) {
  CheckRecord r;
  r.id = j.at("id").get<std::string>();
  r.expected = j.at("expected").get<std::string>();
  r.computed = j.at("computed").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  if (!j.at("residual").is_null()) r.residual = j.at("residual").get<double>();
  if (!j.at("tolerance").is_null()) r.tolerance = j.at("tolerance").get<double>();
  r.note = j.at("note").get<std::string>();
  return r;
}

inline Report report_from_json(const nlohmann::ordered_json& j) {
  const int version = j.at("schema_version").get<int>();
  if (version != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema version " + std::to_string(version));
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& rec : j.at("records")) r.records.push_back(record_from_json(rec));
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  for (const auto& [k, v] : j.at("metadata").items()) r.metadata[k] = v.get<std::string>();
  if (!j.at("wall_time_s").is_null()) r.wall_time = j.at("wall_time_s").get<double>();
  return r;
}

/// Serialized form: two-space indentation, doubles printed round-trip exact.
inline std::string dump_report(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace gtoda
