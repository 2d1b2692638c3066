#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbowtri/errors.hpp"
#include "rainbowtri/version.hpp"

namespace rainbowtri {

/// One solver run, serialized as a single JSON object per line in an
/// append-only log. Exact values always carry exhausted = true; bracketed
/// results carry both bounds.
struct SearchReport {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json values = nlohmann::json::object();
  std::vector<std::string> witness_files;
  bool exhausted = true;
  double wall_ms = 0.0;
  std::uint64_t nodes = 0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["params"] = params;
    j["values"] = values;
    j["witnesses"] = witness_files;
    j["exhausted"] = exhausted;
    j["wall_ms"] = wall_ms;
    j["nodes"] = nodes;
    return j;
  }
};

inline void append_report_line(const std::filesystem::path& log_path,
                               const SearchReport& report) {
  std::ofstream out(log_path, std::ios::app);
  if (!out) throw domain_error("cannot open report log: " + log_path.string());
  out << report.to_json().dump() << '\n';
}

}  // namespace rainbowtri
