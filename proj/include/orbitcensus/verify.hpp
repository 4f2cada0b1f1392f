#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace orbitcensus {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct CheckLine {
  bool pass;
  std::string what;      // short description
  std::string expected;  // expected value, printable
  std::string actual;    // observed value
};

struct CheckResult {
  std::string name;
  bool gating = true;
  bool pass = true;
  double ms = 0;
  std::vector<CheckLine> lines;
};

struct RunReport {
  std::string command;
  std::vector<CheckResult> checks;
  double total_ms = 0;

  int failed_count() const;
  bool ok() const { return failed_count() == 0; }
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Names accepted by run_verify (and the CLI `verify` subcommand).
const std::vector<std::string>& verify_check_names();

/// Runs the named checks ("all" for every one of them).
RunReport run_verify(const std::vector<std::string>& names);

}  // namespace orbitcensus
