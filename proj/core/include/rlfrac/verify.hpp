#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rlfrac/signal.hpp"

namespace rlfrac {

struct RunConfig {
  UniformGrid grid = UniformGrid::default_grid();
  std::uint64_t seed = 0;
  /// Restricts the energy and cross suites to a single s.
  std::optional<double> s;
  /// Empty selects every suite.
  std::vector<std::string> suites;
  /// Keyed by "suite" (every check in it) or "suite.check".
  std::map<std::string, double> tolerance_overrides;
  /// Negative control: perturbs the quantities under test in this suite.
  std::optional<std::string> inject_fault;
};

struct Check {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  /// Lower bounds (e.g. convergence ratios) pass when worst >= tolerance.
  bool at_least = false;
  bool passed = true;
};

struct TableRow {
  std::vector<std::string> labels;
  std::vector<double> values;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<Check> checks;
  /// Parameter name -> swept values, as text.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> table_header;
  std::vector<TableRow> table;
};

struct VerificationReport {
  RunConfig config;
  std::vector<SuiteResult> suites;
  bool passed = true;
};

/// Suite names in report order.
const std::vector<std::string>& suite_names();

/// Throws InvalidParameter on an unknown suite name or override key.
void validate(const RunConfig& config);

SuiteResult run_suite(const std::string& name, const RunConfig& config);

/// Runs the selected suites concurrently and assembles them in name order.
VerificationReport verify_all(const RunConfig& config);

/// Deterministic JSON rendering (no timings).
std::string to_json(const VerificationReport& report);

}  // namespace rlfrac
