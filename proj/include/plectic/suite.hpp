#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plectic/plectic.hpp"

namespace plectic {

struct Failure {
  std::string identity;
  std::string inputs;    // rendered operands
  std::string residual;  // rendered lhs - rhs, or the error message
};

struct VerificationReport {
  std::string structure;
  std::string suite;
  int trials = 0;
  std::uint64_t seed = 0;
  int max_deg = 0;
  /// Number of checks per identity, in suite order.
  std::vector<std::pair<std::string, int>> checks;
  std::vector<Failure> failures;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
  int trials = 50;
  std::uint64_t seed = 0;
  int max_deg = 2;
  /// Restricts the run to these identity families; empty means all.
  std::vector<std::string> only;
};

/// Identity families in the order the suite runs them.
const std::vector<std::string>& suite_identities();

/// Runs every identity family on random inputs over p. Each (trial, family)
/// pair draws from its own generator seeded by (seed, trial, family), so a
/// report depends only on the structure and the options.
VerificationReport run_suite(const std::string& structure_key, const PlecticStructure& p,
                             const SuiteOptions& options);

/// JSON text of the report. elapsed_ms is written only when requested, so
/// that reports of identical runs are byte-identical by default.
std::string report_json(const VerificationReport& report, bool include_elapsed = false);

}  // namespace plectic
