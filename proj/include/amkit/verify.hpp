#pragma once

// Invariant suites behind `amkit verify`. Each check records the measured
// residual and the tolerance it was held to.

#include <string>
#include <string_view>
#include <vector>

#include "amkit/linalg.hpp"

namespace amkit {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool overall() const;
  void add(std::string name, double residual, double tolerance);
  void append(const SuiteReport& other);
};

struct VerifyOptions {
  /// Replaces kDefaultTol in every check that uses it; pinned tolerances stay.
  double tol = kDefaultTol;
};

/// "local", "couplings", "circuits", "hypergraph", "optical", "symmetric".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Unknown names throw
/// ContractError.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opts = {});

/// One line per check, then a summary line.
std::string format_report(const SuiteReport& r);

}  // namespace amkit
