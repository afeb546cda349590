#ifndef SEMIPERIODIC_REPORT_VERIFY_HPP
#define SEMIPERIODIC_REPORT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "semiperiodic/config.hpp"
#include "semiperiodic/quadrature.hpp"

namespace semiperiodic::report {

/// One checked property: passes when value <= tolerance.
struct CheckResult {
  std::string suite;
  std::string check;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  /// Restricts ladder-dependent suites to this n; otherwise each suite uses its own range.
  std::optional<int> n;
  /// Highest mode index exercised.
  int modes = 12;
  QuadratureSpec quadrature;
};

/// Suite names accepted by run_suite, "all" excluded.
std::vector<std::string> suite_names();

/// Runs one suite (or "all"). Throws SpectralError(InvalidArgument) for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const SpectralConfig& cfg, const VerifyOptions& options);

}  // namespace semiperiodic::report

#endif  // SEMIPERIODIC_REPORT_VERIFY_HPP
