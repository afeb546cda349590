#ifndef SEMIPERIODIC_REPORT_CLI_HPP
#define SEMIPERIODIC_REPORT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace semiperiodic::report {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitToleranceFailure = 3;

/// Runs the command line `args` (program name excluded). The report goes to
/// --output when given, otherwise to `out`; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semiperiodic::report

#endif  // SEMIPERIODIC_REPORT_CLI_HPP
