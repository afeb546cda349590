#ifndef SEMIPERIODIC_REPORT_CATALOG_HPP
#define SEMIPERIODIC_REPORT_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiperiodic/coeff_vector.hpp"
#include "semiperiodic/function_handle.hpp"

namespace semiperiodic::report {

/// Number of modes kept when a coefficient-defined function is evaluated pointwise.
inline constexpr int kSyntheticHandleModes = 256;

/// A named test function for the CLI and the verification suites.
struct CatalogEntry {
  std::string name;
  FunctionHandlecd handle;
  /// m -> (a_m, b_m); empty when no closed form is known.
  std::function<std::pair<Complex, Complex>(int)> closed_form;
  /// Largest n with f in V_n; nullopt means every n.
  std::optional<int> known_ladder;
  /// Given by its coefficients; the handle is a truncation with no derivatives.
  bool coefficient_defined = false;

  bool has_closed_form() const noexcept { return static_cast<bool>(closed_form); }
};

/// Looks up `mode:<m>:<cos|sin>`, `sawtooth`, `synthetic:<p>` or `offset-cosine`.
/// Throws SpectralError(InvalidArgument) for unknown names.
CatalogEntry make_catalog_entry(const std::string& name, const SpectralConfig& cfg);

/// Names accepted by make_catalog_entry, with placeholders.
std::vector<std::string> catalog_names();

/// a_m, b_m for m = 1..N from the entry's closed form.
CoeffVectorcd closed_form_coeffs(const CatalogEntry& entry, const SpectralConfig& cfg, int N);

}  // namespace semiperiodic::report

#endif  // SEMIPERIODIC_REPORT_CATALOG_HPP
