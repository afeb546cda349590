#include "semiperiodic/quadrature.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace semiperiodic {

void QuadratureSpec::validate() const {
  if (panels < 1) throw SpectralError(ErrorKind::InvalidArgument, "quadrature needs panels >= 1");
  if (nodes_per_panel < 2) throw SpectralError(ErrorKind::InvalidArgument, "quadrature needs nodes_per_panel >= 2");
  if (!(abs_tol > 0.0)) throw SpectralError(ErrorKind::InvalidArgument, "quadrature needs abs_tol > 0");
}

namespace {

// Newton iteration on P_q from the Chebyshev-like initial guess; symmetric
// pairs are filled from one half so the rule is exactly symmetric.
GaussLegendreRule compute_rule(int q) {
  GaussLegendreRule rule{Eigen::VectorXd(q), Eigen::VectorXd(q)};
  for (int i = 0; i < (q + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= q; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes(i) = -x;
    rule.nodes(q - 1 - i) = x;
    rule.weights(i) = w;
    rule.weights(q - 1 - i) = w;
  }
  if (q % 2 == 1) rule.nodes(q / 2) = 0.0;
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  if (order < 2) throw SpectralError(ErrorKind::InvalidArgument, "Gauss-Legendre order must be >= 2");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<const GaussLegendreRule>(compute_rule(order));
  return *slot;
}

QuadratureSpec resolved_for(const QuadratureSpec& spec, int max_mode) {
  QuadratureSpec out = spec;
  if (max_mode >= 1) {
    const int needed = static_cast<int>(std::ceil((2.0 * max_mode - 1.0) * std::numbers::pi / 3.0));
    out.panels = std::max(spec.panels, needed);
  }
  return out;
}

}  // namespace semiperiodic
