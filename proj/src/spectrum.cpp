#include "semiperiodic/spectrum.hpp"

#include <cmath>
#include <string>

namespace semiperiodic {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidConfig: return "invalid-config";
    case ErrorKind::InvalidMode: return "invalid-mode";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::PointOutOfDomain: return "point-out-of-domain";
    case ErrorKind::DerivativeUnavailable: return "derivative-unavailable";
    case ErrorKind::NonFiniteIntegrand: return "non-finite-integrand";
    case ErrorKind::TruncationMismatch: return "truncation-mismatch";
    case ErrorKind::TruncationExceeded: return "truncation-exceeded";
    case ErrorKind::InsufficientModes: return "insufficient-modes";
  }
  return "unknown";
}

SpectralConfig::SpectralConfig(double a, double b, double k) : a_(a), b_(b), k_(k) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw SpectralError(ErrorKind::InvalidConfig,
                        "need finite a < b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  if (!std::isfinite(k) || !(k > 0.0)) {
    throw SpectralError(ErrorKind::InvalidConfig, "need k > 0, got k=" + std::to_string(k));
  }
}

Mode::Mode(int m, Branch branch) : m_(m), branch_(branch) {
  if (m < 1) throw SpectralError(ErrorKind::InvalidMode, "mode index must be >= 1, got " + std::to_string(m));
}

LeftDefIndex::LeftDefIndex(int n) : n_(n) {
  if (n < 1) throw SpectralError(ErrorKind::InvalidArgument, "ladder index must be >= 1, got " + std::to_string(n));
}

RPower::RPower(double r) : r_(r) {
  if (!std::isfinite(r) || !(r > 0.0)) {
    throw SpectralError(ErrorKind::InvalidArgument, "exponent r must be > 0, got " + std::to_string(r));
  }
}

double frequency(const SpectralConfig& cfg, int m) {
  if (m < 1) throw SpectralError(ErrorKind::InvalidMode, "mode index must be >= 1, got " + std::to_string(m));
  return (2.0 * m - 1.0) * std::numbers::pi / cfg.length();
}

double eigenvalue(const SpectralConfig& cfg, int m) {
  const double w = frequency(cfg, m);
  return w * w + cfg.k();
}

Eigen::VectorXd eigenvalues(const SpectralConfig& cfg, int count) {
  Eigen::VectorXd out(count);
  for (int m = 1; m <= count; ++m) out(m - 1) = eigenvalue(cfg, m);
  return out;
}

double normalization(const SpectralConfig& cfg) { return std::sqrt(2.0 / cfg.length()); }

double basis_eval(const SpectralConfig& cfg, const Mode& mode, double x, int deriv_order) {
  if (!cfg.contains(x)) {
    throw SpectralError(ErrorKind::PointOutOfDomain, "x=" + std::to_string(x) + " outside [a,b]");
  }
  if (deriv_order < 0) throw SpectralError(ErrorKind::InvalidArgument, "negative derivative order");

  const double w = frequency(cfg, mode.index());
  const double c = std::cos(w * x);
  const double s = std::sin(w * x);
  // sin is cos shifted one step along the cycle
  const int phase = (deriv_order + (mode.branch() == Branch::Sin ? 3 : 0)) % 4;
  double v = 0.0;
  switch (phase) {
    case 0: v = c; break;
    case 1: v = -s; break;
    case 2: v = -c; break;
    case 3: v = s; break;
  }
  return normalization(cfg) * std::pow(w, deriv_order) * v;
}

double binomial(int n, int j) {
  if (j < 0 || j > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c = c * (n - j + i) / i;
  return std::round(c);
}

Eigen::VectorXd ell_power_coefficients(int n, double k) {
  if (n < 1) throw SpectralError(ErrorKind::InvalidArgument, "power n must be >= 1");
  Eigen::VectorXd c(n + 1);
  for (int j = 0; j <= n; ++j) {
    c(j) = (j % 2 == 0 ? 1.0 : -1.0) * binomial(n, j) * std::pow(k, n - j);
  }
  return c;
}

}  // namespace semiperiodic
