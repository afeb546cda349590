#ifndef SEMIPERIODIC_CONFIG_HPP
#define SEMIPERIODIC_CONFIG_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace semiperiodic {

using Complex = std::complex<double>;

enum class ErrorKind {
  InvalidConfig,
  InvalidMode,
  InvalidArgument,
  PointOutOfDomain,
  DerivativeUnavailable,
  NonFiniteIntegrand,
  TruncationMismatch,
  TruncationExceeded,
  InsufficientModes,
};

const char* to_string(ErrorKind kind) noexcept;

class SpectralError : public std::runtime_error {
 public:
  SpectralError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// The boundary value problem  -y'' + k y = lambda y  on [a,b] with
/// y(a) = -y(b), y'(a) = -y'(b).
class SpectralConfig {
 public:
  /// Defaults to (0, pi, 1).
  SpectralConfig() = default;
  SpectralConfig(double a, double b, double k);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double k() const noexcept { return k_; }
  double length() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return 0.5 * (a_ + b_); }

  bool contains(double x) const noexcept { return x >= a_ && x <= b_; }

  friend bool operator==(const SpectralConfig&, const SpectralConfig&) = default;

 private:
  double a_ = 0.0;
  double b_ = std::numbers::pi;
  double k_ = 1.0;
};

enum class Branch { Cos, Sin };

/// One of the two eigenfunctions belonging to lambda_m.
class Mode {
 public:
  Mode(int m, Branch branch);

  int index() const noexcept { return m_; }
  Branch branch() const noexcept { return branch_; }

  friend bool operator==(const Mode&, const Mode&) = default;

 private:
  int m_;
  Branch branch_;
};

/// Index n of the left-definite space H_n; n >= 1.
class LeftDefIndex {
 public:
  explicit LeftDefIndex(int n);
  int value() const noexcept { return n_; }

 private:
  int n_;
};

/// Continuum exponent r of H_r = D(A^{r/2}); r > 0.
class RPower {
 public:
  explicit RPower(double r);
  double value() const noexcept { return r_; }

 private:
  double r_;
};

}  // namespace semiperiodic

#endif  // SEMIPERIODIC_CONFIG_HPP
