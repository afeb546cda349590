#ifndef SEMIPERIODIC_TRIG_POLYNOMIAL_HPP
#define SEMIPERIODIC_TRIG_POLYNOMIAL_HPP

#include <Eigen/Dense>
#include <cmath>

#include "semiperiodic/config.hpp"
#include "semiperiodic/spectrum.hpp"

namespace semiperiodic {

/// Finite combination  sum_m alpha_m z_{m,Cos} + beta_m z_{m,Sin}.
///
/// Row m-1 of coefficients() holds (alpha_m, beta_m). Every operation on this
/// type is carried out exactly in coefficient space: derivatives mix the two
/// columns, and l acts diagonally by lambda_m.
template <typename Scalar>
class TrigPolynomial {
 public:
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 2>;

  explicit TrigPolynomial(const SpectralConfig& cfg) : cfg_(cfg), coeffs_(0, 2) {}

  TrigPolynomial(const SpectralConfig& cfg, Coefficients coeffs) : cfg_(cfg), coeffs_(std::move(coeffs)) {}

  static TrigPolynomial basis(const SpectralConfig& cfg, const Mode& mode, Scalar weight = Scalar(1)) {
    TrigPolynomial p(cfg);
    p.coefficient(mode) = weight;
    return p;
  }

  const SpectralConfig& config() const noexcept { return cfg_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }

  /// Highest mode index with storage (not necessarily nonzero).
  int max_mode() const noexcept { return static_cast<int>(coeffs_.rows()); }

  Scalar coefficient(const Mode& mode) const {
    if (mode.index() > max_mode()) return Scalar(0);
    return coeffs_(mode.index() - 1, column(mode.branch()));
  }

  /// Grows storage as needed.
  Scalar& coefficient(const Mode& mode) {
    if (mode.index() > max_mode()) {
      const Eigen::Index old = coeffs_.rows();
      coeffs_.conservativeResize(mode.index(), 2);
      coeffs_.bottomRows(mode.index() - old).setZero();
    }
    return coeffs_(mode.index() - 1, column(mode.branch()));
  }

  Scalar operator()(double x) const { return derivative_at(x, 0); }

  /// p^(d)(x) in closed form.
  Scalar derivative_at(double x, int d) const {
    if (!cfg_.contains(x)) throw SpectralError(ErrorKind::PointOutOfDomain, "x outside [a,b]");
    Scalar sum(0);
    for (int m = 1; m <= max_mode(); ++m) {
      const Scalar alpha = coeffs_(m - 1, 0);
      const Scalar beta = coeffs_(m - 1, 1);
      if (alpha != Scalar(0)) sum += alpha * basis_eval(cfg_, Mode(m, Branch::Cos), x, d);
      if (beta != Scalar(0)) sum += beta * basis_eval(cfg_, Mode(m, Branch::Sin), x, d);
    }
    return sum;
  }

  TrigPolynomial& operator+=(const TrigPolynomial& other) {
    require_same_config(other);
    if (other.max_mode() > max_mode()) {
      const Eigen::Index old = coeffs_.rows();
      coeffs_.conservativeResize(other.max_mode(), 2);
      coeffs_.bottomRows(other.max_mode() - old).setZero();
    }
    coeffs_.topRows(other.max_mode()) += other.coeffs_;
    return *this;
  }

  TrigPolynomial& operator-=(const TrigPolynomial& other) { return *this += other * Scalar(-1); }

  TrigPolynomial& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }

  friend TrigPolynomial operator+(TrigPolynomial lhs, const TrigPolynomial& rhs) { return lhs += rhs; }
  friend TrigPolynomial operator-(TrigPolynomial lhs, const TrigPolynomial& rhs) { return lhs -= rhs; }
  friend TrigPolynomial operator*(TrigPolynomial p, Scalar s) { return p *= s; }
  friend TrigPolynomial operator*(Scalar s, TrigPolynomial p) { return p *= s; }

  void require_same_config(const TrigPolynomial& other) const {
    if (!(other.cfg_ == cfg_)) throw SpectralError(ErrorKind::InvalidArgument, "trig polynomials on different configs");
  }

 private:
  static int column(Branch b) noexcept { return b == Branch::Cos ? 0 : 1; }

  SpectralConfig cfg_;
  Coefficients coeffs_;
};

using TrigPolynomiald = TrigPolynomial<double>;
using TrigPolynomialcd = TrigPolynomial<Complex>;

/// omega_m for m = 1..count.
inline Eigen::ArrayXd frequencies(const SpectralConfig& cfg, int count) {
  Eigen::ArrayXd w(count);
  for (int m = 1; m <= count; ++m) w(m - 1) = frequency(cfg, m);
  return w;
}

/// d/dx (alpha cos(wx) + beta sin(wx)) = w beta cos(wx) - w alpha sin(wx).
template <typename Scalar>
TrigPolynomial<Scalar> derivative(const TrigPolynomial<Scalar>& p, int order = 1) {
  if (order < 0) throw SpectralError(ErrorKind::InvalidArgument, "negative derivative order");
  using Coefficients = typename TrigPolynomial<Scalar>::Coefficients;
  const Eigen::ArrayXd w = frequencies(p.config(), p.max_mode());
  Coefficients c = p.coefficients();
  for (int i = 0; i < order; ++i) {
    Coefficients next(c.rows(), 2);
    next.col(0) = (c.col(1).array() * w.cast<Scalar>()).matrix();
    next.col(1) = (-c.col(0).array() * w.cast<Scalar>()).matrix();
    c = std::move(next);
  }
  return TrigPolynomial<Scalar>(p.config(), std::move(c));
}

/// l[p] = -p'' + k p; multiplies each coefficient by lambda_m.
template <typename Scalar>
TrigPolynomial<Scalar> apply_ell(const TrigPolynomial<Scalar>& p) {
  const Eigen::VectorXd lambda = eigenvalues(p.config(), p.max_mode());
  typename TrigPolynomial<Scalar>::Coefficients c = lambda.cast<Scalar>().asDiagonal() * p.coefficients();
  return TrigPolynomial<Scalar>(p.config(), std::move(c));
}

/// l^n[p] through the binomial expansion  sum_j c_j p^(2j)  with closed-form
/// derivatives; agrees with n-fold apply_ell.
template <typename Scalar>
TrigPolynomial<Scalar> apply_ell_power(const TrigPolynomial<Scalar>& p, int n) {
  const Eigen::VectorXd c = ell_power_coefficients(n, p.config().k());
  TrigPolynomial<Scalar> result(p.config());
  TrigPolynomial<Scalar> even_derivative = p;
  for (int j = 0; j <= n; ++j) {
    result += even_derivative * Scalar(c(j));
    if (j < n) even_derivative = derivative(even_derivative, 2);
  }
  return result;
}

/// l^n[p] by repeated application of l.
template <typename Scalar>
TrigPolynomial<Scalar> apply_ell_iterated(const TrigPolynomial<Scalar>& p, int n) {
  if (n < 1) throw SpectralError(ErrorKind::InvalidArgument, "power n must be >= 1");
  TrigPolynomial<Scalar> q = p;
  for (int i = 0; i < n; ++i) q = apply_ell(q);
  return q;
}

}  // namespace semiperiodic

#endif  // SEMIPERIODIC_TRIG_POLYNOMIAL_HPP
