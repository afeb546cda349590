#ifndef SEMIPERIODIC_LEFTDEF_HPP
#define SEMIPERIODIC_LEFTDEF_HPP

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "semiperiodic/coeff_vector.hpp"
#include "semiperiodic/differentiable.hpp"
#include "semiperiodic/quadrature.hpp"
#include "semiperiodic/spectrum.hpp"

namespace semiperiodic {

/// Relative boundary-defect threshold for V_n membership; see normalized_boundary_defect.
inline constexpr double kBoundaryTolerance = 1e-8;
/// Coefficients with magnitude below this are ignored by the decay fit.
inline constexpr double kCoefficientNoiseFloor = 1e-14;
/// Half-width of the band around the critical exponent where no verdict is given.
inline constexpr double kInconclusiveBand = 0.25;
/// Smallest truncation accepted by membership_classify.
inline constexpr int kMinClassifyModes = 32;

/// (f, g)_n as the weighted derivative sum
///   sum_{j=0}^n C(n,j) k^(n-j) (f^(j), g^(j))_{L^2},
/// evaluated term by term. Exact for two trig polynomials, quadrature otherwise.
template <Differentiable F, Differentiable G>
auto leftdef_inner_by_definition(const F& f, const G& g, LeftDefIndex n, const SpectralConfig& cfg,
                                 const QuadratureSpec& spec = {}) {
  using Scalar = inner_scalar_t<F, G>;
  require_derivative(f, n.value());
  require_derivative(g, n.value());
  Scalar s(0);
  for (int j = 0; j <= n.value(); ++j) {
    const double w = binomial(n.value(), j) * std::pow(cfg.k(), n.value() - j);
    s += w * l2_inner_derivative(f, g, j, cfg, spec);
  }
  return s;
}

/// The left-definite inner product (f, g)_n. For two trig polynomials this is
/// the diagonal form sum_m lambda_m^n (alpha_m conj(alpha'_m) + beta_m conj(beta'_m));
/// any pair involving a FunctionHandle falls back to the derivative sum.
template <Differentiable F, Differentiable G>
auto leftdef_inner(const F& f, const G& g, LeftDefIndex n, const SpectralConfig& cfg,
                   const QuadratureSpec& spec = {}) {
  using Scalar = inner_scalar_t<F, G>;
  if constexpr (is_trig_polynomial_v<F> && is_trig_polynomial_v<G>) {
    f.require_same_config(g);
    const Eigen::Index rows = std::min(f.coefficients().rows(), g.coefficients().rows());
    const Eigen::VectorXd lambda = eigenvalues(cfg, static_cast<int>(rows));
    Scalar s(0);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Scalar pair = f.coefficients()(r, 0) * Eigen::numext::conj(g.coefficients()(r, 0)) +
                          f.coefficients()(r, 1) * Eigen::numext::conj(g.coefficients()(r, 1));
      s += std::pow(lambda(r), n.value()) * pair;
    }
    return s;
  } else {
    return leftdef_inner_by_definition(f, g, n, cfg, spec);
  }
}

template <Differentiable F>
double leftdef_norm(const F& f, LeftDefIndex n, const SpectralConfig& cfg, const QuadratureSpec& spec = {}) {
  return std::sqrt(std::max(0.0, std::real(leftdef_inner(f, f, n, cfg, spec))));
}

/// Z_{m,n,branch} = lambda_m^{-n/2} z_{m,branch}, orthonormal in H_n.
template <typename Scalar = Complex>
TrigPolynomial<Scalar> scaled_basis(const Mode& mode, LeftDefIndex n, const SpectralConfig& cfg) {
  const double scale = std::pow(eigenvalue(cfg, mode.index()), -0.5 * n.value());
  return TrigPolynomial<Scalar>::basis(cfg, mode, Scalar(scale));
}

/// |(z_mode, f)_n - lambda_m^n (z_mode, f)_{L^2}|.
template <Differentiable F>
double fundamental_relation_defect(const Mode& mode, const F& f, LeftDefIndex n, const SpectralConfig& cfg,
                                   const QuadratureSpec& spec = {}) {
  using Scalar = std::decay_t<decltype(f(0.0))>;
  require_derivative(f, n.value());
  const auto z = TrigPolynomial<Scalar>::basis(cfg, mode);
  const double lambda_n = std::pow(eigenvalue(cfg, mode.index()), n.value());
  return std::abs(leftdef_inner(z, f, n, cfg, spec) - lambda_n * l2_inner(z, f, cfg, spec));
}

/// (f, f)_n - k^n (f, f)_{L^2}; nonnegative for every f in V_n.
/// |f^(j)(a) + f^(j)(b)| / ||f^(j)||_{L^2}, or divided by ||f||_{L^2} when
/// f^(j) vanishes. Scaling by the derivative itself keeps rounding in high
/// derivatives (which grow like w^j) below kBoundaryTolerance.
template <typename Scalar>
double normalized_boundary_defect(const FunctionHandle<Scalar>& f, const SpectralConfig& cfg, int j,
                                  const QuadratureSpec& spec = {}) {
  const double raw = boundary_antisymmetry_defect(f, cfg, j);
  if (raw == 0.0) return 0.0;
  double scale = std::sqrt(std::max(0.0, std::real(l2_inner_derivative(f, f, j, cfg, spec))));
  if (!(scale > 0.0)) scale = l2_norm(f, cfg, spec);
  return scale > 0.0 ? raw / scale : raw;
}

template <Differentiable F>
double lower_bound_margin(const F& f, LeftDefIndex n, const SpectralConfig& cfg, const QuadratureSpec& spec = {}) {
  require_derivative(f, n.value());
  return std::real(leftdef_inner(f, f, n, cfg, spec)) -
         std::pow(cfg.k(), n.value()) * std::real(l2_inner(f, f, cfg, spec));
}

/// sum_{m<=N} lambda_m^r (a_m(f) conj(a_m(g)) + b_m(f) conj(b_m(g))): the
/// coefficient-space form of (A^{r/2} f, A^{r/2} g) for any real r > 0.
/// Both vectors must hold classical coefficients.
template <typename Scalar>
Scalar spectral_inner_r(const CoeffVector<Scalar>& cf, const CoeffVector<Scalar>& cg, RPower r) {
  if (cf.size() != cg.size()) throw SpectralError(ErrorKind::TruncationMismatch, "coefficient vectors differ in N");
  if (!(cf.config() == cg.config())) throw SpectralError(ErrorKind::InvalidArgument, "coefficient vectors on different configs");
  if (!cf.is_classical() || !cg.is_classical()) {
    throw SpectralError(ErrorKind::InvalidArgument, "spectral_inner_r expects classical coefficients");
  }
  const Eigen::VectorXd lambda = eigenvalues(cf.config(), cf.size());
  Scalar s(0);
  for (int i = 0; i < cf.size(); ++i) {
    s += std::pow(lambda(i), r.value()) * (cf.cos_coeffs()(i) * Eigen::numext::conj(cg.cos_coeffs()(i)) +
                                           cf.sin_coeffs()(i) * Eigen::numext::conj(cg.sin_coeffs()(i)));
  }
  return s;
}

/// Position of (m, branch) in the 2N x 2N operator matrix.
inline Eigen::Index operator_matrix_index(const Mode& mode) {
  return 2 * (mode.index() - 1) + (mode.branch() == Branch::Cos ? 0 : 1);
}

/// [(A_n Z_{p,n,i}, Z_{q,n,j})_n] over modes 1..N and both branches, via
/// apply_ell then leftdef_inner in coefficient space.
Eigen::MatrixXd operator_matrix(LeftDefIndex n, int N, const SpectralConfig& cfg);

/// Same matrix with every (,)_n evaluated by quadrature of the derivative sum.
Eigen::MatrixXd operator_matrix(LeftDefIndex n, int N, const SpectralConfig& cfg, const QuadratureSpec& spec);

enum class Verdict { Member, NonMember, Inconclusive };
const char* to_string(Verdict v) noexcept;

struct MembershipReport {
  /// (j, normalized_boundary_defect(f, j)) when a handle was supplied.
  std::vector<std::pair<int, double>> boundary_defects;
  /// Least-squares slope of log|c_m|^2 against log lambda_m over the upper half of the modes.
  double decay_slope = -std::numeric_limits<double>::infinity();
  /// Slope of log lambda_m against log(2m-1) over the same modes (2 asymptotically).
  double growth_exponent = 2.0;
  /// Estimated sup{r : sum lambda_m^r |c_m|^2 < inf}; +inf for finitely supported data.
  double critical_r = std::numeric_limits<double>::infinity();
  std::map<int, Verdict> verdict_per_n;
};

/// Decay fit and verdicts from squared coefficient magnitudes |c_m|^2,
/// m = 1..N, plus optional normalized boundary defects for j = 0..nMax-1.
MembershipReport classify_from_magnitudes(const Eigen::VectorXd& squared_magnitudes, const SpectralConfig& cfg,
                                          int n_max, const std::optional<std::vector<double>>& normalized_defects);

/// Places f in the V_n ladder for n = 1..n_max. A verdict needs both the
/// boundary conditions f^(j)(a) = -f^(j)(b), j < n (when a handle is given)
/// and convergence of sum lambda_m^n |c_m|^2, judged from the decay rate.
template <typename Scalar>
MembershipReport membership_classify(const CoeffVector<Scalar>& cf, const FunctionHandle<Scalar>* f,
                                     const SpectralConfig& cfg, int n_max) {
  if (cf.size() < kMinClassifyModes) {
    throw SpectralError(ErrorKind::InsufficientModes,
                        "membership_classify needs N >= " + std::to_string(kMinClassifyModes));
  }
  if (!cf.is_classical()) throw SpectralError(ErrorKind::InvalidArgument, "membership_classify expects classical coefficients");
  if (n_max < 1) throw SpectralError(ErrorKind::InvalidArgument, "nMax must be >= 1");
  std::optional<std::vector<double>> defects;
  if (f != nullptr) {
    if (n_max > f->max_derivative() + 1) {
      throw SpectralError(ErrorKind::DerivativeUnavailable, "nMax exceeds handle derivatives + 1");
    }
    std::vector<double> d;
    for (int j = 0; j < n_max; ++j) d.push_back(normalized_boundary_defect(*f, cfg, j));
    defects = std::move(d);
  }
  return classify_from_magnitudes(cf.squared_magnitudes(), cfg, n_max, defects);
}

template <typename Scalar>
MembershipReport membership_classify(const CoeffVector<Scalar>& cf, const SpectralConfig& cfg, int n_max) {
  return membership_classify<Scalar>(cf, nullptr, cfg, n_max);
}

struct DomainVerdict {
  int order = 2;                     ///< the space V_order that was tested (n + 2)
  bool member = false;               ///< f in V_{n+2} = D(A_n)  (n = 0: V_2 = D(A))
  bool square_root_domain = false;  ///< f in V_1 = D(A^{1/2})
  std::vector<double> defects;       ///< normalized boundary defects, j = 0..n+1
};

/// Checks f against V_{n+2}, the domain of A_n; n = 0 checks V_2 = D(A).
template <typename Scalar>
DomainVerdict domain_indicator(const FunctionHandle<Scalar>& f, int n, const SpectralConfig& cfg,
                               const QuadratureSpec& spec = {}) {
  if (n < 0) throw SpectralError(ErrorKind::InvalidArgument, "domain_indicator needs n >= 0");
  f.require_derivative(n + 2);
  DomainVerdict out;
  out.order = n + 2;
  for (int j = 0; j <= n + 1; ++j) out.defects.push_back(normalized_boundary_defect(f, cfg, j, spec));
  auto square_integrable = [&](int d) {
    try {
      return std::isfinite(std::real(l2_inner_derivative(f, f, d, cfg, spec)));
    } catch (const SpectralError& e) {
      if (e.kind() == ErrorKind::NonFiniteIntegrand) return false;
      throw;
    }
  };
  bool ok = true;
  for (double d : out.defects) ok = ok && d <= kBoundaryTolerance;
  out.member = ok && square_integrable(n + 2);
  out.square_root_domain = out.defects[0] <= kBoundaryTolerance && square_integrable(1);
  return out;
}

}  // namespace semiperiodic

#endif  // SEMIPERIODIC_LEFTDEF_HPP
