#ifndef SEMIPERIODIC_EXPANSION_HPP
#define SEMIPERIODIC_EXPANSION_HPP

#include <Eigen/Dense>
#include <cmath>
#include <optional>

#include "semiperiodic/coeff_vector.hpp"
#include "semiperiodic/leftdef.hpp"
#include "semiperiodic/quadrature.hpp"

namespace semiperiodic {

enum class CoeffMethod { Direct, Rescale };

/// a_m = (f, z_{m,Cos}), b_m = (f, z_{m,Sin}) for m = 1..N.
template <typename Scalar>
CoeffVector<Scalar> classical_coeffs(const FunctionHandle<Scalar>& f, int N, const SpectralConfig& cfg,
                                     const QuadratureSpec& spec = {}) {
  if (N < 1) throw SpectralError(ErrorKind::InvalidArgument, "classical_coeffs needs N >= 1");
  const QuadratureSpec rs = resolved_for(spec, N);
  auto out = CoeffVector<Scalar>::zero(cfg, N);
  for (int m = 1; m <= N; ++m) {
    const Mode c(m, Branch::Cos), s(m, Branch::Sin);
    out.cos_coeffs()(m - 1) = integrate([&](double x) { return f(x) * basis_eval(cfg, c, x, 0); }, cfg, rs);
    out.sin_coeffs()(m - 1) = integrate([&](double x) { return f(x) * basis_eval(cfg, s, x, 0); }, cfg, rs);
  }
  return out;
}

/// Coefficients of a trig polynomial, read off exactly.
template <typename Scalar>
CoeffVector<Scalar> classical_coeffs(const TrigPolynomial<Scalar>& p, int N) {
  if (N < 1) throw SpectralError(ErrorKind::InvalidArgument, "classical_coeffs needs N >= 1");
  auto out = CoeffVector<Scalar>::zero(p.config(), N);
  const int rows = std::min(N, p.max_mode());
  out.cos_coeffs().head(rows) = p.coefficients().col(0).head(rows);
  out.sin_coeffs().head(rows) = p.coefficients().col(1).head(rows);
  return out;
}

/// A_{m,n} = lambda_m^{n/2} a_m, B_{m,n} = lambda_m^{n/2} b_m.
template <typename Scalar>
CoeffVector<Scalar> rescale_to_ladder(const CoeffVector<Scalar>& classical, LeftDefIndex n) {
  if (!classical.is_classical()) throw SpectralError(ErrorKind::InvalidArgument, "rescale expects classical coefficients");
  const Eigen::ArrayXd scale = eigenvalues(classical.config(), classical.size()).array().pow(0.5 * n.value());
  return CoeffVector<Scalar>(classical.config(), (classical.cos_coeffs().array() * scale.cast<Scalar>()).matrix(),
                             (classical.sin_coeffs().array() * scale.cast<Scalar>()).matrix(), n.value());
}

/// Left-definite coefficients A_{m,n}, B_{m,n} of f against E_n.
/// Direct: (f, Z_{m,n,j})_n by quadrature of the derivative sum.
/// Rescale: lambda_m^{n/2} times the classical coefficients.
template <typename Scalar>
CoeffVector<Scalar> leftdef_coeffs(const FunctionHandle<Scalar>& f, int N, LeftDefIndex n, const SpectralConfig& cfg,
                                   const QuadratureSpec& spec = {}, CoeffMethod method = CoeffMethod::Direct) {
  if (method == CoeffMethod::Rescale) return rescale_to_ladder(classical_coeffs(f, N, cfg, spec), n);
  if (N < 1) throw SpectralError(ErrorKind::InvalidArgument, "leftdef_coeffs needs N >= 1");
  f.require_derivative(n.value());
  const QuadratureSpec rs = resolved_for(spec, N);
  auto out = CoeffVector<Scalar>::zero(cfg, N, n.value());
  for (int m = 1; m <= N; ++m) {
    const double scale = std::pow(eigenvalue(cfg, m), -0.5 * n.value());
    for (Branch br : {Branch::Cos, Branch::Sin}) {
      const Mode mode(m, br);
      Scalar sum(0);
      for (int j = 0; j <= n.value(); ++j) {
        const double w = binomial(n.value(), j) * std::pow(cfg.k(), n.value() - j);
        sum += w * integrate([&](double x) { return f.derivative_at(x, j) * basis_eval(cfg, mode, x, j); }, cfg, rs);
      }
      (br == Branch::Cos ? out.cos_coeffs() : out.sin_coeffs())(m - 1) = scale * sum;
    }
  }
  return out;
}

/// s_M = sum_{m<=M} a_m z_{m,Cos} + b_m z_{m,Sin}. The same trig polynomial
/// serves as partial sum in every H_n; only the norm used to measure it changes.
template <typename Scalar>
TrigPolynomial<Scalar> partial_sum(const CoeffVector<Scalar>& cv, int M) {
  if (M < 1) throw SpectralError(ErrorKind::InvalidArgument, "partial sum needs M >= 1");
  if (M > cv.size()) throw SpectralError(ErrorKind::TruncationExceeded, "M exceeds truncation N");
  if (!cv.is_classical()) throw SpectralError(ErrorKind::InvalidArgument, "partial sums are built from classical coefficients");
  typename TrigPolynomial<Scalar>::Coefficients c(M, 2);
  c.col(0) = cv.cos_coeffs().head(M);
  c.col(1) = cv.sin_coeffs().head(M);
  return TrigPolynomial<Scalar>(cv.config(), std::move(c));
}

/// ||f - s_M|| in L^2 (n absent) or in ||.||_n.
template <Differentiable F, typename Scalar>
double expansion_error(const F& f, const CoeffVector<Scalar>& cv, int M, std::optional<LeftDefIndex> n,
                       const SpectralConfig& cfg, const QuadratureSpec& spec = {}) {
  const TrigPolynomial<Scalar> s = partial_sum(cv, M);
  if constexpr (is_trig_polynomial_v<F>) {
    const TrigPolynomial<Scalar> r = f - s;
    return n ? leftdef_norm(r, *n, cfg) : l2_norm(r, cfg);
  } else {
    const int top = n ? n->value() : 0;
    f.require_derivative(top);
    std::vector<typename FunctionHandle<Scalar>::Evaluator> ev;
    for (int d = 0; d <= top; ++d) {
      ev.emplace_back([&f, sd = derivative(s, d), d](double x) { return Scalar(f.derivative_at(x, d)) - sd(x); });
    }
    const FunctionHandle<Scalar> residual(std::move(ev));
    const QuadratureSpec rs = resolved_for(spec, 2 * M);
    return n ? leftdef_norm(residual, *n, cfg, rs) : l2_norm(residual, cfg, rs);
  }
}

/// sqrt(sum_{M<m<=N} lambda_m^n (|a_m|^2 + |b_m|^2)): the expansion error read
/// from known coefficients, accurate up to the truncation tail beyond N.
template <typename Scalar>
double tail_error(const CoeffVector<Scalar>& cv, int M, std::optional<LeftDefIndex> n) {
  if (M < 0 || M > cv.size()) throw SpectralError(ErrorKind::TruncationExceeded, "M exceeds truncation N");
  if (!cv.is_classical()) throw SpectralError(ErrorKind::InvalidArgument, "tail_error expects classical coefficients");
  const Eigen::VectorXd c2 = cv.squared_magnitudes();
  double s = 0.0;
  for (int m = M + 1; m <= cv.size(); ++m) {
    s += (n ? std::pow(eigenvalue(cv.config(), m), n->value()) : 1.0) * c2(m - 1);
  }
  return std::sqrt(s);
}

/// Running sums P_M = sum_{m<=M} |coefficient_m|^2 in the designated norm.
/// Classical vectors are weighted by lambda_m^n when n is given; ladder-n
/// vectors are summed as they stand.
template <typename Scalar>
Eigen::VectorXd parseval_partial_sums(const CoeffVector<Scalar>& cv, std::optional<LeftDefIndex> n) {
  Eigen::VectorXd c2 = cv.squared_magnitudes();
  if (cv.ladder()) {
    if (!n || n->value() != *cv.ladder()) {
      throw SpectralError(ErrorKind::InvalidArgument, "coefficient ladder index does not match requested norm");
    }
  } else if (n) {
    c2.array() *= eigenvalues(cv.config(), cv.size()).array().pow(n->value());
  }
  Eigen::VectorXd out(c2.size());
  double running = 0.0;
  for (Eigen::Index i = 0; i < c2.size(); ++i) out(i) = (running += c2(i));
  return out;
}

/// ||f||^2 - sum_{m<=N} |coefficients|^2; nonnegative (Bessel) and tending to 0.
template <Differentiable F, typename Scalar>
double parseval_defect(const F& f, const CoeffVector<Scalar>& cv, std::optional<LeftDefIndex> n,
                       const SpectralConfig& cfg, const QuadratureSpec& spec = {}) {
  const double norm2 = n ? std::real(leftdef_inner(f, f, *n, cfg, spec)) : std::real(l2_inner(f, f, cfg, spec));
  const Eigen::VectorXd partial = parseval_partial_sums(cv, n);
  return norm2 - partial(partial.size() - 1);
}

}  // namespace semiperiodic

#endif  // SEMIPERIODIC_EXPANSION_HPP
