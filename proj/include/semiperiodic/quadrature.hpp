#ifndef SEMIPERIODIC_QUADRATURE_HPP
#define SEMIPERIODIC_QUADRATURE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <type_traits>

#include "semiperiodic/config.hpp"
#include "semiperiodic/differentiable.hpp"

namespace semiperiodic {

/// Fixed composite Gauss-Legendre rule: `panels` equal subintervals with
/// `nodes_per_panel` nodes each.
struct QuadratureSpec {
  int panels = 64;
  int nodes_per_panel = 10;
  double abs_tol = 1e-10;

  void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Cached per order; safe under concurrent first use. Nodes ascend.
const GaussLegendreRule& gauss_legendre(int order);

/// `spec` with enough panels that a trig factor of mode `max_mode` turns
/// through at most 3 radians per panel. Never lowers spec.panels.
QuadratureSpec resolved_for(const QuadratureSpec& spec, int max_mode);

/// Composite Gauss-Legendre approximation of the integral of g over [a,b].
/// Panels and nodes are visited in ascending order.
template <typename G>
auto integrate(G&& g, const SpectralConfig& cfg, const QuadratureSpec& spec) {
  using Result = std::decay_t<decltype(g(0.0))>;
  spec.validate();
  const GaussLegendreRule& rule = gauss_legendre(spec.nodes_per_panel);
  const double h = cfg.length() / spec.panels;
  Result total(0);
  for (int p = 0; p < spec.panels; ++p) {
    const double left = cfg.a() + p * h;
    const double mid = left + 0.5 * h;
    Result panel(0);
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + 0.5 * h * rule.nodes(i);
      const Result v = g(x);
      if (!std::isfinite(std::abs(v))) {
        throw SpectralError(ErrorKind::NonFiniteIntegrand, "integrand not finite at x=" + std::to_string(x));
      }
      panel += rule.weights(i) * v;
    }
    total += 0.5 * h * panel;
  }
  return total;
}

template <typename F, typename G>
using inner_scalar_t = std::common_type_t<std::decay_t<decltype(std::declval<const F&>()(0.0))>,
                                          std::decay_t<decltype(std::declval<const G&>()(0.0))>>;

/// (f^(d), g^(d))_{L^2} = integral of f^(d) conj(g^(d)). Exact in coefficient
/// space when both are trig polynomials; composite quadrature otherwise.
template <Differentiable F, Differentiable G>
auto l2_inner_derivative(const F& f, const G& g, int d, const SpectralConfig& cfg, const QuadratureSpec& spec) {
  using Scalar = inner_scalar_t<F, G>;
  require_derivative(f, d);
  require_derivative(g, d);
  if constexpr (is_trig_polynomial_v<F> && is_trig_polynomial_v<G>) {
    f.require_same_config(g);
    const auto fd = derivative(f, d);
    const auto gd = derivative(g, d);
    const Eigen::Index rows = std::min(fd.coefficients().rows(), gd.coefficients().rows());
    Scalar s(0);
    for (Eigen::Index r = 0; r < rows; ++r) {
      s += fd.coefficients()(r, 0) * Eigen::numext::conj(gd.coefficients()(r, 0));
      s += fd.coefficients()(r, 1) * Eigen::numext::conj(gd.coefficients()(r, 1));
    }
    return s;
  } else {
    const QuadratureSpec rs = resolved_for(spec, highest_mode_of(f) + highest_mode_of(g));
    return integrate(
        [&](double x) -> Scalar {
          return Scalar(f.derivative_at(x, d)) * Eigen::numext::conj(Scalar(g.derivative_at(x, d)));
        },
        cfg, rs);
  }
}

/// (f, g)_{L^2[a,b]}.
template <Differentiable F, Differentiable G>
auto l2_inner(const F& f, const G& g, const SpectralConfig& cfg, const QuadratureSpec& spec = {}) {
  return l2_inner_derivative(f, g, 0, cfg, spec);
}

template <Differentiable F>
double l2_norm(const F& f, const SpectralConfig& cfg, const QuadratureSpec& spec = {}) {
  return std::sqrt(std::max(0.0, std::real(l2_inner(f, f, cfg, spec))));
}

}  // namespace semiperiodic

#endif  // SEMIPERIODIC_QUADRATURE_HPP
