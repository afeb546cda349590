#ifndef SEMIPERIODIC_FUNCTION_HANDLE_HPP
#define SEMIPERIODIC_FUNCTION_HANDLE_HPP

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "semiperiodic/config.hpp"
#include "semiperiodic/trig_polynomial.hpp"

namespace semiperiodic {

/// A function on [a,b] together with explicitly supplied derivatives
/// f, f', ..., f^(max_derivative()). No derivative is ever approximated.
template <typename Scalar>
class FunctionHandle {
 public:
  using Evaluator = std::function<Scalar(double)>;

  explicit FunctionHandle(std::vector<Evaluator> evaluators) : evaluators_(std::move(evaluators)) {
    if (evaluators_.empty()) throw SpectralError(ErrorKind::InvalidArgument, "function handle needs f itself");
    for (const auto& e : evaluators_) {
      if (!e) throw SpectralError(ErrorKind::InvalidArgument, "empty evaluator in function handle");
    }
  }

  /// Handle backed by a trig polynomial, exposing derivatives 0..max_derivative.
  static FunctionHandle from_trig(const TrigPolynomial<Scalar>& p, int max_derivative) {
    std::vector<Evaluator> ev;
    ev.reserve(max_derivative + 1);
    for (int d = 0; d <= max_derivative; ++d) {
      ev.emplace_back([q = derivative(p, d)](double x) { return q(x); });
    }
    return FunctionHandle(std::move(ev));
  }

  int max_derivative() const noexcept { return static_cast<int>(evaluators_.size()) - 1; }

  Scalar operator()(double x) const { return evaluators_.front()(x); }

  Scalar derivative_at(double x, int d) const {
    require_derivative(d);
    return evaluators_[d](x);
  }

  void require_derivative(int d) const {
    if (d < 0 || d > max_derivative()) {
      throw SpectralError(ErrorKind::DerivativeUnavailable,
                          "derivative of order " + std::to_string(d) + " requested, handle supplies up to " +
                              std::to_string(max_derivative()));
    }
  }

 private:
  std::vector<Evaluator> evaluators_;
};

using FunctionHandled = FunctionHandle<double>;
using FunctionHandlecd = FunctionHandle<Complex>;

/// |f^(j)(a) + f^(j)(b)|; zero exactly when f^(j) satisfies the semi-periodic condition.
template <typename Scalar>
double boundary_antisymmetry_defect(const FunctionHandle<Scalar>& f, const SpectralConfig& cfg, int j) {
  f.require_derivative(j);
  return std::abs(f.derivative_at(cfg.a(), j) + f.derivative_at(cfg.b(), j));
}

template <typename Scalar>
double boundary_antisymmetry_defect(const TrigPolynomial<Scalar>& p, int j) {
  return std::abs(p.derivative_at(p.config().a(), j) + p.derivative_at(p.config().b(), j));
}

}  // namespace semiperiodic

#endif  // SEMIPERIODIC_FUNCTION_HANDLE_HPP
