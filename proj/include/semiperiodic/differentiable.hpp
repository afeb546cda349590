#ifndef SEMIPERIODIC_DIFFERENTIABLE_HPP
#define SEMIPERIODIC_DIFFERENTIABLE_HPP

#include <climits>
#include <type_traits>

#include "semiperiodic/function_handle.hpp"
#include "semiperiodic/trig_polynomial.hpp"

namespace semiperiodic {

template <typename T>
struct is_trig_polynomial : std::false_type {};
template <typename Scalar>
struct is_trig_polynomial<TrigPolynomial<Scalar>> : std::true_type {};

template <typename T>
struct is_function_handle : std::false_type {};
template <typename Scalar>
struct is_function_handle<FunctionHandle<Scalar>> : std::true_type {};

template <typename T>
inline constexpr bool is_trig_polynomial_v = is_trig_polynomial<std::remove_cvref_t<T>>::value;

/// Either a TrigPolynomial or a FunctionHandle.
template <typename T>
concept Differentiable = is_trig_polynomial_v<T> || is_function_handle<std::remove_cvref_t<T>>::value;

template <typename Scalar>
int max_derivative_of(const TrigPolynomial<Scalar>&) noexcept {
  return INT_MAX;
}
template <typename Scalar>
int max_derivative_of(const FunctionHandle<Scalar>& f) noexcept {
  return f.max_derivative();
}

/// Highest trig mode present; 0 for a general handle.
template <typename Scalar>
int highest_mode_of(const TrigPolynomial<Scalar>& p) noexcept {
  return p.max_mode();
}
template <typename Scalar>
int highest_mode_of(const FunctionHandle<Scalar>&) noexcept {
  return 0;
}

template <Differentiable F>
void require_derivative(const F& f, int d) {
  if (d > max_derivative_of(f)) {
    throw SpectralError(ErrorKind::DerivativeUnavailable,
                        "derivative of order " + std::to_string(d) + " is not available");
  }
}

}  // namespace semiperiodic

#endif  // SEMIPERIODIC_DIFFERENTIABLE_HPP
