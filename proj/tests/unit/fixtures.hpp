// Shared test fixtures and closed-form oracles. Everything here is written
// from antiderivatives and series sums, independent of the library's
// quadrature and coefficient code paths.
#ifndef SEMIPERIODIC_TESTS_FIXTURES_HPP
#define SEMIPERIODIC_TESTS_FIXTURES_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "semiperiodic/expansion.hpp"
#include "semiperiodic/function_handle.hpp"
#include "semiperiodic/trig_polynomial.hpp"

namespace fixtures {

using namespace semiperiodic;
inline constexpr double pi = std::numbers::pi;

inline SpectralConfig unit_config() { return SpectralConfig(0.0, pi, 1.0); }

/// f(x) = x - (a+b)/2 with all derivatives.
inline FunctionHandled sawtooth(const SpectralConfig& cfg, int max_deriv = 8) {
  std::vector<FunctionHandled::Evaluator> ev;
  const double c = cfg.midpoint();
  ev.emplace_back([c](double x) { return x - c; });
  if (max_deriv >= 1) ev.emplace_back([](double) { return 1.0; });
  for (int d = 2; d <= max_deriv; ++d) ev.emplace_back([](double) { return 0.0; });
  return FunctionHandled(std::move(ev));
}

/// f(x) = cos(x) (x - (a+b)/2);  f^(d) = cos^(d)(x) (x - c) + d cos^(d-1)(x).
inline FunctionHandled offset_cosine(const SpectralConfig& cfg, int max_deriv = 8) {
  const double c = cfg.midpoint();
  auto cos_deriv = [](double x, int d) {
    switch (((d % 4) + 4) % 4) {
      case 0: return std::cos(x);
      case 1: return -std::sin(x);
      case 2: return -std::cos(x);
      default: return std::sin(x);
    }
  };
  std::vector<FunctionHandled::Evaluator> ev;
  for (int d = 0; d <= max_deriv; ++d) {
    ev.emplace_back([=](double x) { return cos_deriv(x, d) * (x - c) + (d > 0 ? d * cos_deriv(x, d - 1) : 0.0); });
  }
  return FunctionHandled(std::move(ev));
}

/// Antiderivative oracle: a_m = -2 s cos(w a)/w^2, b_m = -2 s sin(w a)/w^2
/// for the sawtooth on [a,b], s = sqrt(2/(b-a)), w = (2m-1) pi/(b-a).
inline CoeffVectord sawtooth_coeffs(const SpectralConfig& cfg, int N) {
  auto cv = CoeffVectord::zero(cfg, N);
  const double s = std::sqrt(2.0 / cfg.length());
  for (int m = 1; m <= N; ++m) {
    const double w = (2.0 * m - 1.0) * pi / cfg.length();
    cv.cos_coeffs()(m - 1) = -2.0 * s * std::cos(w * cfg.a()) / (w * w);
    cv.sin_coeffs()(m - 1) = -2.0 * s * std::sin(w * cfg.a()) / (w * w);
  }
  return cv;
}

/// |c_m| = lambda_m^{-p/2} on the cos branch.
inline CoeffVectord synthetic_coeffs(const SpectralConfig& cfg, int N, double p) {
  auto cv = CoeffVectord::zero(cfg, N);
  for (int m = 1; m <= N; ++m) {
    const double w = (2.0 * m - 1.0) * pi / cfg.length();
    cv.cos_coeffs()(m - 1) = std::pow(w * w + cfg.k(), -0.5 * p);
  }
  return cv;
}

/// Random trig polynomial with at most `max_terms` nonzero complex terms on modes 1..max_mode.
inline TrigPolynomialcd random_trig(std::mt19937& rng, const SpectralConfig& cfg, int max_terms = 10,
                                    int max_mode = 12) {
  std::uniform_int_distribution<int> terms(1, max_terms), mode(1, max_mode), branch(0, 1);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  TrigPolynomialcd p(cfg);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    p.coefficient(Mode(mode(rng), branch(rng) ? Branch::Sin : Branch::Cos)) = Complex(coef(rng), coef(rng));
  }
  return p;
}

}  // namespace fixtures

#endif  // SEMIPERIODIC_TESTS_FIXTURES_HPP
