#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "semiperiodic/trig_polynomial.hpp"

using namespace semiperiodic;
using fixtures::pi;

namespace {

void check_coefficients(const TrigPolynomiald& p, std::initializer_list<std::pair<Mode, double>> want) {
  TrigPolynomiald expected(p.config());
  for (const auto& [mode, c] : want) expected.coefficient(mode) = c;
  const int rows = std::max(p.max_mode(), expected.max_mode());
  for (int m = 1; m <= rows; ++m) {
    for (Branch br : {Branch::Cos, Branch::Sin}) {
      CHECK(p.coefficient(Mode(m, br)) == doctest::Approx(expected.coefficient(Mode(m, br))).epsilon(1e-14));
    }
  }
}

}  // namespace

TEST_CASE("evaluation is the sum of normalized basis functions") {
  const auto cfg = fixtures::unit_config();
  TrigPolynomiald p(cfg);
  p.coefficient(Mode(1, Branch::Cos)) = 2.0;
  p.coefficient(Mode(3, Branch::Sin)) = -0.5;
  for (double x : {0.0, 0.4, 2.0, pi}) {
    for (int d = 0; d <= 3; ++d) {
      const double want = 2.0 * basis_eval(cfg, Mode(1, Branch::Cos), x, d) - 0.5 * basis_eval(cfg, Mode(3, Branch::Sin), x, d);
      CHECK(p.derivative_at(x, d) == doctest::Approx(want).epsilon(1e-13));
      CHECK(derivative(p, d)(x) == doctest::Approx(want).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(p(-0.1), SpectralError);
}

TEST_CASE("apply_ell acts diagonally") {
  const auto cfg = fixtures::unit_config();
  const auto z1c = TrigPolynomiald::basis(cfg, Mode(1, Branch::Cos));
  const auto z2s = TrigPolynomiald::basis(cfg, Mode(2, Branch::Sin));
  check_coefficients(apply_ell(z1c), {{Mode(1, Branch::Cos), 2.0}});
  check_coefficients(apply_ell(TrigPolynomiald(cfg)), {});
  check_coefficients(apply_ell(z1c + z2s), {{Mode(1, Branch::Cos), 2.0}, {Mode(2, Branch::Sin), 10.0}});
}

TEST_CASE("apply_ell matches -p'' + k p pointwise") {
  const SpectralConfig cfg(-1.0, 1.0, 3.0);
  std::mt19937 rng(7);
  const auto p = fixtures::random_trig(rng, cfg);
  const auto lp = apply_ell(p);
  for (double x : {-1.0, -0.3, 0.5, 1.0}) {
    const Complex want = -p.derivative_at(x, 2) + cfg.k() * p(x);
    CHECK(std::abs(lp(x) - want) <= 1e-10 * (1 + std::abs(want)));
  }
}

TEST_CASE("apply_ell_power examples") {
  const auto cfg = fixtures::unit_config();
  const auto z2c = TrigPolynomiald::basis(cfg, Mode(2, Branch::Cos));
  check_coefficients(apply_ell_power(z2c, 2), {{Mode(2, Branch::Cos), 100.0}});

  const auto z1s = TrigPolynomiald::basis(cfg, Mode(1, Branch::Sin));
  check_coefficients(apply_ell_power(z1s, 1), {{Mode(1, Branch::Sin), apply_ell(z1s).coefficient(Mode(1, Branch::Sin))}});

  // Oracle: three applications of l, lambda_3 = 26.
  const auto p = TrigPolynomiald::basis(cfg, Mode(1, Branch::Cos)) + TrigPolynomiald::basis(cfg, Mode(3, Branch::Cos));
  const auto oracle = apply_ell(apply_ell(apply_ell(p)));
  CHECK(oracle.coefficient(Mode(3, Branch::Cos)) == doctest::Approx(17576.0));
  check_coefficients(apply_ell_power(p, 3), {{Mode(1, Branch::Cos), 8.0}, {Mode(3, Branch::Cos), 17576.0}});
}

TEST_CASE("binomial and iterated powers of l agree on random trig polynomials") {
  std::mt19937 rng(2024);
  for (const auto& cfg : {fixtures::unit_config(), SpectralConfig(0, 2 * pi, 0.5), SpectralConfig(-1, 1, 3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto p = fixtures::random_trig(rng, cfg, 10, 12);
      for (int n = 1; n <= 5; ++n) {
        const auto binom = apply_ell_power(p, n);
        const auto iter = apply_ell_iterated(p, n);
        REQUIRE(binom.max_mode() == iter.max_mode());
        const double diff = (binom.coefficients() - iter.coefficients()).cwiseAbs().maxCoeff();
        const double scale = iter.coefficients().cwiseAbs().maxCoeff();
        CHECK(diff <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("arithmetic grows storage and checks configs") {
  const auto cfg = fixtures::unit_config();
  auto p = TrigPolynomiald::basis(cfg, Mode(1, Branch::Cos));
  p += TrigPolynomiald::basis(cfg, Mode(5, Branch::Sin), 2.0);
  CHECK(p.max_mode() == 5);
  CHECK(p.coefficient(Mode(5, Branch::Sin)) == 2.0);
  CHECK(p.coefficient(Mode(9, Branch::Cos)) == 0.0);
  const auto q = p - p;
  CHECK(q.coefficients().cwiseAbs().maxCoeff() == 0.0);
  const auto other = TrigPolynomiald::basis(SpectralConfig(0, 1, 1), Mode(1, Branch::Cos));
  CHECK_THROWS_AS(p += other, SpectralError);
}

TEST_CASE("odd derivatives swap branches") {
  const auto cfg = fixtures::unit_config();
  const auto d = derivative(TrigPolynomiald::basis(cfg, Mode(2, Branch::Cos)));
  CHECK(d.coefficient(Mode(2, Branch::Cos)) == 0.0);
  CHECK(d.coefficient(Mode(2, Branch::Sin)) == doctest::Approx(-3.0));
}
