#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "semiperiodic/expansion.hpp"
#include "semiperiodic/leftdef.hpp"

using namespace semiperiodic;
using fixtures::pi;

namespace {

// (8/pi) sum_{m>M} lambda_m^n (2m-1)^{-4} on (0, pi, 1), summed far out.
double sawtooth_tail_oracle(int M, int n) {
  const int cut = 2000000;
  double s = n == 1 ? (8 / pi) / (4.0 * cut) : 0.0;  // sum_{m>cut} (2m-1)^{-2} ~ 1/(4 cut)
  for (int m = cut; m > M; --m) {
    const double o = 2.0 * m - 1;
    s += (8 / pi) * std::pow(o * o + 1, n) / std::pow(o, 4);
  }
  return s;
}

}  // namespace

TEST_CASE("classical coefficients") {
  const auto cfg = fixtures::unit_config();
  const auto e = classical_coeffs(FunctionHandled::from_trig(TrigPolynomiald::basis(cfg, Mode(1, Branch::Cos)), 0), 8, cfg);
  CHECK(e.cos_coeffs()(0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(e.cos_coeffs().tail(7).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK(e.sin_coeffs().cwiseAbs().maxCoeff() <= 1e-13);

  const auto saw = classical_coeffs(fixtures::sawtooth(cfg), 40, cfg);
  const auto oracle = fixtures::sawtooth_coeffs(cfg, 40);
  CHECK(saw.cos_coeffs()(0) == doctest::Approx(-1.59577).epsilon(1e-5));
  CHECK((saw.cos_coeffs() - oracle.cos_coeffs()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(saw.sin_coeffs().cwiseAbs().maxCoeff() <= 1e-12);

  TrigPolynomiald p = 3.0 * TrigPolynomiald::basis(cfg, Mode(2, Branch::Sin)) - TrigPolynomiald::basis(cfg, Mode(4, Branch::Cos));
  const auto lin = classical_coeffs(FunctionHandled::from_trig(p, 0), 6, cfg);
  CHECK(lin.sin_coeffs()(1) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(lin.cos_coeffs()(3) == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(std::abs(lin.cos_coeffs()(0)) + std::abs(lin.sin_coeffs()(3)) <= 1e-13);

  // Shifted and stretched interval: the oracle carries the phase w a.
  const SpectralConfig off(-1.3, 2.1, 0.4);
  const auto shifted = classical_coeffs(fixtures::sawtooth(off), 30, off);
  const auto shifted_oracle = fixtures::sawtooth_coeffs(off, 30);
  CHECK((shifted.cos_coeffs() - shifted_oracle.cos_coeffs()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((shifted.sin_coeffs() - shifted_oracle.sin_coeffs()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("left-definite coefficients: examples and rescale identity") {
  const auto cfg = fixtures::unit_config();
  const auto z1 = FunctionHandled::from_trig(TrigPolynomiald::basis(cfg, Mode(1, Branch::Cos)), 4);
  for (CoeffMethod method : {CoeffMethod::Direct, CoeffMethod::Rescale}) {
    const auto A = leftdef_coeffs(z1, 4, LeftDefIndex(2), cfg, {}, method);
    CHECK(A.ladder() == 2);
    CHECK(A.cos_coeffs()(0) == doctest::Approx(2.0).epsilon(1e-12));
  }
  const auto saw = fixtures::sawtooth(cfg);
  for (CoeffMethod method : {CoeffMethod::Direct, CoeffMethod::Rescale}) {
    CHECK(leftdef_coeffs(saw, 4, LeftDefIndex(1), cfg, {}, method).cos_coeffs()(0) ==
          doctest::Approx(-4 / std::sqrt(pi)).epsilon(1e-10));
  }
  const FunctionHandled zero({[](double) { return 0.0; }, [](double) { return 0.0; }});
  CHECK(leftdef_coeffs(zero, 5, LeftDefIndex(1), cfg, {}, CoeffMethod::Direct).cos_coeffs().cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(leftdef_coeffs(fixtures::sawtooth(cfg, 0), 4, LeftDefIndex(1), cfg, {}, CoeffMethod::Direct),
                  SpectralError);

  auto agree = [](const CoeffVectord& d, const CoeffVectord& r) {
    for (int i = 0; i < d.size(); ++i) {
      CHECK(std::abs(d.cos_coeffs()(i) - r.cos_coeffs()(i)) <= 1e-7 * (1 + std::abs(r.cos_coeffs()(i))));
      CHECK(std::abs(d.sin_coeffs()(i) - r.sin_coeffs()(i)) <= 1e-7 * (1 + std::abs(r.sin_coeffs()(i))));
    }
  };
  for (const SpectralConfig& c : {cfg, SpectralConfig(-1, 1, 3)}) {
    const auto f = fixtures::sawtooth(c);
    agree(leftdef_coeffs(f, 12, LeftDefIndex(1), c, {}, CoeffMethod::Direct),
          leftdef_coeffs(f, 12, LeftDefIndex(1), c, {}, CoeffMethod::Rescale));
  }
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    TrigPolynomiald p(cfg);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int m = 1; m <= 6; ++m) p.coefficient(Mode(m, t % 2 ? Branch::Sin : Branch::Cos)) = u(rng);
    const auto h = FunctionHandled::from_trig(p, 4);
    for (int n = 1; n <= 3; ++n) {
      agree(leftdef_coeffs(h, 12, LeftDefIndex(n), cfg, {}, CoeffMethod::Direct),
            leftdef_coeffs(h, 12, LeftDefIndex(n), cfg, {}, CoeffMethod::Rescale));
    }
  }
}

TEST_CASE("partial sums") {
  const auto cfg = fixtures::unit_config();
  const auto z3 = TrigPolynomiald::basis(cfg, Mode(3, Branch::Sin));
  const auto cv = classical_coeffs(z3, 6);
  for (int M = 3; M <= 6; ++M) {
    const auto s = partial_sum(cv, M);
    CHECK(s.coefficient(Mode(3, Branch::Sin)) == 1.0);
    CHECK(leftdef_norm(s - z3, LeftDefIndex(1), cfg) == 0.0);
  }
  const auto saw = fixtures::sawtooth_coeffs(cfg, 10);
  const auto s1 = partial_sum(saw, 1);
  CHECK(s1.max_mode() == 1);
  CHECK(s1.coefficient(Mode(1, Branch::Cos)) == doctest::Approx(-2 * std::sqrt(2 / pi)));
  CHECK_THROWS_AS(partial_sum(saw, 0), SpectralError);
  try {
    (void)partial_sum(saw, 11);
  } catch (const SpectralError& e) {
    CHECK(e.kind() == ErrorKind::TruncationExceeded);
  }
  CHECK_THROWS_AS(partial_sum(rescale_to_ladder(saw, LeftDefIndex(1)), 2), SpectralError);
}

TEST_CASE("idempotence: coefficients of a partial sum") {
  std::mt19937 rng(23);
  const SpectralConfig cfg(0.5, 3.0, 1.5);
  for (int t = 0; t < 20; ++t) {
    const auto p = fixtures::random_trig(rng, cfg, 10, 20);
    const auto cv = classical_coeffs(p, 20);
    for (int M : {1, 5, 13, 20}) {
      const auto back = classical_coeffs(partial_sum(cv, M), M);
      CHECK(back.cos_coeffs() == cv.cos_coeffs().head(M));
      CHECK(back.sin_coeffs() == cv.sin_coeffs().head(M));
    }
  }
}

TEST_CASE("expansion error") {
  const auto cfg = fixtures::unit_config();
  const auto z2 = TrigPolynomiald::basis(cfg, Mode(2, Branch::Cos));
  const auto cz = classical_coeffs(z2, 4);
  for (int M = 2; M <= 4; ++M) {
    CHECK(expansion_error(z2, cz, M, std::nullopt, cfg) == 0.0);
    for (int n = 1; n <= 3; ++n) CHECK(expansion_error(z2, cz, M, LeftDefIndex(n), cfg) == 0.0);
    CHECK(expansion_error(FunctionHandled::from_trig(z2, 3), cz, M, LeftDefIndex(3), cfg) <= 1e-10);
  }

  const auto saw = fixtures::sawtooth(cfg);
  const auto cv = fixtures::sawtooth_coeffs(cfg, 60);
  const double e1 = expansion_error(saw, cv, 1, std::nullopt, cfg);
  const double e4 = expansion_error(saw, cv, 4, std::nullopt, cfg);
  CHECK(e1 > e4);
  CHECK(e1 * e1 == doctest::Approx(sawtooth_tail_oracle(1, 0)).epsilon(1e-8));
  CHECK(e4 * e4 == doctest::Approx(sawtooth_tail_oracle(4, 0)).epsilon(1e-8));

  // ||f - s_50||_1^2, the squared error, is the quantity below 2e-2
  const double e50 = expansion_error(saw, cv, 50, LeftDefIndex(1), cfg);
  CHECK(e50 * e50 <= 2e-2);
  CHECK(e50 * e50 == doctest::Approx(sawtooth_tail_oracle(50, 1)).epsilon(1e-6));

  double prev = std::numeric_limits<double>::infinity();
  for (int M = 1; M <= 30; ++M) {
    const double e = expansion_error(saw, cv, M, LeftDefIndex(1), cfg);
    CHECK(e <= prev * (1 + 1e-10));
    prev = e;
  }
}

TEST_CASE("error-tail duality") {
  const auto cfg = fixtures::unit_config();
  const auto saw = fixtures::sawtooth(cfg);
  const int N = 4000;
  const auto cv = fixtures::sawtooth_coeffs(cfg, N);
  for (int M : {2, 8, 20}) {
    for (std::optional<LeftDefIndex> n : {std::optional<LeftDefIndex>{}, std::optional<LeftDefIndex>(LeftDefIndex(1))}) {
      const double quad = expansion_error(saw, cv, M, n, cfg);
      const double tail = tail_error(cv, M, n);
      const double beyond = sawtooth_tail_oracle(N, n ? 1 : 0);
      CHECK(std::abs(quad * quad - tail * tail) <= 2e-10 + beyond);
    }
  }
}

TEST_CASE("Parseval and Bessel") {
  const auto cfg = fixtures::unit_config();
  const auto p = TrigPolynomiald::basis(cfg, Mode(1, Branch::Cos)) + TrigPolynomiald::basis(cfg, Mode(2, Branch::Sin));
  for (int N : {2, 5}) {
    CHECK(std::abs(parseval_defect(p, classical_coeffs(p, N), std::nullopt, cfg)) <= 1e-14);
    for (int n = 1; n <= 3; ++n) CHECK(std::abs(parseval_defect(p, classical_coeffs(p, N), LeftDefIndex(n), cfg)) <= 1e-12);
  }

  const auto saw = fixtures::sawtooth(cfg);
  const auto c200 = fixtures::sawtooth_coeffs(cfg, 200);
  CHECK(l2_inner(saw, saw, cfg) == doctest::Approx(std::pow(pi, 3) / 12).epsilon(1e-14));
  CHECK(std::abs(parseval_defect(saw, c200, std::nullopt, cfg)) <= 1e-7);

  double prev = 1.0;
  for (int N : {100, 200, 400, 800}) {
    const double d = parseval_defect(saw, fixtures::sawtooth_coeffs(cfg, N), LeftDefIndex(1), cfg);
    CHECK(d > 0.0);
    CHECK(d < prev);
    if (N == 400) CHECK(d < 5e-3);
    prev = d;
  }

  const auto partial = parseval_partial_sums(c200, LeftDefIndex(1));
  const double bound = std::real(leftdef_inner(saw, saw, LeftDefIndex(1), cfg)) + 1e-8;
  for (Eigen::Index i = 1; i < partial.size(); ++i) CHECK(partial(i) >= partial(i - 1));
  CHECK(partial(partial.size() - 1) <= bound);
}
