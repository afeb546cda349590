#include "semiperiodic/report/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "semiperiodic/expansion.hpp"
#include "semiperiodic/leftdef.hpp"
#include "semiperiodic/report/catalog.hpp"

namespace semiperiodic::report {

namespace {

using Suite = std::function<std::vector<CheckResult>(const SpectralConfig&, const VerifyOptions&)>;

CheckResult check(const std::string& suite, std::string name, double value, double tolerance) {
  const bool pass = std::isfinite(value) && value <= tolerance;
  return {suite, std::move(name), value, tolerance, pass};
}

std::vector<int> ladder_range(const VerifyOptions& o, int lo, int hi) {
  if (o.n) return {*o.n};
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

TrigPolynomialcd random_trig(std::mt19937& rng, const SpectralConfig& cfg, int max_terms, int max_mode) {
  std::uniform_int_distribution<int> terms(1, max_terms), mode(1, max_mode), branch(0, 1);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  TrigPolynomialcd p(cfg);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    p.coefficient(Mode(mode(rng), branch(rng) ? Branch::Sin : Branch::Cos)) = Complex(coef(rng), coef(rng));
  }
  return p;
}

std::vector<CheckResult> eigenvalue_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  double worst = 0.0;
  double monotone = 0.0;
  double prev = cfg.k();
  for (int m = 1; m <= std::max(o.modes, 20); ++m) {
    const double w = (2.0 * m - 1.0) * std::numbers::pi / (cfg.b() - cfg.a());
    const double want = w * w + cfg.k();
    const double got = eigenvalue(cfg, m);
    worst = std::max(worst, std::abs(got - want) / want);
    if (!(got > prev)) monotone += 1.0;
    prev = got;
  }
  return {check("eigenvalues", "formula relative error", worst, 1e-15),
          check("eigenvalues", "non-increasing steps", monotone, 0.0)};
}

std::vector<CheckResult> antisymmetry_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  double worst = 0.0;
  for (int m = 1; m <= o.modes; ++m) {
    for (Branch br : {Branch::Cos, Branch::Sin}) {
      const auto p = TrigPolynomiald::basis(cfg, Mode(m, br));
      for (int r = 0; r <= 6; ++r) {
        const double scale = normalization(cfg) * std::pow(frequency(cfg, m), r);
        worst = std::max(worst, boundary_antisymmetry_defect(p, r) / scale);
      }
    }
  }
  return {check("antisymmetry", "basis boundary defect r<=6 (relative)", worst, 1e-12)};
}

std::vector<CheckResult> ell_power_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::mt19937 rng(20211);
  std::vector<CheckResult> out;
  for (int n : ladder_range(o, 1, 5)) {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = random_trig(rng, cfg, 10, o.modes);
      const auto binom = apply_ell_power(p, n);
      const auto iter = apply_ell_iterated(p, n);
      const double scale = iter.coefficients().cwiseAbs().maxCoeff();
      worst = std::max(worst, (binom.coefficients() - iter.coefficients()).cwiseAbs().maxCoeff() / scale);
    }
    out.push_back(check("ell-power", "binomial vs iterated, n=" + std::to_string(n), worst, 1e-10));
  }
  return out;
}

std::vector<CheckResult> basis_norm_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  double worst = 0.0;
  for (int m = 1; m <= o.modes; ++m) {
    for (Branch br : {Branch::Cos, Branch::Sin}) {
      const auto z = FunctionHandled::from_trig(TrigPolynomiald::basis(cfg, Mode(m, br)), 0);
      worst = std::max(worst, std::abs(l2_inner(z, z, cfg, resolved_for(o.quadrature, 2 * m)) - 1.0));
    }
  }
  return {check("basis-norm", "|(z,z) - 1| by quadrature", worst, o.quadrature.abs_tol)};
}

std::vector<CheckResult> quadrature_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  // exactness: q nodes on one panel integrate degree 2q-1
  double worst_exact = 0.0;
  for (int q : {2, 5, 10}) {
    for (int deg = 0; deg <= 2 * q - 1; ++deg) {
      const double exact = (std::pow(cfg.b(), deg + 1) - std::pow(cfg.a(), deg + 1)) / (deg + 1);
      const double got = integrate([deg](double x) { return std::pow(x, deg); }, cfg, QuadratureSpec{1, q, 1e-10});
      const double scale = std::max({1.0, std::abs(exact), std::pow(std::max(std::abs(cfg.a()), std::abs(cfg.b())), deg + 1)});
      worst_exact = std::max(worst_exact, std::abs(got - exact) / scale);
    }
  }
  out.push_back(check("quadrature", "Gauss-Legendre exactness (relative)", worst_exact, 1e-13));

  auto f = [](double x) { return Complex(std::cos(5 * x), x * x); };
  auto g = [](double x) { return Complex(std::exp(std::sin(x)), -x); };
  const Complex alpha(2.0, -1.0), beta(-0.5, 3.0);
  const Complex lhs = integrate([&](double x) { return alpha * f(x) + beta * g(x); }, cfg, o.quadrature);
  const Complex rhs = alpha * integrate(f, cfg, o.quadrature) + beta * integrate(g, cfg, o.quadrature);
  const double operand_scale =
      (std::abs(alpha) + std::abs(beta)) * (1.0 + std::abs(integrate(f, cfg, o.quadrature)) + std::abs(integrate(g, cfg, o.quadrature)));
  out.push_back(check("quadrature", "linearity", std::abs(lhs - rhs) / operand_scale, 1e-12));

  // error under panel doubling with 2-point panels (asymptotic ratio 16)
  int violations = 0;
  const double L = cfg.length();
  for (int m = 1; m <= 8; ++m) {
    const double w = (2.0 * m - 1.0) * std::numbers::pi / L;
    auto integrand = [&](double x) { return std::cos(w * x) * std::cos(w * x); };
    const double exact = L / 2 + (std::sin(2 * w * cfg.b()) - std::sin(2 * w * cfg.a())) / (4 * w);
    double prev = std::abs(integrate(integrand, cfg, QuadratureSpec{16, 2, 1e-10}) - exact);
    for (int panels = 32; panels <= 2048; panels *= 2) {
      const double err = std::abs(integrate(integrand, cfg, QuadratureSpec{panels, 2, 1e-10}) - exact);
      if (prev > 1e-11 * (1.0 + exact) && err > prev / 10.0) ++violations;
      prev = err;
    }
  }
  out.push_back(check("quadrature", "tenfold error drop per panel doubling (violations)", violations, 0.0));
  return out;
}

std::vector<CheckResult> orthonormality_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const int size = 2 * o.modes;
  auto gram_defect = [&](int n) {
    std::vector<FunctionHandled> basis;
    for (int m = 1; m <= o.modes; ++m) {
      for (Branch br : {Branch::Cos, Branch::Sin}) {
        const auto p = n == 0 ? TrigPolynomiald::basis(cfg, Mode(m, br)) : scaled_basis<double>(Mode(m, br), LeftDefIndex(n), cfg);
        basis.push_back(FunctionHandled::from_trig(p, n));
      }
    }
    const QuadratureSpec rs = resolved_for(o.quadrature, 2 * o.modes);
    double worst = 0.0;
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        const double g = n == 0 ? l2_inner(basis[i], basis[j], cfg, rs) : leftdef_inner(basis[i], basis[j], LeftDefIndex(n), cfg, rs);
        worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    }
    return worst;
  };
  out.push_back(check("orthonormality", "Gram of E in L2", gram_defect(0), 1e-8));
  for (int n : ladder_range(o, 1, 4)) {
    out.push_back(check("orthonormality", "Gram of E_n, n=" + std::to_string(n), gram_defect(n), 1e-8));
  }
  return out;
}

std::vector<CatalogEntry> smooth_catalog(const SpectralConfig& cfg) {
  return {make_catalog_entry("sawtooth", cfg), make_catalog_entry("offset-cosine", cfg),
          make_catalog_entry("mode:1:cos", cfg), make_catalog_entry("mode:2:sin", cfg),
          make_catalog_entry("mode:5:cos", cfg)};
}

std::vector<CheckResult> lower_bound_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const auto catalog = smooth_catalog(cfg);
  for (int n : ladder_range(o, 1, 4)) {
    double worst = 0.0;
    for (const auto& e : catalog) {
      if (e.handle.max_derivative() < n) continue;
      const double norm2 = std::real(l2_inner(e.handle, e.handle, cfg, o.quadrature));
      const double margin = lower_bound_margin(e.handle, LeftDefIndex(n), cfg, o.quadrature);
      worst = std::max(worst, -margin / norm2);
    }
    out.push_back(check("lower-bound", "(f,f)_n - k^n (f,f) >= 0, n=" + std::to_string(n), worst, 1e-8));
  }
  return out;
}

std::vector<FunctionHandlecd> trig_fixtures(const SpectralConfig& cfg, int max_deriv) {
  std::mt19937 rng(77);
  std::vector<FunctionHandlecd> out;
  for (int i = 0; i < 3; ++i) out.push_back(FunctionHandlecd::from_trig(random_trig(rng, cfg, 6, 10), max_deriv));
  return out;
}

std::vector<CheckResult> fundamental_relation_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (int n : ladder_range(o, 1, 3)) {
    std::vector<FunctionHandlecd> fs = trig_fixtures(cfg, n);
    for (const auto& e : smooth_catalog(cfg)) {
      if (!e.known_ladder || *e.known_ladder >= n) fs.push_back(e.handle);
    }
    double worst = 0.0;
    for (const auto& f : fs) {
      for (int m = 1; m <= o.modes; ++m) {
        for (Branch br : {Branch::Cos, Branch::Sin}) {
          const double defect = fundamental_relation_defect(Mode(m, br), f, LeftDefIndex(n), cfg, o.quadrature);
          worst = std::max(worst, defect / std::pow(eigenvalue(cfg, m), n));
        }
      }
    }
    out.push_back(check("fundamental-relation", "defect / lambda^n, n=" + std::to_string(n), worst, 1e-7));
  }
  return out;
}

std::vector<CheckResult> diagonal_identity_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  std::mt19937 rng(5);
  for (int n : ladder_range(o, 1, 4)) {
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const auto p = random_trig(rng, cfg, 10, o.modes);
      const auto q = random_trig(rng, cfg, 10, o.modes);
      const Complex lhs = leftdef_inner(p, q, LeftDefIndex(n), cfg);
      const Complex rhs = l2_inner(apply_ell_power(p, n), q, cfg);
      const Complex by_definition = leftdef_inner_by_definition(p, q, LeftDefIndex(n), cfg);
      const double scale = std::pow(eigenvalue(cfg, o.modes), n) * p.coefficients().norm() * q.coefficients().norm();
      worst = std::max({worst, std::abs(lhs - rhs) / scale, std::abs(lhs - by_definition) / scale});
    }
    out.push_back(check("diagonal-identity", "(p,q)_n = (l^n p, q), n=" + std::to_string(n), worst, 1e-12));
  }
  return out;
}

std::vector<CheckResult> norm_ladder_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    auto cv = CoeffVectorcd::zero(cfg, std::max(o.modes, 32));
    for (int i = 0; i < cv.size(); ++i) {
      cv.cos_coeffs()(i) = Complex(coef(rng), coef(rng)) / std::pow(i + 1.0, 6);
      cv.sin_coeffs()(i) = Complex(coef(rng), coef(rng)) / std::pow(i + 1.0, 6);
    }
    for (int s = 2; s <= 4; ++s) {
      const double high = std::real(spectral_inner_r(cv, cv, RPower(s)));
      for (int n = 1; n < s; ++n) {
        const double low = std::real(spectral_inner_r(cv, cv, RPower(n)));
        worst = std::max(worst, (low - std::pow(cfg.k(), n - s) * high) / high);
      }
    }
  }
  return {check("norm-ladder", "(f,f)_n <= k^(n-s) (f,f)_s", std::max(worst, 0.0), 1e-14)};
}

std::vector<CheckResult> operator_matrix_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const int N = std::min(o.modes, 8);
  for (int n : ladder_range(o, 1, 3)) {
    const Eigen::MatrixXd M = operator_matrix(LeftDefIndex(n), N, cfg, o.quadrature);
    double off = 0.0, diag = 0.0;
    for (int i = 0; i < 2 * N; ++i) {
      for (int j = 0; j < 2 * N; ++j) {
        if (i != j) off = std::max(off, std::abs(M(i, j)));
      }
      const double lambda = eigenvalue(cfg, i / 2 + 1);
      diag = std::max(diag, std::abs(M(i, i) - lambda) / lambda);
    }
    out.push_back(check("operator-matrix", "off-diagonal, n=" + std::to_string(n), off, 1e-8));
    out.push_back(check("operator-matrix", "diagonal vs lambda_m (relative), n=" + std::to_string(n), diag, 1e-10));
  }
  return out;
}

std::vector<CheckResult> rescale_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (int n : ladder_range(o, 1, 3)) {
    std::vector<FunctionHandlecd> fs = trig_fixtures(cfg, n);
    for (const auto& e : smooth_catalog(cfg)) {
      if (!e.known_ladder || *e.known_ladder >= n) fs.push_back(e.handle);
    }
    double worst = 0.0;
    for (const auto& f : fs) {
      const auto direct = leftdef_coeffs(f, o.modes, LeftDefIndex(n), cfg, o.quadrature, CoeffMethod::Direct);
      const auto rescaled = leftdef_coeffs(f, o.modes, LeftDefIndex(n), cfg, o.quadrature, CoeffMethod::Rescale);
      for (int i = 0; i < o.modes; ++i) {
        worst = std::max(worst, std::abs(direct.cos_coeffs()(i) - rescaled.cos_coeffs()(i)) / (1 + std::abs(rescaled.cos_coeffs()(i))));
        worst = std::max(worst, std::abs(direct.sin_coeffs()(i) - rescaled.sin_coeffs()(i)) / (1 + std::abs(rescaled.sin_coeffs()(i))));
      }
    }
    out.push_back(check("rescale", "A_{m,n} direct vs lambda^{n/2} a_m, n=" + std::to_string(n), worst, 1e-7));
  }
  return out;
}

std::vector<CheckResult> bessel_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  // the H_n cases need f in V_n; offset-cosine is only used in L^2
  std::vector<CheckResult> out;
  const auto saw = make_catalog_entry("sawtooth", cfg);
  const auto offset = make_catalog_entry("offset-cosine", cfg);
  const auto mode = make_catalog_entry("mode:3:sin", cfg);
  struct Case {
    const CatalogEntry* entry;
    std::optional<LeftDefIndex> n;
    std::string label;
  };
  const std::vector<Case> cases = {{&saw, std::nullopt, "sawtooth L2"},
                                   {&saw, LeftDefIndex(1), "sawtooth H_1"},
                                   {&offset, std::nullopt, "offset-cosine L2"},
                                   {&mode, LeftDefIndex(2), "mode:3:sin H_2"}};
  const int N = std::max(o.modes, 64);
  for (const auto& c : cases) {
    const CoeffVectorcd cv = c.entry->has_closed_form() ? closed_form_coeffs(*c.entry, cfg, N)
                                                        : classical_coeffs(c.entry->handle, N, cfg, o.quadrature);
    const Eigen::VectorXd partial = parseval_partial_sums(cv, c.n);
    const double norm2 = c.n ? std::real(leftdef_inner(c.entry->handle, c.entry->handle, *c.n, cfg, o.quadrature))
                             : std::real(l2_inner(c.entry->handle, c.entry->handle, cfg, o.quadrature));
    double decrease = 0.0;
    for (Eigen::Index i = 1; i < partial.size(); ++i) decrease = std::max(decrease, partial(i - 1) - partial(i));
    out.push_back(check("bessel", c.label + ": partial sums nondecreasing", decrease, 0.0));
    out.push_back(check("bessel", c.label + ": partial sums <= ||f||^2 + 1e-8", std::max(0.0, partial(N - 1) - norm2), 1e-8));
  }
  return out;
}

std::vector<CheckResult> idempotence_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    auto cv = CoeffVectorcd::zero(cfg, o.modes);
    for (int i = 0; i < o.modes; ++i) {
      cv.cos_coeffs()(i) = Complex(coef(rng), coef(rng));
      cv.sin_coeffs()(i) = Complex(coef(rng), coef(rng));
    }
    for (int M = 1; M <= o.modes; ++M) {
      const auto again = classical_coeffs(partial_sum(cv, M), o.modes);
      worst = std::max(worst, (again.cos_coeffs().head(M) - cv.cos_coeffs().head(M)).cwiseAbs().maxCoeff());
      worst = std::max(worst, (again.sin_coeffs().head(M) - cv.sin_coeffs().head(M)).cwiseAbs().maxCoeff());
      if (M < o.modes) worst = std::max(worst, again.cos_coeffs().tail(o.modes - M).cwiseAbs().maxCoeff());
    }
  }
  return {check("idempotence", "coefficients of s_M reproduce cv", worst, 0.0)};
}

// Bound on sum_{m>N} lambda_m^n (|a_m|^2 + |b_m|^2) for the sawtooth,
// |a_m|^2 + |b_m|^2 = (8/L) w_m^-4, n in {0,1}, by the integral test.
double sawtooth_truncation_bound(const SpectralConfig& cfg, int N, int n) {
  const double L = cfg.length();
  const double factor = n == 0 ? 1.0 : 1.0 + cfg.k() / (frequency(cfg, N + 1) * frequency(cfg, N + 1));
  const int p = 4 - 2 * n;  // power of (2m-1) in the summand
  const double sum = std::pow(2.0 * N - 1.0, -(p - 1)) / (2.0 * (p - 1));
  return (8.0 / L) * std::pow(L / std::numbers::pi, p) * factor * sum;
}

std::vector<CheckResult> error_tail_suite(const SpectralConfig& cfg, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const auto saw = make_catalog_entry("sawtooth", cfg);
  const int N = 4000;
  const auto cv = closed_form_coeffs(saw, cfg, N);
  for (int n : {0, 1}) {
    if (o.n && *o.n != n && n != 0) continue;
    const std::optional<LeftDefIndex> ladder = n ? std::optional<LeftDefIndex>(LeftDefIndex(n)) : std::nullopt;
    double worst_excess = 0.0;
    double increase = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int M : {1, 2, 4, 8, 16, 32}) {
      const double err = expansion_error(saw.handle, cv, M, ladder, cfg, o.quadrature);
      const double tail = tail_error(cv, M, ladder);
      const double allowed = 2.0 * o.quadrature.abs_tol + sawtooth_truncation_bound(cfg, N, n);
      worst_excess = std::max(worst_excess, std::abs(err * err - tail * tail) - allowed);
      increase = std::max(increase, err - prev - o.quadrature.abs_tol);
      prev = err;
    }
    const std::string label = n ? "H_1" : "L2";
    out.push_back(check("error-tail", "sawtooth " + label + ": |err^2 - tail^2| beyond allowance", std::max(0.0, worst_excess), 0.0));
    out.push_back(check("error-tail", "sawtooth " + label + ": error nonincreasing in M", std::max(0.0, increase), 0.0));
  }
  return out;
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"eigenvalues", eigenvalue_suite},
      {"antisymmetry", antisymmetry_suite},
      {"ell-power", ell_power_suite},
      {"basis-norm", basis_norm_suite},
      {"quadrature", quadrature_suite},
      {"orthonormality", orthonormality_suite},
      {"lower-bound", lower_bound_suite},
      {"fundamental-relation", fundamental_relation_suite},
      {"diagonal-identity", diagonal_identity_suite},
      {"norm-ladder", norm_ladder_suite},
      {"operator-matrix", operator_matrix_suite},
      {"rescale", rescale_suite},
      {"bessel", bessel_suite},
      {"idempotence", idempotence_suite},
      {"error-tail", error_tail_suite},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const SpectralConfig& cfg, const VerifyOptions& options) {
  if (options.modes < 1) throw SpectralError(ErrorKind::InvalidArgument, "--modes must be >= 1");
  if (options.n && *options.n < 1) throw SpectralError(ErrorKind::InvalidArgument, "--n must be >= 1");
  options.quadrature.validate();
  std::vector<CheckResult> out;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) {
      auto r = fn(cfg, options);
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  if (out.empty() && name != "all") {
    throw SpectralError(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace semiperiodic::report
