#include "semiperiodic/report/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <numbers>
#include <optional>

#include "semiperiodic/expansion.hpp"
#include "semiperiodic/leftdef.hpp"
#include "semiperiodic/report/catalog.hpp"
#include "semiperiodic/report/report.hpp"
#include "semiperiodic/report/verify.hpp"

namespace semiperiodic::report {

namespace {

// Modes used for tail-based errors when closed-form coefficients exist.
constexpr int kReferenceModes = 4096;

struct CommonOptions {
  double a = 0.0;
  double b = std::numbers::pi;
  double k = 1.0;
  int quad_panels = QuadratureSpec{}.panels;
  int quad_nodes = QuadratureSpec{}.nodes_per_panel;
  double tol = QuadratureSpec{}.abs_tol;
  std::string format = "json";
  std::string output;

  SpectralConfig config() const { return SpectralConfig(a, b, k); }
  QuadratureSpec quadrature() const {
    QuadratureSpec spec{quad_panels, quad_nodes, tol};
    spec.validate();
    return spec;
  }
};

void add_common(CLI::App& sub, CommonOptions& o) {
  sub.add_option("--a", o.a, "left endpoint")->capture_default_str();
  sub.add_option("--b", o.b, "right endpoint (default: the double nearest pi)")->capture_default_str();
  sub.add_option("--k", o.k, "spectral shift k > 0")->capture_default_str();
  sub.add_option("--quad-panels", o.quad_panels, "quadrature panels (minimum; raised for high modes)")->capture_default_str();
  sub.add_option("--quad-nodes", o.quad_nodes, "Gauss-Legendre nodes per panel")->capture_default_str();
  sub.add_option("--tol", o.tol, "quadrature target tolerance")->capture_default_str();
  sub.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub.add_option("--output", o.output, "report path (default: standard output)");
}

Record config_params(const CommonOptions& o) {
  Record r;
  r.set("quad_panels", o.quad_panels).set("quad_nodes", o.quad_nodes).set("tol", o.tol);
  return r;
}

std::optional<LeftDefIndex> ladder(const std::optional<int>& n) {
  if (!n) return std::nullopt;
  return LeftDefIndex(*n);
}

Report spectrum_report(const CommonOptions& o, int modes) {
  if (modes < 1) throw SpectralError(ErrorKind::InvalidArgument, "--modes must be >= 1");
  Report rep{"spectrum", o.config(), config_params(o), {}, 0, 0};
  rep.params.set("modes", modes);
  for (int m = 1; m <= modes; ++m) {
    Record row;
    row.set("m", m).set("lambda", eigenvalue(rep.config, m)).set("frequency", frequency(rep.config, m)).set("multiplicity", 2);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Report coeffs_report(const CommonOptions& o, const std::string& function, int N, const std::optional<int>& n,
                     const std::string& method, std::string source) {
  if (N < 1) throw SpectralError(ErrorKind::InvalidArgument, "--N must be >= 1");
  const SpectralConfig cfg = o.config();
  const QuadratureSpec spec = o.quadrature();
  const CatalogEntry entry = make_catalog_entry(function, cfg);
  if (source == "auto") source = entry.coefficient_defined ? "closed-form" : "quadrature";
  if (source == "quadrature" && entry.coefficient_defined) {
    throw SpectralError(ErrorKind::InvalidArgument, "'" + function + "' is coefficient-defined; use --source closed-form");
  }
  const CoeffVectorcd cv = source == "closed-form" ? closed_form_coeffs(entry, cfg, N) : classical_coeffs(entry.handle, N, cfg, spec);

  Report rep{"coeffs", cfg, config_params(o), {}, 0, 0};
  rep.params.set("function", function).set("N", N).set("source", source);
  std::optional<CoeffVectorcd> ld;
  if (n) {
    rep.params.set("n", *n).set("method", method);
    if (method == "direct") {
      if (entry.coefficient_defined) throw SpectralError(ErrorKind::InvalidArgument, "direct method needs derivatives");
      ld = leftdef_coeffs(entry.handle, N, LeftDefIndex(*n), cfg, spec, CoeffMethod::Direct);
    } else {
      ld = rescale_to_ladder(cv, LeftDefIndex(*n));
    }
  }
  for (int m = 1; m <= N; ++m) {
    Record row;
    row.set("m", m).set("lambda", eigenvalue(cfg, m)).set("a", Value(cv.cos_coeffs()(m - 1))).set("b", Value(cv.sin_coeffs()(m - 1)));
    if (ld) row.set("A", Value(ld->cos_coeffs()(m - 1))).set("B", Value(ld->sin_coeffs()(m - 1)));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

CoeffVectorcd best_coeffs(const CatalogEntry& entry, const SpectralConfig& cfg, int N, const QuadratureSpec& spec) {
  return entry.has_closed_form() ? closed_form_coeffs(entry, cfg, N) : classical_coeffs(entry.handle, N, cfg, spec);
}

Report norms_report(const CommonOptions& o, const std::string& function, int N, int n_max, const std::optional<double>& r) {
  if (n_max < 1) throw SpectralError(ErrorKind::InvalidArgument, "--n must be >= 1");
  const SpectralConfig cfg = o.config();
  const QuadratureSpec spec = o.quadrature();
  const CatalogEntry entry = make_catalog_entry(function, cfg);
  const CoeffVectorcd cv = best_coeffs(entry, cfg, N, spec);
  const FunctionHandlecd* handle = entry.coefficient_defined ? nullptr : &entry.handle;
  const int classify_max = handle ? std::min(n_max, handle->max_derivative() + 1) : n_max;
  const MembershipReport membership = membership_classify(cv, handle, cfg, classify_max);

  Report rep{"norms", cfg, config_params(o), {}, 0, 0};
  rep.params.set("function", function).set("N", N).set("n", n_max);
  rep.params.set("l2_norm_sq", handle ? std::real(l2_inner(*handle, *handle, cfg, spec)) : cv.squared_magnitudes().sum());
  rep.params.set("decay_slope", membership.decay_slope).set("growth_exponent", membership.growth_exponent);
  rep.params.set("critical_r", membership.critical_r);

  for (int n = 1; n <= n_max; ++n) {
    Record row;
    row.set("n", n).set("spectral_sum", std::real(spectral_inner_r(cv, cv, RPower(n))));
    if (handle && handle->max_derivative() >= n) {
      row.set("leftdef_norm_sq", std::real(leftdef_inner(*handle, *handle, LeftDefIndex(n), cfg, spec)));
      row.set("lower_bound_margin", lower_bound_margin(*handle, LeftDefIndex(n), cfg, spec));
    }
    for (const auto& [j, d] : membership.boundary_defects) {
      if (j == n - 1) row.set("boundary_defect", d);
    }
    const auto v = membership.verdict_per_n.find(n);
    row.set("verdict", v == membership.verdict_per_n.end() ? "unavailable" : to_string(v->second));
    rep.rows.push_back(std::move(row));
  }
  if (r) {
    Record row;
    row.set("r", *r).set("spectral_sum", std::real(spectral_inner_r(cv, cv, RPower(*r))));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Report converge_report(const CommonOptions& o, const std::string& function, int N, const std::optional<int>& n) {
  if (N < 1) throw SpectralError(ErrorKind::InvalidArgument, "--N must be >= 1");
  const SpectralConfig cfg = o.config();
  const QuadratureSpec spec = o.quadrature();
  const CatalogEntry entry = make_catalog_entry(function, cfg);
  const auto nn = ladder(n);
  Report rep{"converge", cfg, config_params(o), {}, 0, 0};
  rep.params.set("function", function).set("N", N);
  if (n) rep.params.set("n", *n);

  if (entry.has_closed_form()) {
    // error and Parseval defect from the coefficient tail up to kReferenceModes
    const int ref = std::max(kReferenceModes, 4 * N);
    const CoeffVectorcd cv = closed_form_coeffs(entry, cfg, ref);
    const Eigen::VectorXd partial = parseval_partial_sums(cv, nn);
    rep.params.set("method", "tail").set("reference_modes", ref);
    for (int M = 1; M <= N; ++M) {
      const double err = tail_error(cv, M, nn);
      Record row;
      row.set("M", M).set("error", err).set("parseval_partial", partial(M - 1)).set("parseval_defect", err * err);
      rep.rows.push_back(std::move(row));
    }
  } else {
    const CoeffVectorcd cv = classical_coeffs(entry.handle, N, cfg, spec);
    const Eigen::VectorXd partial = parseval_partial_sums(cv, nn);
    const double norm2 = nn ? std::real(leftdef_inner(entry.handle, entry.handle, *nn, cfg, spec))
                            : std::real(l2_inner(entry.handle, entry.handle, cfg, spec));
    rep.params.set("method", "quadrature").set("norm_sq", norm2);
    for (int M = 1; M <= N; ++M) {
      Record row;
      row.set("M", M).set("error", expansion_error(entry.handle, cv, M, nn, cfg, spec));
      row.set("parseval_partial", partial(M - 1)).set("parseval_defect", norm2 - partial(M - 1));
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

Report verify_report(const CommonOptions& o, const std::string& suite, const std::optional<int>& n, int modes) {
  VerifyOptions vo;
  vo.n = n;
  vo.modes = modes;
  vo.quadrature = o.quadrature();
  const auto results = run_suite(suite, o.config(), vo);
  Report rep{"verify", o.config(), config_params(o), {}, 0, 0};
  rep.params.set("suite", suite).set("modes", modes);
  if (n) rep.params.set("n", *n);
  for (const auto& c : results) {
    Record row;
    row.set("suite", c.suite).set("check", c.check).set("value", c.value).set("tolerance", c.tolerance).set("pass", c.pass);
    rep.rows.push_back(std::move(row));
    (c.pass ? rep.pass : rep.fail) += 1;
  }
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-periodic Fourier operator: spectra, expansions and left-definite norms", "semiperiodic"};
  app.require_subcommand(1);

  CommonOptions common;
  int spectrum_modes = 10;
  std::string function;
  int N = 16;
  std::optional<int> n;
  std::optional<double> r;
  std::string method = "rescale";
  std::string source = "auto";
  std::string suite = "all";

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues lambda_1..lambda_modes");
  add_common(*spectrum, common);
  spectrum->add_option("--modes,--N", spectrum_modes, "number of eigenvalues")->capture_default_str();

  auto* coeffs = app.add_subcommand("coeffs", "classical and left-definite Fourier coefficients");
  add_common(*coeffs, common);
  coeffs->add_option("--function", function, "catalog function")->required();
  coeffs->add_option("--N,--modes", N, "truncation")->capture_default_str();
  coeffs->add_option("--n", n, "ladder index for A_{m,n}, B_{m,n}");
  coeffs->add_option("--method", method, "direct or rescale")->check(CLI::IsMember({"direct", "rescale"}))->capture_default_str();
  coeffs->add_option("--source", source, "auto, quadrature or closed-form")
      ->check(CLI::IsMember({"auto", "quadrature", "closed-form"}))
      ->capture_default_str();

  int norms_N = 400;
  int norms_n = 3;
  auto* norms = app.add_subcommand("norms", "left-definite norms, spectral sums and V_n membership");
  add_common(*norms, common);
  norms->add_option("--function", function, "catalog function")->required();
  norms->add_option("--N,--modes", norms_N, "truncation")->capture_default_str();
  norms->add_option("--n", norms_n, "highest ladder index")->capture_default_str();
  norms->add_option("--r", r, "continuum exponent r > 0");

  int converge_N = 50;
  auto* converge = app.add_subcommand("converge", "expansion error ||f - s_M|| for M = 1..N");
  add_common(*converge, common);
  converge->add_option("--function", function, "catalog function")->required();
  converge->add_option("--N,--modes", converge_N, "largest partial sum")->capture_default_str();
  converge->add_option("--n", n, "measure in ||.||_n instead of L2");

  int verify_modes = 12;
  auto* verify = app.add_subcommand("verify", "run property suites; exit 3 on any failure");
  add_common(*verify, common);
  std::vector<std::string> suites = suite_names();
  suites.insert(suites.begin(), "all");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--n", n, "restrict to ladder index n");
  verify->add_option("--modes,--N", verify_modes, "highest mode")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  Report rep;
  try {
    if (*spectrum) rep = spectrum_report(common, spectrum_modes);
    if (*coeffs) rep = coeffs_report(common, function, N, n, method, source);
    if (*norms) rep = norms_report(common, function, norms_N, norms_n, r);
    if (*converge) rep = converge_report(common, function, converge_N, n);
    if (*verify) rep = verify_report(common, suite, n, verify_modes);
  } catch (const SpectralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }

  const std::string text = common.format == "csv" ? to_csv(rep) : to_json(rep);
  if (common.output.empty()) {
    out << text;
  } else {
    std::ofstream file(common.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << common.output << '\n';
      return kExitValidation;
    }
    file << text;
  }
  return rep.fail > 0 ? kExitToleranceFailure : kExitOk;
}

}  // namespace semiperiodic::report
