#include "semiperiodic/report/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "semiperiodic/leftdef.hpp"
#include "semiperiodic/spectrum.hpp"

namespace semiperiodic::report {

namespace {

constexpr int kCatalogDerivatives = 8;

[[noreturn]] void unknown(const std::string& name) {
  throw SpectralError(ErrorKind::InvalidArgument, "unknown catalog function '" + name + "'");
}

double parse_number(const std::string& text, const std::string& name) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    unknown(name);
  }
  if (used != text.size() || !std::isfinite(v)) unknown(name);
  return v;
}

double cos_derivative(double x, int d) {
  switch (d % 4) {
    case 0: return std::cos(x);
    case 1: return -std::sin(x);
    case 2: return -std::cos(x);
    default: return std::sin(x);
  }
}

// First derivative order whose anti-periodic condition fails; the function
// then lies in V_n exactly for n <= that order.
std::optional<int> ladder_from_defects(const FunctionHandlecd& f, const SpectralConfig& cfg) {
  for (int j = 0; j <= f.max_derivative(); ++j) {
    if (normalized_boundary_defect(f, cfg, j) > kBoundaryTolerance) return j;
  }
  return std::nullopt;
}

CatalogEntry make_mode(const std::string& name, const std::string& spec, const SpectralConfig& cfg) {
  // spec is "<m>:<cos|sin>"
  const auto colon = spec.find(':');
  if (colon == std::string::npos) unknown(name);
  const double m_value = parse_number(spec.substr(0, colon), name);
  const std::string branch_text = spec.substr(colon + 1);
  if (m_value != std::floor(m_value) || m_value < 1 || m_value > 1e6) unknown(name);
  if (branch_text != "cos" && branch_text != "sin") unknown(name);
  const int m = static_cast<int>(m_value);
  const Branch branch = branch_text == "cos" ? Branch::Cos : Branch::Sin;
  const auto p = TrigPolynomialcd::basis(cfg, Mode(m, branch));
  CatalogEntry e{name, FunctionHandlecd::from_trig(p, kCatalogDerivatives), {}, std::nullopt, false};
  e.closed_form = [m, branch](int k) {
    if (k != m) return std::pair<Complex, Complex>{0.0, 0.0};
    return branch == Branch::Cos ? std::pair<Complex, Complex>{1.0, 0.0} : std::pair<Complex, Complex>{0.0, 1.0};
  };
  return e;
}

CatalogEntry make_sawtooth(const SpectralConfig& cfg) {
  const double c = cfg.midpoint();
  std::vector<FunctionHandlecd::Evaluator> ev;
  ev.emplace_back([c](double x) { return Complex(x - c); });
  ev.emplace_back([](double) { return Complex(1.0); });
  for (int d = 2; d <= kCatalogDerivatives; ++d) ev.emplace_back([](double) { return Complex(0.0); });
  CatalogEntry e{"sawtooth", FunctionHandlecd(std::move(ev)), {}, 1, false};
  // integration by parts: a_m = -2 s cos(w a) / w^2, b_m = -2 s sin(w a) / w^2
  e.closed_form = [cfg](int m) {
    const double w = frequency(cfg, m);
    const double s = normalization(cfg);
    return std::pair<Complex, Complex>{-2.0 * s * std::cos(w * cfg.a()) / (w * w),
                                       -2.0 * s * std::sin(w * cfg.a()) / (w * w)};
  };
  return e;
}

CatalogEntry make_offset_cosine(const SpectralConfig& cfg) {
  const double c = cfg.midpoint();
  std::vector<FunctionHandlecd::Evaluator> ev;
  for (int d = 0; d <= kCatalogDerivatives; ++d) {
    ev.emplace_back([c, d](double x) {
      return Complex(cos_derivative(x, d) * (x - c) + (d > 0 ? d * cos_derivative(x, d - 1) : 0.0));
    });
  }
  CatalogEntry e{"offset-cosine", FunctionHandlecd(std::move(ev)), {}, std::nullopt, false};
  e.known_ladder = ladder_from_defects(e.handle, cfg);
  return e;
}

CatalogEntry make_synthetic(const std::string& name, double p, const SpectralConfig& cfg) {
  if (!(p > 0.0)) unknown(name);
  TrigPolynomialcd series(cfg);
  for (int m = 1; m <= kSyntheticHandleModes; ++m) {
    series.coefficient(Mode(m, Branch::Cos)) = std::pow(eigenvalue(cfg, m), -0.5 * p);
  }
  // sum lambda^n |c|^2 ~ sum (2m-1)^{2(n-p)} is finite iff n < p - 1/2
  const int ladder = std::max(0, static_cast<int>(std::ceil(p - 0.5)) - 1);
  CatalogEntry e{name, FunctionHandlecd::from_trig(series, 0), {}, ladder, true};
  e.closed_form = [cfg, p](int m) {
    return std::pair<Complex, Complex>{std::pow(eigenvalue(cfg, m), -0.5 * p), 0.0};
  };
  return e;
}

}  // namespace

CatalogEntry make_catalog_entry(const std::string& name, const SpectralConfig& cfg) {
  if (name == "sawtooth") return make_sawtooth(cfg);
  if (name == "offset-cosine") return make_offset_cosine(cfg);
  if (name.rfind("mode:", 0) == 0) return make_mode(name, name.substr(5), cfg);
  if (name.rfind("synthetic:", 0) == 0) return make_synthetic(name, parse_number(name.substr(10), name), cfg);
  unknown(name);
}

std::vector<std::string> catalog_names() {
  return {"mode:<m>:<cos|sin>", "sawtooth", "synthetic:<p>", "offset-cosine"};
}

CoeffVectorcd closed_form_coeffs(const CatalogEntry& entry, const SpectralConfig& cfg, int N) {
  if (!entry.has_closed_form()) {
    throw SpectralError(ErrorKind::InvalidArgument, "'" + entry.name + "' has no closed-form coefficients");
  }
  auto cv = CoeffVectorcd::zero(cfg, N);
  for (int m = 1; m <= N; ++m) {
    const auto [a, b] = entry.closed_form(m);
    cv.cos_coeffs()(m - 1) = a;
    cv.sin_coeffs()(m - 1) = b;
  }
  return cv;
}

}  // namespace semiperiodic::report
