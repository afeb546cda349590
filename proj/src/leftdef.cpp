#include "semiperiodic/leftdef.hpp"

#include <algorithm>
#include <cmath>

namespace semiperiodic {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

template <typename Inner>
Eigen::MatrixXd assemble_operator_matrix(LeftDefIndex n, int N, const SpectralConfig& cfg, Inner&& inner) {
  if (N < 1) throw SpectralError(ErrorKind::InvalidArgument, "operator_matrix needs N >= 1");
  std::vector<TrigPolynomiald> basis;
  basis.reserve(2 * N);
  for (int m = 1; m <= N; ++m) {
    basis.push_back(scaled_basis<double>(Mode(m, Branch::Cos), n, cfg));
    basis.push_back(scaled_basis<double>(Mode(m, Branch::Sin), n, cfg));
  }
  Eigen::MatrixXd out(2 * N, 2 * N);
  for (int col = 0; col < 2 * N; ++col) {
    const TrigPolynomiald image = apply_ell(basis[col]);
    for (int row = 0; row < 2 * N; ++row) out(row, col) = inner(image, basis[row]);
  }
  return out;
}

// Least-squares slope of y against x.
double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

Eigen::MatrixXd operator_matrix(LeftDefIndex n, int N, const SpectralConfig& cfg) {
  return assemble_operator_matrix(n, N, cfg, [&](const TrigPolynomiald& p, const TrigPolynomiald& q) {
    return leftdef_inner(p, q, n, cfg);
  });
}

Eigen::MatrixXd operator_matrix(LeftDefIndex n, int N, const SpectralConfig& cfg, const QuadratureSpec& spec) {
  return assemble_operator_matrix(n, N, cfg, [&](const TrigPolynomiald& p, const TrigPolynomiald& q) {
    const auto fp = FunctionHandled::from_trig(p, n.value());
    const auto fq = FunctionHandled::from_trig(q, n.value());
    const QuadratureSpec rs = resolved_for(spec, std::max(p.max_mode(), q.max_mode()) * 2);
    return leftdef_inner(fp, fq, n, cfg, rs);
  });
}

MembershipReport classify_from_magnitudes(const Eigen::VectorXd& squared_magnitudes, const SpectralConfig& cfg,
                                          int n_max, const std::optional<std::vector<double>>& normalized_defects) {
  const int N = static_cast<int>(squared_magnitudes.size());
  if (N < kMinClassifyModes) {
    throw SpectralError(ErrorKind::InsufficientModes,
                        "membership_classify needs N >= " + std::to_string(kMinClassifyModes));
  }
  MembershipReport report;

  // Decay fit over the upper half m > N/2, above the noise floor.
  std::vector<double> log_lambda, log_c2, log_index;
  for (int m = N / 2 + 1; m <= N; ++m) {
    const double c2 = squared_magnitudes(m - 1);
    if (std::sqrt(c2) < kCoefficientNoiseFloor) continue;
    log_lambda.push_back(std::log(eigenvalue(cfg, m)));
    log_c2.push_back(std::log(c2));
    log_index.push_back(std::log(2.0 * m - 1.0));
  }
  const int upper_count = N - N / 2;
  // Sparse tails (a handful of surviving modes) are treated as finitely
  // supported: no decay rate can be read off them.
  if (static_cast<int>(log_c2.size()) >= std::max(2, upper_count / 4)) {
    report.decay_slope = fitted_slope(log_lambda, log_c2);
    report.growth_exponent = fitted_slope(log_index, log_lambda);
    // |c_m|^2 ~ lambda^s and lambda ~ (2m-1)^g, so sum lambda^r |c|^2 ~ sum (2m-1)^{g(r+s)}
    // converges iff r < -s - 1/g.
    report.critical_r = -report.decay_slope - 1.0 / report.growth_exponent;
  }

  if (normalized_defects) {
    for (std::size_t j = 0; j < normalized_defects->size(); ++j) {
      report.boundary_defects.emplace_back(static_cast<int>(j), (*normalized_defects)[j]);
    }
  }

  for (int n = 1; n <= n_max; ++n) {
    bool boundary_ok = true;
    if (normalized_defects) {
      for (int j = 0; j < n && j < static_cast<int>(normalized_defects->size()); ++j) {
        boundary_ok = boundary_ok && (*normalized_defects)[j] <= kBoundaryTolerance;
      }
    }
    Verdict v = Verdict::Member;
    if (!boundary_ok) {
      v = Verdict::NonMember;
    } else if (std::isfinite(report.critical_r)) {
      if (std::abs(n - report.critical_r) <= kInconclusiveBand) {
        v = Verdict::Inconclusive;
      } else if (n > report.critical_r) {
        v = Verdict::NonMember;
      }
    }
    report.verdict_per_n[n] = v;
  }
  return report;
}

}  // namespace semiperiodic
