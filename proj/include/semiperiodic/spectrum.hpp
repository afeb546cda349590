#ifndef SEMIPERIODIC_SPECTRUM_HPP
#define SEMIPERIODIC_SPECTRUM_HPP

#include <Eigen/Dense>

#include "semiperiodic/config.hpp"

namespace semiperiodic {

/// (2m-1) pi / (b-a), the angular frequency of both eigenfunctions of mode m.
double frequency(const SpectralConfig& cfg, int m);

/// lambda_m = ((2m-1) pi / (b-a))^2 + k. Each eigenvalue has multiplicity two.
double eigenvalue(const SpectralConfig& cfg, int m);

/// lambda_1..lambda_count as a column vector.
Eigen::VectorXd eigenvalues(const SpectralConfig& cfg, int count);

/// sqrt(2/(b-a)): the factor that turns cos/sin(omega x) into z_{m,j}.
double normalization(const SpectralConfig& cfg);

/// d-th derivative of the normalized eigenfunction z_{m,branch} at x.
/// Uses the cycle cos -> -sin -> -cos -> sin (and sin -> cos -> -sin -> -cos);
/// never differentiates numerically.
double basis_eval(const SpectralConfig& cfg, const Mode& mode, double x, int deriv_order);

/// Coefficients c_0..c_n with  l^n[y] = sum_j c_j y^(2j),
/// c_j = (-1)^j C(n,j) k^(n-j).
Eigen::VectorXd ell_power_coefficients(int n, double k);

double binomial(int n, int j);

}  // namespace semiperiodic

#endif  // SEMIPERIODIC_SPECTRUM_HPP
