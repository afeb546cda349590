#ifndef SEMIPERIODIC_COEFF_VECTOR_HPP
#define SEMIPERIODIC_COEFF_VECTOR_HPP

#include <Eigen/Dense>
#include <optional>

#include "semiperiodic/config.hpp"

namespace semiperiodic {

/// Truncated expansion coefficients for modes 1..N.
///
/// Without a ladder index these are the classical coefficients a_m, b_m
/// against z_{m,Cos}, z_{m,Sin}. With ladder n they are A_{m,n}, B_{m,n}
/// against the rescaled basis Z_{m,n,j} = lambda_m^{-n/2} z_{m,j}.
template <typename Scalar>
class CoeffVector {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  CoeffVector(const SpectralConfig& cfg, Vector cos_coeffs, Vector sin_coeffs,
              std::optional<int> ladder = std::nullopt)
      : cfg_(cfg), a_(std::move(cos_coeffs)), b_(std::move(sin_coeffs)), ladder_(ladder) {
    if (a_.size() != b_.size()) {
      throw SpectralError(ErrorKind::TruncationMismatch, "cos and sin coefficient lists differ in length");
    }
    if (a_.size() < 1) throw SpectralError(ErrorKind::InvalidArgument, "coefficient vector needs N >= 1");
    if (ladder_ && *ladder_ < 1) throw SpectralError(ErrorKind::InvalidArgument, "ladder index must be >= 1");
  }

  static CoeffVector zero(const SpectralConfig& cfg, int N, std::optional<int> ladder = std::nullopt) {
    return CoeffVector(cfg, Vector::Zero(N), Vector::Zero(N), ladder);
  }

  const SpectralConfig& config() const noexcept { return cfg_; }
  int size() const noexcept { return static_cast<int>(a_.size()); }
  const Vector& cos_coeffs() const noexcept { return a_; }
  const Vector& sin_coeffs() const noexcept { return b_; }
  Vector& cos_coeffs() noexcept { return a_; }
  Vector& sin_coeffs() noexcept { return b_; }
  std::optional<int> ladder() const noexcept { return ladder_; }
  bool is_classical() const noexcept { return !ladder_.has_value(); }

  /// |a_m|^2 + |b_m|^2 for m = 1..N.
  Eigen::VectorXd squared_magnitudes() const { return a_.array().abs2().matrix() + b_.array().abs2().matrix(); }

 private:
  SpectralConfig cfg_;
  Vector a_;
  Vector b_;
  std::optional<int> ladder_;
};

using CoeffVectord = CoeffVector<double>;
using CoeffVectorcd = CoeffVector<Complex>;

}  // namespace semiperiodic

#endif  // SEMIPERIODIC_COEFF_VECTOR_HPP
