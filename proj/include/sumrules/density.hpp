#pragma once

#include <vector>

namespace sumrules {

/// Inhomogeneity of the string: Sigma(x) = 1 + lambda * sigma(x) on
/// [-1/2, 1/2], with sigma a polynomial in x (coefficient j multiplies x^j).
/// Construction rejects densities with Sigma <= 0 anywhere on the interval;
/// the minimum is located exactly through the critical points of the
/// polynomial. For sigma = kappa*x this reduces to |kappa| < 2.
class DensityModel {
 public:
  explicit DensityModel(std::vector<double> sigma_coeffs, double lambda = 1.0);

  static DensityModel linear(double kappa, double lambda = 1.0);
  static DensityModel homogeneous();

  double lambda() const { return lambda_; }
  const std::vector<double>& sigma_coeffs() const { return sigma_coeffs_; }

  double sigma(double x) const;
  double total(double x) const { return 1.0 + lambda_ * sigma(x); }

  /// Coefficients of sigma(x)^2.
  std::vector<double> sigma_squared_coeffs() const;

  /// <0|sigma|0> = integral of sigma over the interval.
  double sigma_mean() const;

  bool is_homogeneous() const;
  bool is_linear() const;
  /// The slope for sigma = kappa*x; throws if sigma is not linear.
  double kappa() const;

 private:
  std::vector<double> sigma_coeffs_;
  double lambda_;
};

/// Minimum of a polynomial on [a, b] via its critical points.
double polynomial_min(const std::vector<double>& coeffs, double a, double b);

}  // namespace sumrules
