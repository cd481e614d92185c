#include "sumrules/density.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sumrules {

namespace {

double eval_poly(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (size_t j = c.size(); j-- > 0;) v = v * x + c[j];
  return v;
}

std::vector<double> trim(std::vector<double> c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  return c;
}

}  // namespace

double polynomial_min(const std::vector<double>& coeffs, double a, double b) {
  const std::vector<double> c = trim(coeffs);
  double best = std::min(eval_poly(c, a), eval_poly(c, b));
  if (c.size() <= 2) return best;  // constant or linear: extrema at endpoints

  // Critical points: roots of the derivative, via its companion matrix.
  std::vector<double> d(c.size() - 1);
  for (size_t j = 1; j < c.size(); ++j) d[j - 1] = static_cast<double>(j) * c[j];
  const std::vector<double> dt = trim(d);
  if (dt.size() >= 2) {
    const int deg = static_cast<int>(dt.size()) - 1;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -dt[i] / dt[deg];
    const Eigen::VectorXcd roots = comp.eigenvalues();
    for (int i = 0; i < roots.size(); ++i) {
      if (std::abs(roots[i].imag()) > 1e-10 * (1.0 + std::abs(roots[i].real()))) continue;
      const double x = roots[i].real();
      if (x > a && x < b) best = std::min(best, eval_poly(c, x));
    }
  }
  return best;
}

DensityModel::DensityModel(std::vector<double> sigma_coeffs, double lambda)
    : sigma_coeffs_(std::move(sigma_coeffs)), lambda_(lambda) {
  if (sigma_coeffs_.empty()) sigma_coeffs_.push_back(0.0);
  std::vector<double> total = sigma_coeffs_;
  for (double& c : total) c *= lambda_;
  total[0] += 1.0;
  if (polynomial_min(total, -0.5, 0.5) <= 0.0) {
    throw std::invalid_argument(
        "DensityModel: Sigma(x) = 1 + lambda*sigma(x) must be positive on [-1/2, 1/2]");
  }
}

DensityModel DensityModel::linear(double kappa, double lambda) {
  return DensityModel({0.0, kappa}, lambda);
}

DensityModel DensityModel::homogeneous() { return DensityModel({0.0}, 1.0); }

double DensityModel::sigma(double x) const { return eval_poly(sigma_coeffs_, x); }

std::vector<double> DensityModel::sigma_squared_coeffs() const {
  std::vector<double> sq(2 * sigma_coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < sigma_coeffs_.size(); ++i)
    for (size_t j = 0; j < sigma_coeffs_.size(); ++j) sq[i + j] += sigma_coeffs_[i] * sigma_coeffs_[j];
  return sq;
}

double DensityModel::sigma_mean() const {
  // integral of x^j over [-1/2, 1/2]: 0 for odd j, 2^-j/(j+1) for even j
  double m = 0.0;
  for (size_t j = 0; j < sigma_coeffs_.size(); j += 2)
    m += sigma_coeffs_[j] * std::pow(0.5, static_cast<double>(j)) / (j + 1.0);
  return m;
}

bool DensityModel::is_homogeneous() const {
  if (lambda_ == 0.0) return true;
  for (double c : sigma_coeffs_)
    if (c != 0.0) return false;
  return true;
}

bool DensityModel::is_linear() const {
  if (sigma_coeffs_.size() < 2 || sigma_coeffs_[0] != 0.0) return sigma_coeffs_.size() < 2;
  for (size_t j = 2; j < sigma_coeffs_.size(); ++j)
    if (sigma_coeffs_[j] != 0.0) return false;
  return true;
}

double DensityModel::kappa() const {
  if (!is_linear()) throw std::invalid_argument("DensityModel: sigma is not of the form kappa*x");
  return sigma_coeffs_.size() >= 2 ? lambda_ * sigma_coeffs_[1] : 0.0;
}

}  // namespace sumrules
