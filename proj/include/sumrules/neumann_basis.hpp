#pragma once

#include <Eigen/Dense>

#include <vector>

#include "sumrules/density.hpp"

namespace sumrules {

/// Homogeneous Neumann problem on the unit interval [-1/2, 1/2]:
///   psi_0 = 1,  psi_n(x) = sqrt(2) cos(n pi (x + 1/2)),  eps_n = n^2 pi^2.
/// The zero mode (n = 0) carries the exactly vanishing eigenvalue.
class NeumannBasis {
 public:
  explicit NeumannBasis(int mode_count);

  static double eigenvalue(int n);
  static double mode(int n, double x);

  double length() const { return 1.0; }
  double volume() const { return 1.0; }
  int mode_count() const { return mode_count_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

 private:
  int mode_count_;
  std::vector<double> eigenvalues_;  // eps_0 .. eps_{mode_count}
};

/// <n|p(x)|m> for a polynomial p, in closed form (cosine-moment recursion).
double polynomial_element(const std::vector<double>& poly, int n, int m);

/// <n|sigma|m> for the density's sigma polynomial (lambda not included).
double sigma_element(int n, int m, const DensityModel& density);

/// Symmetric (K+1)x(K+1) table of <n|p(x)|m> over modes 0..K.
class MatrixElementTable {
 public:
  MatrixElementTable(const DensityModel& density, int truncation);
  static MatrixElementTable of_polynomial(const std::vector<double>& poly, int truncation);

  int truncation() const { return truncation_; }
  double operator()(int n, int m) const { return table_(n, m); }
  const Eigen::MatrixXd& matrix() const { return table_; }

 private:
  MatrixElementTable(std::vector<double> poly, int truncation, int);
  int truncation_;
  Eigen::MatrixXd table_;
};

/// Calibration constant c for the off-diagonal decay law
/// |<m|sigma|n>| <= 2c/(n-m)^2 of polynomial matrix elements, measured from
/// the cosine moments of sigma near wavenumber K. Feeds the tail bounds.
double sigma_decay_scale(const DensityModel& density, int truncation);

/// Regularized Neumann Green's function (zero mode projected out):
///   G0(x, y) = (1 - 6|x-y| + 6(x^2+y^2)) / 12.
double green_regularized(double x, double y);

/// Truncated spectral sum G^(q)(x,y) = sum_{n=1}^{truncation} psi_n(x)psi_n(y)/eps_n^{q+1}.
double green_q(int q, double x, double y, int truncation);

}  // namespace sumrules
