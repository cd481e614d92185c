#pragma once

#include <Eigen/Dense>

#include <vector>

#include "sumrules/sum_rules.hpp"

namespace sumrules {

struct FitSample {
  double kappa = 0.0;
  double value = 0.0;
  double tail_estimate = 0.0;
};

/// Z^(num)(s; kappa) over a grid of kappa values. Results are cached by
/// (s, kappa, n_max, basis_size) within the process; the sweep may run on a
/// worker pool (SUMRULE_WORKERS) without affecting values or ordering.
std::vector<FitSample> kappa_sweep(double s, const std::vector<double>& kappa_grid, int n_max,
                                   int basis_size);

struct FitResult {
  int degree = 0;
  Eigen::VectorXd coefficients;  // c_0 .. c_degree in powers of kappa
  double residual_norm = 0.0;
  double condition_estimate = 0.0;
  std::vector<FitSample> sample_points;

  double evaluate(double kappa) const;
};

/// Ordinary least squares on the Vandermonde system, solved by column-pivoted
/// QR. Rank deficiency is signaled; requires more samples than coefficients.
FitResult polyfit(const std::vector<FitSample>& samples, int degree = 4);

/// Analytic constants of Z(3/2) = c0 + c2 kappa^2 + O(kappa^4):
///   c0 = zeta(3)/pi^3,
///   c2 = -381 zeta(7)/(32 pi^7) + D,
/// with D the lattice double sum evaluated m-inner/n-outer under symmetric
/// cutoffs and an integral-comparison tail bound.
struct Z32Constants {
  double c0 = 0.0;
  double c2 = 0.0;
  double double_sum = 0.0;
  double double_sum_tail_bound = 0.0;
};

Z32Constants z32_constants(int k_double_sum = 4000);

}  // namespace sumrules
