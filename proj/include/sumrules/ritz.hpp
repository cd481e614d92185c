#pragma once

#include <Eigen/Dense>

#include "sumrules/density.hpp"
#include "sumrules/sum_rules.hpp"

namespace sumrules {

/// Rayleigh-Ritz discretization of -u'' = E Sigma(x) u in the Neumann
/// cosine basis: diagonal stiffness eps_n, mass <n|Sigma|m>.
struct RitzMatrices {
  Eigen::MatrixXd stiffness;
  Eigen::MatrixXd mass;
};

RitzMatrices assemble(const DensityModel& density, int basis_size);

/// Numerical spectrum of the heterogeneous string. The zero mode (constant
/// eigenfunction, eigenvalue exactly 0) is deflated analytically -- the
/// stiffness row of the constant mode vanishes identically -- and the
/// remaining levels come from the Schur-complement-reduced symmetric-definite
/// problem solved via triangular factorization of the reduced mass.
struct RitzSpectrum {
  int basis_size = 0;
  Eigen::VectorXd eigenvalues;           // ascending; eigenvalues[0] = 0
  Eigen::VectorXd convergence_estimate;  // per-level truncation-error estimate
};

RitzSpectrum solve(const DensityModel& density, int basis_size);

/// Coefficient c(kappa) of the leading eigenvalue asymptotics
/// E_n ~ c(kappa) n^2 for the linear density, c(kappa) -> pi^2 as kappa -> 0
/// (removable singularity, switched below |kappa| = 1e-6).
double asymptotic_coefficient(double kappa);
double asymptotic_level(int n, double kappa);

struct TailModel {
  double kappa = 0.0;
  double coefficient = 0.0;  // c(kappa)
  int n_max = 0;
};

struct TailSum {
  double value = 0.0;
  double error_bound = 0.0;
};

/// sum_{n > n_max} (c(kappa) n^2)^{-s} = c(kappa)^{-s} zeta_H(2s, n_max+1),
/// Hurwitz zeta by Euler-Maclaurin with a tracked bound. Requires s > 1/2.
TailSum tail_sum_with_bound(double s, int n_max, double kappa);
double tail_sum(double s, int n_max, double kappa);

/// Tail-completed numerical sum rule for the linear density:
///   sum_{n=1}^{n_max} (E_n^{RR})^{-s} + tail_sum(s, n_max, kappa).
/// Requires n_max < basis_size - 1 (upper Ritz levels are not trusted).
SumRuleResult z_numerical(double s, double kappa, int n_max, int basis_size);

}  // namespace sumrules
