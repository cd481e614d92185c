#pragma once

#include <Eigen/Dense>

#include <array>

#include "sumrules/density.hpp"

namespace sumrules {

/// Coefficient table q^(order) of the Green's function of order 1/N at
/// shift gamma, over modes 0..truncation (row/column 0 is the zero mode,
/// shifted eigenvalue gamma).
struct FractionalGreenCoeffs {
  int root_order;        // N
  int order;             // perturbative order in lambda, 0..2
  Eigen::MatrixXd table; // (K+1) x (K+1), symmetric
};

/// Full-Green coefficient table Q^(order), with the zero-mode channel
/// (intermediate mode r = 0, weight 1/gamma) kept separate from the
/// primed sum so the gamma -> 0 renormalization can be probed term by term.
struct QCoeffs {
  int order;
  Eigen::MatrixXd zero_mode_part;
  Eigen::MatrixXd primed_part;
  Eigen::MatrixXd table() const { return zero_mode_part + primed_part; }
};

/// The three coefficient tables q^(0), q^(1), q^(2). The internal mode sum
/// in q^(2) runs over all modes including r = 0 (weight 1/gamma).
/// Preconditions: N >= 1, gamma > 0, truncation >= 2. Includes lambda factors.
std::array<FractionalGreenCoeffs, 3> q_matrices(int root_order, double gamma,
                                                const DensityModel& density, int truncation);

QCoeffs q_coeffs(int order, double gamma, const DensityModel& density, int truncation);

/// Max-norm residual of the N-fold composition identity at order k:
///   sum over compositions (k_1..k_N) of k:  q^(k_1) ... q^(k_N)  -  Q^(k)
/// on the truncation x truncation block. With reference_truncation == 0 the
/// Q side is evaluated at the same truncation (the identity is then exact up
/// to roundoff); a larger reference truncation measures what the truncated
/// tables discard, which decreases under K-refinement.
double verify_composition(int root_order, int order, double gamma, const DensityModel& density,
                          int truncation, int reference_truncation = 0);

}  // namespace sumrules
