#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "sumrules/density.hpp"

namespace sumrules {

/// How the zero-mode traces <0|Sigma G ... Sigma|0> are evaluated:
/// spectral sums over the truncated basis (exact matrix elements), or
/// nested Gauss quadrature with panel splits at the Green-kernel kinks.
/// The two routes are independent and cross-checked in the verify suite.
enum class TraceRoute { spectral, quadrature };

/// Perturbation series of the fundamental mode in the shift gamma:
///   E0(gamma) = sum_j gamma^j E0^(j),  Psi_0 = sum_j gamma^j Psi_0^(j),
/// with Psi_0^(0) = 1/sqrt(V) and the corrections orthogonal to it.
struct ZeroModeSeries {
  std::vector<double> energy;        // energy[j] = E0^(j); energy[0] = 0
  std::vector<Eigen::VectorXd> psi;  // psi[k] = mode coefficients of Psi_0^(k)
  int truncation = 0;

  /// Psi_0^(k) as a function on [-1/2, 1/2].
  std::function<double(double)> psi_callable(int order) const;
};

/// Energy coefficients E0^(1..max_order) (max_order <= 4) from the closed
/// trace formulas, plus wavefunction corrections to order min(2, max_order)
/// from the recursion.
ZeroModeSeries e0_series(const DensityModel& density, int max_order, int truncation = 2000,
                         TraceRoute route = TraceRoute::spectral);

/// Same series with the energies taken from the order-by-order recursion
/// instead of the closed traces (independent route; any max_order).
ZeroModeSeries e0_series_recursion(const DensityModel& density, int max_order,
                                   int truncation = 2000);

std::function<double(double)> psi0_correction(const DensityModel& density, int order,
                                              int truncation = 2000);

/// The truncated expansion of E0(gamma)^{-s} through second order in the
/// density, term by term. The gamma^{2-s} piece is transient (it vanishes
/// in the gamma -> 0 limit) and is kept separate for the renormalization
/// bookkeeping.
struct E0InversePowerParts {
  double gamma_ms;         // gamma^-s
  double gamma_ms_sigma;   // s gamma^-s <0|sigma|0>
  double gamma_ms_sigma2;  // (1/2) s (s-1) gamma^-s <0|sigma|0>^2
  double gamma_1ms_sum;    // s gamma^{1-s} sum' <0|sigma|n>^2 / eps_n
  double gamma_2ms_sum;    // -s gamma^{2-s} sum' <0|sigma|n>^2 / eps_n^2
  double total() const {
    return gamma_ms + gamma_ms_sigma + gamma_ms_sigma2 + gamma_1ms_sum + gamma_2ms_sum;
  }
};

E0InversePowerParts e0_inverse_power_parts(double s, double gamma, const DensityModel& density,
                                           int truncation = 2000);
double e0_inverse_power(double s, double gamma, const DensityModel& density, int truncation = 2000);

/// Zero-mode coupling sums S_p = sum'_n <0|sigma|n>^2 / eps_n^p (lambda not included).
double zero_mode_coupling_sum(const DensityModel& density, int power, int truncation);

}  // namespace sumrules
