#include "sumrules/ritz.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>

#include "sumrules/hurwitz.hpp"
#include "sumrules/neumann_basis.hpp"
#include "sumrules/util.hpp"

namespace sumrules {

RitzMatrices assemble(const DensityModel& density, int basis_size) {
  if (basis_size < 2) throw std::invalid_argument("assemble: basis_size must be >= 2");
  const int K = basis_size - 1;
  const MatrixElementTable table(density, K);
  RitzMatrices m;
  m.stiffness = Eigen::MatrixXd::Zero(basis_size, basis_size);
  for (int n = 0; n <= K; ++n) m.stiffness(n, n) = NeumannBasis::eigenvalue(n);
  m.mass = Eigen::MatrixXd::Identity(basis_size, basis_size) + density.lambda() * table.matrix();
  return m;
}

RitzSpectrum solve(const DensityModel& density, int basis_size) {
  if (basis_size < 2) throw std::invalid_argument("solve: basis_size must be >= 2");
  const int K = basis_size - 1;
  const MatrixElementTable table(density, K);
  const double lam = density.lambda();

  // Reduced problem on modes 1..K after deflating the exact pair (E=0, e_0):
  // stiffness stays diagonal, mass becomes the Schur complement of the
  // zero-mode entry.
  Eigen::MatrixXd mass = Eigen::MatrixXd::Identity(K, K) + lam * table.matrix().bottomRightCorner(K, K);
  const Eigen::VectorXd coupling = lam * table.matrix().block(1, 0, K, 1);
  const double m00 = 1.0 + lam * table(0, 0);
  mass.noalias() -= (coupling * coupling.transpose()) / m00;

  Eigen::MatrixXd stiffness = Eigen::MatrixXd::Zero(K, K);
  for (int n = 1; n <= K; ++n) stiffness(n - 1, n - 1) = NeumannBasis::eigenvalue(n);

  Eigen::VectorXd w(K);
  const lapack_int info = LAPACKE_dsygvd(LAPACK_COL_MAJOR, 1, 'N', 'L', K, stiffness.data(), K,
                                         mass.data(), K, w.data());
  if (info > K) {
    throw std::runtime_error(
        "solve: mass matrix factorization failed (density invalid at this truncation)");
  }
  if (info != 0) throw std::runtime_error("solve: generalized eigensolver did not converge");

  RitzSpectrum out;
  out.basis_size = basis_size;
  out.eigenvalues.resize(basis_size);
  out.eigenvalues(0) = 0.0;
  out.eigenvalues.tail(K) = w;

  // Second-order estimate of what the basis cutoff costs each level, from the
  // coupling decay |<n|sigma|m>| <= 2c/(m-n)^2 and 1/eps_m < 1/(pi K)^2.
  const double c = 2.0 * lam * sigma_decay_scale(density, K);
  out.convergence_estimate.resize(basis_size);
  out.convergence_estimate(0) = 0.0;
  for (int n = 1; n <= K; ++n) {
    const double gap = std::max(1, K - n);
    const double coupling_tail = c * c / (3.0 * gap * gap * gap);
    out.convergence_estimate(n) =
        out.eigenvalues(n) * out.eigenvalues(n) * coupling_tail / (kPi * kPi * K * K);
  }
  return out;
}

double asymptotic_coefficient(double kappa) {
  if (std::abs(kappa) >= 2.0)
    throw std::invalid_argument("asymptotic_coefficient: requires |kappa| < 2");
  if (std::abs(kappa) < 1e-6) return kPi * kPi;
  const double d = std::pow(2.0 - kappa, 1.5) - std::pow(2.0 + kappa, 1.5);
  return 18.0 * kPi * kPi * kappa * kappa / (d * d);
}

double asymptotic_level(int n, double kappa) {
  if (n < 1) throw std::invalid_argument("asymptotic_level: requires n >= 1");
  return asymptotic_coefficient(kappa) * n * n;
}

TailSum tail_sum_with_bound(double s, int n_max, double kappa) {
  if (!(s > 0.5)) throw std::invalid_argument("tail_sum: requires s > 1/2 (tail diverges otherwise)");
  if (n_max < 1) throw std::invalid_argument("tail_sum: requires n_max >= 1");
  const double c = asymptotic_coefficient(kappa);
  const auto z = hurwitz_zeta(2.0 * s, n_max + 1.0);
  return {std::pow(c, -s) * z.value, std::pow(c, -s) * z.error_bound};
}

double tail_sum(double s, int n_max, double kappa) { return tail_sum_with_bound(s, n_max, kappa).value; }

SumRuleResult z_numerical(double s, double kappa, int n_max, int basis_size) {
  if (n_max >= basis_size - 1)
    throw std::invalid_argument("z_numerical: requires n_max < basis_size - 1");
  const DensityModel density = DensityModel::linear(kappa);
  const RitzSpectrum spectrum = solve(density, basis_size);

  KahanSum head;
  double head_error = 0.0;
  for (int n = n_max; n >= 1; --n) {
    const double e = spectrum.eigenvalues(n);
    head.add(std::pow(e, -s));
    head_error += s * spectrum.convergence_estimate(n) * std::pow(e, -s - 1.0);
  }
  const TailSum tail = tail_sum_with_bound(s, n_max, kappa);

  SumRuleResult r;
  r.s = s;
  r.route = Route::numerical_spectrum;
  r.truncation = basis_size;
  r.total = head.value() + tail.value;
  r.value_by_order = {r.total, 0.0, 0.0};
  r.tail_estimate = tail.error_bound + head_error;
  return r;
}

}  // namespace sumrules
