#include "sumrules/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace sumrules {

namespace {

void check(int root_order, double gamma, double a, double b) {
  if (root_order < 1) throw std::invalid_argument("kernel: root order N must be >= 1");
  if (!(a + gamma > 0.0) || !(b + gamma > 0.0))
    throw std::invalid_argument("kernel: shifted eigenvalues must be positive");
}

}  // namespace

ShiftedSpectrum::ShiftedSpectrum(double g, int mode_count) : gamma(g) {
  if (!(g > 0.0)) throw std::invalid_argument("ShiftedSpectrum: gamma must be > 0");
  shifted.resize(mode_count + 1);
  for (int n = 0; n <= mode_count; ++n) shifted[n] = NeumannBasis::eigenvalue(n) + g;
}

double kernel_eta(int N, double gamma, double eps_n, double eps_m) {
  check(N, gamma, eps_n, eps_m);
  const double a = eps_n + gamma;
  const double b = eps_m + gamma;
  double sum = 0.0;
  for (int j = 0; j < N; ++j)
    sum += std::pow(a, -(N - 1.0 - j) / N) * std::pow(b, -static_cast<double>(j) / N);
  return sum;
}

double kernel_delta(int N, double gamma, double eps_n, double eps_m) {
  check(N, gamma, eps_n, eps_m);
  const double a = eps_n + gamma;
  const double b = eps_m + gamma;
  // Nearly equal arguments: closed diagonal limit. At the switch threshold
  // the neglected quadratic term is O(((a-b)/a)^2) < 1e-16, below double precision.
  if (std::abs(a - b) < 1e-8 * std::max(a, b)) {
    const double mid = 0.5 * (a + b);
    return 2.0 / (N * std::pow(mid, 1.0 / N));
  }
  return (1.0 / a + 1.0 / b) / kernel_eta(N, gamma, eps_n, eps_m);
}

double kernel_xi(int N, double gamma, double eps_n, double eps_r, double eps_m) {
  check(N, gamma, eps_n, eps_m);
  if (!(eps_r + gamma > 0.0)) throw std::invalid_argument("kernel: shifted eigenvalues must be positive");
  const double a = eps_n + gamma;
  const double b = eps_m + gamma;
  const double c = eps_r + gamma;
  double sum = 0.0;
  for (int j = 0; j <= N - 2; ++j)
    for (int l = 0; l <= N - 2 - j; ++l)
      sum += std::pow(a, -static_cast<double>(j) / N) * std::pow(b, -(N - 2.0 - j - l) / N) *
             std::pow(c, -static_cast<double>(l) / N);
  return sum;
}

}  // namespace sumrules
