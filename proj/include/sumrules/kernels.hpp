#pragma once

#include <vector>

#include "sumrules/neumann_basis.hpp"

namespace sumrules {

/// Neumann spectrum shifted by gamma > 0 so that every eigenvalue is
/// strictly positive (the zero mode moves to gamma).
struct ShiftedSpectrum {
  ShiftedSpectrum(double gamma, int mode_count);
  double gamma;
  std::vector<double> shifted;  // eps_n + gamma, n = 0..mode_count
};

/// Kernels of the order-1/N coefficient equations. Arguments are the
/// *unshifted* eigenvalues; gamma is added internally.
///   delta = (1/(en+g) + 1/(em+g)) / eta
///   eta   = sum_{j=0}^{N-1} (en+g)^{-(N-1-j)/N} (em+g)^{-j/N}
///   xi    = sum_{j+l<=N-2}  (en+g)^{-j/N} (em+g)^{-(N-2-j-l)/N} (er+g)^{-l/N}
/// so that eta * delta = 1/(en+g) + 1/(em+g) identically.
double kernel_delta(int root_order, double gamma, double eps_n, double eps_m);
double kernel_eta(int root_order, double gamma, double eps_n, double eps_m);
double kernel_xi(int root_order, double gamma, double eps_n, double eps_r, double eps_m);

}  // namespace sumrules
