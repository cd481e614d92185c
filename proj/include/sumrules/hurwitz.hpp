#pragma once

namespace sumrules {

struct HurwitzResult {
  double value;
  double error_bound;  // bound on |value - zeta_H(a, q)|
};

/// Hurwitz zeta  zeta_H(a, q) = sum_{k>=0} (q+k)^{-a}  for a > 1, q > 0,
/// by Euler-Maclaurin summation with a tracked remainder bound.
HurwitzResult hurwitz_zeta(double a, double q);

/// Riemann zeta for a > 1 (= zeta_H(a, 1)).
double riemann_zeta(double a);

}  // namespace sumrules
