#include "sumrules/hurwitz.hpp"

#include <cmath>
#include <stdexcept>

#include "sumrules/util.hpp"

namespace sumrules {

namespace {

// B_{2j}/(2j)! for the Euler-Maclaurin tail, j = 1..12.
constexpr double kBernoulliOverFactorial[] = {
    8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19,
};

}  // namespace

HurwitzResult hurwitz_zeta(double a, double q) {
  if (!(a > 1.0)) throw std::invalid_argument("hurwitz_zeta: requires exponent a > 1");
  if (!(q > 0.0)) throw std::invalid_argument("hurwitz_zeta: requires offset q > 0");

  // Push the summation edge far enough out that the correction terms decay
  // geometrically; the head is summed directly.
  const double edge_target = 18.0 + 0.5 * a;
  const int m = (q >= edge_target) ? 0 : static_cast<int>(std::ceil(edge_target - q));
  const double p = q + m;

  KahanSum head;
  for (int k = m - 1; k >= 0; --k) head.add(std::pow(q + k, -a));

  const double tail_integral = std::pow(p, 1.0 - a) / (a - 1.0);
  const double tail_half = 0.5 * std::pow(p, -a);

  double rising = a;               // a(a+1)...(a+2j-2), starts at j=1
  double power = std::pow(p, -a - 1.0);
  const double inv_p2 = 1.0 / (p * p);
  double correction = 0.0;
  double bound = 0.0;
  for (int j = 1; j <= 12; ++j) {
    const double term = kBernoulliOverFactorial[j - 1] * rising * power;
    correction += term;
    bound = 2.0 * std::abs(term);
    if (std::abs(term) < 1e-18 * (std::abs(head.value()) + std::abs(tail_integral))) break;
    rising *= (a + 2.0 * j - 1.0) * (a + 2.0 * j);
    power *= inv_p2;
  }

  const double value = head.value() + tail_integral + tail_half + correction;
  return {value, bound};
}

double riemann_zeta(double a) { return hurwitz_zeta(a, 1.0).value; }

}  // namespace sumrules
