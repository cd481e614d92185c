#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sumrules/hurwitz.hpp"
#include "sumrules/quadrature.hpp"
#include "sumrules/util.hpp"

using namespace sumrules;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  GaussLegendre gl(20);
  // degree 39 is the exactness limit of a 20-point rule
  auto f = [](double x) { return 3.0 * std::pow(x, 12) - 2.0 * x * x * x + x - 4.0; };
  const double exact = 3.0 / 13.0 * (std::pow(0.5, 13) - std::pow(-0.5, 13)) - 4.0;
  CHECK(gl.integrate(f, -0.5, 0.5) == doctest::Approx(exact).epsilon(1e-15));
}

TEST_CASE("panel splits recover integrals of kinked integrands exactly") {
  GaussLegendre gl(20);
  const double c = 0.137;
  auto f = [c](double x) { return std::abs(x - c) * (1.0 + x * x); };
  // int |x-c| (1+x^2) dx over [-1/2,1/2], split at c, each piece polynomial
  auto piece = [c](double a, double b, double sign) {
    auto F = [c, sign](double x) {
      // antiderivative of sign*(x-c)(1+x^2)
      return sign * (x * x / 2.0 + std::pow(x, 4) / 4.0 - c * x - c * x * x * x / 3.0);
    };
    return F(b) - F(a);
  };
  const double exact = piece(-0.5, c, -1.0) + piece(c, 0.5, 1.0);
  CHECK(gl.integrate(f, -0.5, 0.5, {c}) == doctest::Approx(exact).epsilon(1e-15));
  // without the split the rule is visibly off at 20 points
  CHECK(std::abs(gl.integrate(f, -0.5, 0.5) - exact) > 1e-8);
}

TEST_CASE("oscillatory integrand converges with composite panels") {
  GaussLegendre gl(24);
  auto f = [](double x) { return std::cos(40.0 * kPi * x) * std::cos(40.0 * kPi * x); };
  std::vector<double> cuts;
  for (int i = 1; i < 20; ++i) cuts.push_back(-0.5 + i / 20.0);
  CHECK(gl.integrate(f, -0.5, 0.5, cuts) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("hurwitz zeta against brute force with integral remainder") {
  // zeta_H(3, 201) ~ sum to 1e6 plus the Euler-Maclaurin remainder of the cut
  KahanSum brute;
  for (int n = 1000000; n >= 201; --n) brute.add(1.0 / (double(n) * n * n));
  // integral remainder of the cut: zeta_H(3, M) = 1/(2M^2) + 1/(2M^3) + O(M^-4)
  const double m = 1.0e6 + 1.0;
  const double tail = 0.5 / (m * m) + 0.5 / (m * m * m) + 0.25 / (m * m * m * m);
  const auto z = hurwitz_zeta(3.0, 201.0);
  CHECK(z.value == doctest::Approx(brute.value() + tail).epsilon(1e-12));
  CHECK(z.value == doctest::Approx(1.243765624869794921729e-5).epsilon(1e-14));
  CHECK(z.error_bound >= 0.0);
  CHECK(z.error_bound < 1e-14 * z.value + 1e-30);
}

TEST_CASE("hurwitz zeta frozen references") {
  CHECK(riemann_zeta(3.0) == doctest::Approx(1.2020569031595942854).epsilon(1e-15));
  CHECK(riemann_zeta(8.0) == doctest::Approx(1.004077356197944339379).epsilon(1e-15));
  CHECK(hurwitz_zeta(4.0, 11.0).value == doctest::Approx(2.866502173816447309263e-4).epsilon(1e-14));
}

TEST_CASE("hurwitz zeta rejects out-of-domain parameters") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("hurwitz tail is monotone in the offset") {
  double prev = hurwitz_zeta(3.0, 10.0).value;
  for (int q = 20; q <= 60; q += 10) {
    const double cur = hurwitz_zeta(3.0, q).value;
    CHECK(cur < prev);
    prev = cur;
  }
}
