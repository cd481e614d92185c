#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sumrules/kernels.hpp"

using namespace sumrules;

TEST_CASE("delta: N=1 reduces to the sum of inverses") {
  const double g = 1e-3;
  const double en = 4.0, em = 11.0;
  CHECK(kernel_delta(1, g, en, em) ==
        doctest::Approx(1.0 / (en + g) + 1.0 / (em + g)).epsilon(1e-15));
}

TEST_CASE("delta: diagonal simplification at N=2") {
  // eps_n = eps_m = e - gamma  ->  delta = e^{-1/2}
  const double g = 0.125;
  const double e = std::exp(1.0);
  CHECK(kernel_delta(2, g, e - g, e - g) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("delta: three-term sum at N=3 gives 9/14") {
  // shifted eigenvalues 1 and 8: (1 + 1/8) / (1 + 1/2 + 1/4) = 9/14
  const double g = 0.25;
  CHECK(kernel_delta(3, g, 1.0 - g, 8.0 - g) == doctest::Approx(9.0 / 14.0).epsilon(1e-14));
}

TEST_CASE("eta: trivial and derived values") {
  CHECK(kernel_eta(1, 1e-2, 5.0, 9.0) == doctest::Approx(1.0).epsilon(1e-15));
  // shifted 4 and 9 at N=2: 1/2 + 1/3
  const double g = 0.5;
  CHECK(kernel_eta(2, g, 4.0 - g, 9.0 - g) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("xi: single term at N=2 is 1; empty sum at N=1 is 0") {
  CHECK(kernel_xi(2, 1e-3, 3.0, 7.0, 12.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kernel_xi(1, 1e-3, 3.0, 7.0, 12.0) == 0.0);
}

TEST_CASE("property: eta * delta = 1/(en+g) + 1/(em+g) over random tuples") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> root(1, 6);
  std::uniform_real_distribution<double> eps(0.0, 1e5);
  std::uniform_real_distribution<double> loggamma(-6.0, 0.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int N = root(rng);
    const double g = std::pow(10.0, loggamma(rng));
    const double en = eps(rng), em = eps(rng);
    const double lhs = kernel_eta(N, g, en, em) * kernel_delta(N, g, en, em);
    const double rhs = 1.0 / (en + g) + 1.0 / (em + g);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * rhs);
  }
}

TEST_CASE("shifted spectrum is positive definite") {
  const ShiftedSpectrum s(1e-4, 30);
  for (double v : s.shifted) CHECK(v > 0.0);
  CHECK(s.shifted[0] == doctest::Approx(1e-4).epsilon(1e-15));
  CHECK_THROWS_AS(ShiftedSpectrum(0.0, 10), std::invalid_argument);
}
