#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sumrules/density.hpp"
#include "sumrules/neumann_basis.hpp"
#include "sumrules/quadrature.hpp"
#include "sumrules/util.hpp"

using namespace sumrules;

namespace {

// Independent oracle: <n|p(x)|m> by composite Gauss-Legendre quadrature.
double element_by_quadrature(const std::vector<double>& poly, int n, int m) {
  GaussLegendre gl(24);
  std::vector<double> cuts;
  const int panels = std::max(2, (n + m) / 4 + 2);
  for (int i = 1; i < panels; ++i) cuts.push_back(-0.5 + double(i) / panels);
  auto p = [&](double x) {
    double v = 0.0;
    for (size_t j = poly.size(); j-- > 0;) v = v * x + poly[j];
    return v;
  };
  return gl.integrate(
      [&](double x) { return NeumannBasis::mode(n, x) * p(x) * NeumannBasis::mode(m, x); }, -0.5,
      0.5, cuts);
}

}  // namespace

TEST_CASE("eigenvalues") {
  CHECK(NeumannBasis::eigenvalue(0) == 0.0);
  CHECK(NeumannBasis::eigenvalue(1) == doctest::Approx(kPi * kPi).epsilon(1e-15));
  CHECK(NeumannBasis::eigenvalue(3) == doctest::Approx(9.0 * kPi * kPi).epsilon(1e-15));
  const NeumannBasis basis(50);
  for (int n = 1; n <= 50; ++n) CHECK(basis.eigenvalues()[n] > basis.eigenvalues()[n - 1]);
  CHECK_THROWS_AS(NeumannBasis::eigenvalue(-1), std::invalid_argument);
}

TEST_CASE("orthonormality: Gram matrix is the identity") {
  const int K = 40;
  GaussLegendre gl(24);
  std::vector<double> cuts;
  const int panels = 2 * K / 4;
  for (int i = 1; i < panels; ++i) cuts.push_back(-0.5 + double(i) / panels);
  double worst = 0.0;
  for (int n = 0; n <= K; ++n) {
    for (int m = n; m <= K; ++m) {
      const double g = gl.integrate(
          [&](double x) { return NeumannBasis::mode(n, x) * NeumannBasis::mode(m, x); }, -0.5, 0.5,
          cuts);
      worst = std::max(worst, std::abs(g - (n == m ? 1.0 : 0.0)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("matrix elements of kappa*x: frozen derived values") {
  const DensityModel den = DensityModel::linear(0.7);
  const double kappa = 0.7;
  // even m: vanishing overlap with the zero mode
  CHECK(kappa * sigma_element(0, 2, den) == doctest::Approx(0.0).epsilon(0).scale(1));
  // <0|kx|1> = -2 sqrt(2) k / pi^2
  CHECK(kappa * sigma_element(0, 1, den) ==
        doctest::Approx(-2.0 * std::sqrt(2.0) * kappa / (kPi * kPi)).epsilon(1e-15));
  // <1|kx|2> = -(2k/pi^2)(1/1 + 1/9)
  CHECK(kappa * sigma_element(1, 2, den) ==
        doctest::Approx(-2.0 * kappa / (kPi * kPi) * (1.0 + 1.0 / 9.0)).epsilon(1e-15));
  // odd sigma: diagonal vanishes by parity
  for (int n : {0, 1, 5, 17}) CHECK(sigma_element(n, n, den) == 0.0);
}

TEST_CASE("matrix elements agree with the quadrature oracle") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> mode(0, 24);
  const std::vector<std::vector<double>> polys = {
      {0.0, 1.0}, {0.0, 0.3, 0.2}, {0.05, 0.4, 0.0, 0.1}, {0.0, 0.0, 1.0}};
  for (const auto& poly : polys) {
    for (int trial = 0; trial < 12; ++trial) {
      const int n = mode(rng);
      const int m = mode(rng);
      const double closed = polynomial_element(poly, n, m);
      const double quad = element_by_quadrature(poly, n, m);
      CHECK(std::abs(closed - quad) < 1e-12);
    }
  }
}

TEST_CASE("table matches elementwise evaluation and is symmetric") {
  const DensityModel den({0.0, 0.3, 0.2});
  const MatrixElementTable table(den, 30);
  for (int n = 0; n <= 30; n += 5) {
    for (int m = 0; m <= 30; m += 7) {
      CHECK(table(n, m) == doctest::Approx(sigma_element(n, m, den)).epsilon(1e-14));
      CHECK(table(n, m) == table(m, n));
    }
  }
}

TEST_CASE("completeness: sum_m <n|x|m>^2 increases to <n|x^2|n>") {
  const std::vector<double> x{0.0, 1.0};
  const std::vector<double> x2{0.0, 0.0, 1.0};
  for (int n : {0, 3}) {
    const double target = polynomial_element(x2, n, n);
    double partial = 0.0;
    double prev = -1.0;
    for (int M = 0; M <= 400; ++M) {
      const double el = polynomial_element(x, n, M);
      partial += el * el;
      CHECK(partial >= prev);        // monotone from below
      CHECK(partial <= target + 1e-12);
      prev = partial;
    }
    CHECK(partial == doctest::Approx(target).epsilon(1e-6));
  }
}

TEST_CASE("regularized Green's function: closed-form values") {
  CHECK(green_regularized(0.0, 0.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(green_regularized(0.5, -0.5) == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(green_regularized(0.6, 0.0), std::invalid_argument);
}

TEST_CASE("regularized Green's function has zero mean in each argument") {
  GaussLegendre gl(20);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const double x = coord(rng);
    const double mean =
        gl.integrate([&](double y) { return green_regularized(x, y); }, -0.5, 0.5, {x});
    CHECK(std::abs(mean) < 1e-10);
  }
}

TEST_CASE("green_q: symmetry and convergence to the closed form") {
  for (double x : {-0.41, 0.0, 0.2}) {
    for (double y : {-0.3, 0.17}) {
      CHECK(green_q(1, x, y, 50) == doctest::Approx(green_q(1, y, x, 50)).epsilon(1e-15));
    }
  }
  for (int truncation : {100, 400, 1600}) {
    double worst = 0.0;
    for (double x : {-0.5, -0.21, 0.0, 0.33, 0.5}) {
      for (double y : {-0.37, 0.05, 0.5}) {
        worst = std::max(worst,
                         std::abs(green_q(0, x, y, truncation) - green_regularized(x, y)));
      }
    }
    CHECK(worst < 2.0 / (kPi * kPi * truncation));
  }
}

TEST_CASE("green_q moment: first-moment trace of G^(1)") {
  // int int x G^(1)(x,y) y dx dy = sum_odd 8/(n^8 pi^8) = (8/pi^8)(255/256) zeta(8)
  const int truncation = 2000;
  GaussLegendre gl(24);
  std::vector<double> cuts;
  for (int i = 1; i < 16; ++i) cuts.push_back(-0.5 + i / 16.0);
  // spectral-sum oracle, evaluated directly
  KahanSum oracle;
  for (int n = truncation; n >= 1; n -= 2)
    oracle.add(8.0 / std::pow(double(n) * n * kPi * kPi, 4));
  CHECK(oracle.value() == doctest::Approx(17.0 / 20160.0).epsilon(1e-12));
  // checked against the truncated kernel itself on a modest truncation
  const int kq = 60;
  const double quad = gl.integrate(
      [&](double x) {
        return x * gl.integrate([&](double y) { return green_q(1, x, y, kq) * y; }, -0.5, 0.5, cuts);
      },
      -0.5, 0.5, cuts);
  KahanSum truncated;
  for (int n = kq; n >= 1; n -= 2) truncated.add(8.0 / std::pow(double(n) * n * kPi * kPi, 4));
  CHECK(quad == doctest::Approx(truncated.value()).epsilon(1e-11));
}

TEST_CASE("composition property of the spectral kernels") {
  GaussLegendre gl(20);
  std::vector<double> cuts;
  for (int i = 1; i < 12; ++i) cuts.push_back(-0.5 + i / 12.0);
  const int truncation = 40;
  for (auto [x, y] : {std::pair{0.1, -0.3}, std::pair{-0.45, 0.2}}) {
    const double composed = gl.integrate(
        [&](double z) { return green_regularized(x, z) * green_q(0, z, y, truncation); }, -0.5, 0.5,
        cuts);
    // G^(0) o G^(q) = G^(q+1) to truncation accuracy
    CHECK(composed == doctest::Approx(green_q(1, x, y, truncation)).epsilon(1e-9));
  }
}

TEST_CASE("density validation") {
  CHECK_NOTHROW(DensityModel::linear(1.9));
  CHECK_THROWS_AS(DensityModel::linear(2.0), std::invalid_argument);
  CHECK_THROWS_AS(DensityModel::linear(-2.3), std::invalid_argument);
  CHECK_NOTHROW(DensityModel({0.0, 0.0, -3.9}));   // 1 - 3.9 x^2 > 0 on the interval
  CHECK_THROWS_AS(DensityModel({0.0, 0.0, -4.1}), std::invalid_argument);
  // interior dip below zero with positive endpoints
  CHECK_THROWS_AS(DensityModel({-1.05, 0.0, 4.0}), std::invalid_argument);
  CHECK(DensityModel::linear(0.5).kappa() == 0.5);
  CHECK(DensityModel::homogeneous().is_homogeneous());
  CHECK_THROWS_AS(DensityModel({0.0, 0.1, 0.2}).kappa(), std::invalid_argument);
}
