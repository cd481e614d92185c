#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sumrules/fractional_green.hpp"
#include "sumrules/kernels.hpp"
#include "sumrules/neumann_basis.hpp"

using namespace sumrules;

TEST_CASE("q0 diagonal law: q0_nn^N = 1/(eps_n + gamma)") {
  const double g = 1e-3;
  const DensityModel den = DensityModel::linear(0.5);
  for (int N : {1, 2, 3, 5}) {
    const auto qs = q_matrices(N, g, den, 12);
    for (int n = 0; n <= 12; ++n) {
      const double expected = 1.0 / (NeumannBasis::eigenvalue(n) + g);
      CHECK(std::pow(qs[0].table(n, n), N) == doctest::Approx(expected).epsilon(1e-13));
      for (int m = 0; m <= 12; ++m)
        if (m != n) CHECK(qs[0].table(n, m) == 0.0);
    }
  }
  // q0_nn for N=2, eps=pi^2, gamma=1e-3
  const auto qs = q_matrices(2, 1e-3, den, 8);
  CHECK(qs[0].table(1, 1) == doctest::Approx(std::pow(kPi * kPi + 1e-3, -0.5)).epsilon(1e-15));
}

TEST_CASE("q1 at N=1 reduces to the half-sum of inverse shifted eigenvalues") {
  const double g = 1e-2;
  const DensityModel den = DensityModel::linear(0.3);
  const auto qs = q_matrices(1, g, den, 10);
  for (int n = 0; n <= 10; ++n) {
    for (int m = 0; m <= 10; ++m) {
      const double el = 0.3 * sigma_element(n, m, den) / 0.3;  // lambda = 1, sigma = 0.3 x
      const double expected = el *
                              (1.0 / (NeumannBasis::eigenvalue(n) + g) +
                               1.0 / (NeumannBasis::eigenvalue(m) + g)) /
                              2.0;
      CHECK(qs[1].table(n, m) == doctest::Approx(expected).epsilon(1e-13).scale(1e-6));
    }
  }
}

TEST_CASE("q tables are symmetric") {
  const auto qs = q_matrices(3, 1e-2, DensityModel({0.05, 0.4, 0.0, 0.1}), 20);
  for (const auto& q : qs) {
    CHECK((q.table - q.table.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("N=1: q tables equal the Q tables exactly (same truncation)") {
  const DensityModel den = DensityModel::linear(0.5);
  for (int k : {0, 1, 2}) {
    CHECK(verify_composition(1, k, 1e-2, den, 40) < 1e-14);
  }
}

TEST_CASE("gamma = 0 rejected") {
  CHECK_THROWS_AS(q_matrices(2, 0.0, DensityModel::linear(0.1), 8), std::invalid_argument);
  CHECK_THROWS_AS(q_coeffs(1, -1.0, DensityModel::linear(0.1), 8), std::invalid_argument);
}

TEST_CASE("Q trivial forms") {
  const double g = 1e-3;
  const DensityModel den = DensityModel::linear(0.4);
  const QCoeffs q0 = q_coeffs(0, g, den, 15);
  for (int n = 0; n <= 15; ++n) {
    for (int m = 0; m <= 15; ++m) {
      const double expected = n == m ? 1.0 / (NeumannBasis::eigenvalue(n) + g) : 0.0;
      CHECK(q0.table()(n, m) == doctest::Approx(expected).epsilon(1e-15));
    }
  }
  // zero-mode part at k=0, n=m=0 is exactly 1/gamma
  CHECK(q0.zero_mode_part(0, 0) == doctest::Approx(1.0 / g).epsilon(1e-15));
  CHECK(q0.primed_part(0, 0) == 0.0);
}

TEST_CASE("Q1 against direct first-order assembly") {
  const double g = 1e-2;
  const DensityModel den = DensityModel::linear(0.5);
  const QCoeffs q1 = q_coeffs(1, g, den, 12);
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= 12; ++m) {
      const double el = 0.5 * sigma_element(n, m, den);
      const double expected = 0.5 * el *
                              (1.0 / (NeumannBasis::eigenvalue(n) + g) +
                               1.0 / (NeumannBasis::eigenvalue(m) + g));
      CHECK(q1.table()(n, m) == doctest::Approx(expected).epsilon(1e-13).scale(1e-9));
    }
  }
}

TEST_CASE("gamma scaling: zero-mode part of Q^(k) times gamma is gamma-independent") {
  const DensityModel den({0.05, 0.4, 0.0, 0.1});
  for (int k : {0, 1, 2}) {
    Eigen::MatrixXd ref;
    bool first = true;
    for (double g : {1e-2, 1e-3, 1e-4}) {
      const Eigen::MatrixXd scaled = g * q_coeffs(k, g, den, 10).zero_mode_part;
      if (first) {
        ref = scaled;
        first = false;
      } else {
        CHECK((scaled - ref).cwiseAbs().maxCoeff() < 1e-12 * ref.cwiseAbs().maxCoeff());
      }
    }
  }
}

TEST_CASE("composition identity at equal truncation: N=2,3 all orders") {
  const DensityModel den = DensityModel::linear(0.5);
  for (int N : {2, 3}) {
    for (int k : {0, 1, 2}) {
      CHECK(verify_composition(N, k, 1e-2, den, 30) < 1e-12);
    }
  }
}

TEST_CASE("composition residual against a refined reference decreases in K") {
  const DensityModel den = DensityModel::linear(0.5);
  for (int N : {2, 3}) {
    const double r30 = verify_composition(N, 2, 1e-2, den, 30, 120);
    const double r60 = verify_composition(N, 2, 1e-2, den, 60, 240);
    CHECK(r30 > 1e-9);  // genuinely truncation limited
    CHECK(r60 < 0.5 * r30);
    // k = 1 has no internal mode sums; both residuals sit at roundoff
    CHECK(verify_composition(N, 1, 1e-2, den, 30, 120) < 1e-14);
    CHECK(verify_composition(N, 1, 1e-2, den, 60, 240) < 1e-14);
  }
}
