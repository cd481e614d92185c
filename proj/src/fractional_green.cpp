#include "sumrules/fractional_green.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sumrules/kernels.hpp"
#include "sumrules/neumann_basis.hpp"
#include "sumrules/util.hpp"

namespace sumrules {

namespace {

// Fractional powers (eps_n + gamma)^{-j/N} for j = 0..N, tabulated once;
// the kernel sums below are assembled from these columns.
struct PowTable {
  PowTable(int N, double gamma, int K) : N(N) {
    pw.assign(N + 1, std::vector<double>(K + 1));
    for (int n = 0; n <= K; ++n) {
      const double a = NeumannBasis::eigenvalue(n) + gamma;
      const double root = std::pow(a, -1.0 / N);
      double v = 1.0;
      for (int j = 0; j <= N; ++j) {
        pw[j][n] = v;
        v *= root;
      }
    }
  }
  double eta(int n, int m) const {
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += pw[N - 1 - j][n] * pw[j][m];
    return s;
  }
  double xi(int n, int r, int m) const {
    double s = 0.0;
    for (int j = 0; j <= N - 2; ++j)
      for (int l = 0; l <= N - 2 - j; ++l) s += pw[j][n] * pw[N - 2 - j - l][m] * pw[l][r];
    return s;
  }
  int N;
  std::vector<std::vector<double>> pw;
};

void check_args(int N, double gamma, int K) {
  if (N < 1) throw std::invalid_argument("q_matrices: root order N must be >= 1");
  if (!(gamma > 0.0))
    throw std::invalid_argument("q_matrices: gamma must be > 0 (gamma = 0 divides by the zero mode)");
  if (K < 2) throw std::invalid_argument("q_matrices: truncation must be >= 2");
}

// binomial(1/2, j) for j = 0, 1, 2
constexpr double kBinomHalf[3] = {1.0, 0.5, -0.125};

}  // namespace

std::array<FractionalGreenCoeffs, 3> q_matrices(int N, double gamma, const DensityModel& density,
                                                int K) {
  check_args(N, gamma, K);
  const double lam = density.lambda();
  const MatrixElementTable s1(density, K);
  const MatrixElementTable s2 = MatrixElementTable::of_polynomial(density.sigma_squared_coeffs(), K);
  const PowTable pt(N, gamma, K);

  Eigen::MatrixXd delta(K + 1, K + 1), eta(K + 1, K + 1);
  for (int n = 0; n <= K; ++n)
    for (int m = 0; m <= K; ++m) {
      eta(n, m) = pt.eta(n, m);
      delta(n, m) = (pt.pw[N][n] + pt.pw[N][m]) / eta(n, m);
    }

  std::array<FractionalGreenCoeffs, 3> out;
  out[0] = {N, 0, Eigen::MatrixXd::Zero(K + 1, K + 1)};
  for (int n = 0; n <= K; ++n) out[0].table(n, n) = pt.pw[1][n];  // (eps_n+gamma)^{-1/N}

  out[1] = {N, 1, (0.5 * lam) * delta.cwiseProduct(s1.matrix())};

  Eigen::MatrixXd q2 = (-0.125 * lam * lam) * delta.cwiseProduct(s2.matrix());
  for (int n = 0; n <= K; ++n) {
    for (int m = n; m <= K; ++m) {
      KahanSum acc;
      for (int r = K; r >= 0; --r) {
        const double w = 1.0 / (NeumannBasis::eigenvalue(r) + gamma) -
                         delta(n, r) * delta(r, m) * pt.xi(n, r, m);
        acc.add(s1(n, r) * s1(r, m) * w);
      }
      const double v = q2(n, m) + lam * lam * acc.value() / (4.0 * eta(n, m));
      q2(n, m) = v;
      q2(m, n) = v;
    }
  }
  out[2] = {N, 2, std::move(q2)};
  return out;
}

QCoeffs q_coeffs(int order, double gamma, const DensityModel& density, int K) {
  check_args(1, gamma, K);
  if (order < 0 || order > 2) throw std::invalid_argument("q_coeffs: order must be in {0, 1, 2}");
  const double lam = density.lambda();
  const MatrixElementTable s1(density, K);
  const MatrixElementTable s2 = MatrixElementTable::of_polynomial(density.sigma_squared_coeffs(), K);

  // <n|sigma^j|m> tables for j = 0, 1, 2 with lambda^j absorbed
  std::array<Eigen::MatrixXd, 3> sig;
  sig[0] = Eigen::MatrixXd::Identity(K + 1, K + 1);
  sig[1] = lam * s1.matrix();
  sig[2] = lam * lam * s2.matrix();

  Eigen::VectorXd inv_primed(K + 1);
  inv_primed(0) = 0.0;
  for (int r = 1; r <= K; ++r) inv_primed(r) = 1.0 / (NeumannBasis::eigenvalue(r) + gamma);

  QCoeffs q{order, Eigen::MatrixXd::Zero(K + 1, K + 1), Eigen::MatrixXd::Zero(K + 1, K + 1)};
  for (int j = 0; j <= order; ++j) {
    const double w = kBinomHalf[j] * kBinomHalf[order - j];
    const Eigen::MatrixXd& a = sig[j];
    const Eigen::MatrixXd& b = sig[order - j];
    q.zero_mode_part.noalias() += (w / gamma) * (a.col(0) * b.row(0));
    q.primed_part.noalias() += w * (a * inv_primed.asDiagonal() * b);
  }
  return q;
}

double verify_composition(int N, int order, double gamma, const DensityModel& density, int K,
                          int reference_truncation) {
  check_args(N, gamma, K);
  if (order < 0 || order > 2) throw std::invalid_argument("verify_composition: order must be in {0, 1, 2}");
  const int K_ref = reference_truncation > 0 ? reference_truncation : K;
  if (K_ref < K) throw std::invalid_argument("verify_composition: reference truncation must be >= truncation");

  const auto qs = q_matrices(N, gamma, density, K);

  // Sum of q^(k_1) ... q^(k_N) over compositions (k_1..k_N) of `order`
  // into N non-negative parts, assembled iteratively: after step i, acc[k]
  // holds the order-k part of the i-fold product.
  std::array<Eigen::MatrixXd, 3> acc;
  for (int k = 0; k <= 2; ++k) acc[k] = qs[k].table;
  for (int step = 1; step < N; ++step) {
    std::array<Eigen::MatrixXd, 3> next;
    for (int k = 0; k <= order; ++k) {
      next[k] = Eigen::MatrixXd::Zero(K + 1, K + 1);
      for (int j = 0; j <= k; ++j) next[k].noalias() += acc[j] * qs[k - j].table;
    }
    for (int k = 0; k <= order; ++k) acc[k] = std::move(next[k]);
  }

  const Eigen::MatrixXd q_ref = q_coeffs(order, gamma, density, K_ref).table();
  return (acc[order] - q_ref.topLeftCorner(K + 1, K + 1)).cwiseAbs().maxCoeff();
}

}  // namespace sumrules
