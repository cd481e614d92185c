#include "sumrules/zero_mode.hpp"

#include <cmath>
#include <stdexcept>

#include "sumrules/neumann_basis.hpp"
#include "sumrules/quadrature.hpp"
#include "sumrules/util.hpp"

namespace sumrules {

namespace {

struct SpectralTraces {
  double s00;    // <0|Sigma|0>
  double t0, t1, t2;          // <0|Sigma G^(q) Sigma|0>, q = 0,1,2
  double t00, t10, t000;      // nested G^(0)G^(0), G^(1)G^(0), G^(0)G^(0)G^(0)
};

SpectralTraces spectral_traces(const DensityModel& density, int K) {
  const MatrixElementTable s1(density, K);
  const double lam = density.lambda();
  Eigen::VectorXd v(K), d1(K), d2(K);
  for (int n = 1; n <= K; ++n) {
    v(n - 1) = lam * s1(0, n);
    d1(n - 1) = 1.0 / NeumannBasis::eigenvalue(n);
    d2(n - 1) = d1(n - 1) * d1(n - 1);
  }
  Eigen::MatrixXd m = lam * s1.matrix().bottomRightCorner(K, K);
  m += Eigen::MatrixXd::Identity(K, K);

  SpectralTraces t;
  t.s00 = 1.0 + lam * s1(0, 0);
  t.t0 = v.dot(d1.cwiseProduct(v));
  t.t1 = v.dot(d2.cwiseProduct(v));
  t.t2 = v.dot(d2.cwiseProduct(d1).cwiseProduct(v));
  const Eigen::VectorXd dv = d1.cwiseProduct(v);
  const Eigen::VectorXd d2v = d2.cwiseProduct(v);
  t.t00 = dv.dot(m * dv);
  t.t10 = d2v.dot(m * dv);
  t.t000 = dv.dot(m * (d1.asDiagonal() * (m * dv)));
  return t;
}

// Quadrature route: nested composite Gauss-Legendre with panel splits at
// every kink location, which makes the rule exact for polynomial densities.
struct QuadTraces {
  explicit QuadTraces(const DensityModel& density) : den(density), gl(20) {}

  double sig(double x) const { return den.total(x); }
  double g1(double x, double y) const {
    return gl.integrate([&](double z) { return green_regularized(x, z) * green_regularized(z, y); },
                        -0.5, 0.5, {x, y});
  }
  double g2(double x, double y) const {
    return gl.integrate([&](double z) { return green_regularized(x, z) * g1(z, y); }, -0.5, 0.5,
                        {x, y});
  }

  double trace_g(int q) const {  // <0|Sigma G^(q) Sigma|0>
    return gl.integrate(
        [&](double x) {
          return sig(x) * gl.integrate(
                              [&](double y) {
                                const double g = q == 0   ? green_regularized(x, y)
                                                 : q == 1 ? g1(x, y)
                                                          : g2(x, y);
                                return g * sig(y);
                              },
                              -0.5, 0.5, {x});
        },
        -0.5, 0.5);
  }

  double trace_g0g0() const {
    return gl.integrate(
        [&](double x) {
          return sig(x) * gl.integrate(
                              [&](double u) {
                                return green_regularized(x, u) * sig(u) *
                                       gl.integrate(
                                           [&](double y) {
                                             return green_regularized(u, y) * sig(y);
                                           },
                                           -0.5, 0.5, {u});
                              },
                              -0.5, 0.5, {x});
        },
        -0.5, 0.5);
  }

  double trace_g1g0() const {
    return gl.integrate(
        [&](double x) {
          return sig(x) * gl.integrate(
                              [&](double u) {
                                return g1(x, u) * sig(u) *
                                       gl.integrate(
                                           [&](double y) {
                                             return green_regularized(u, y) * sig(y);
                                           },
                                           -0.5, 0.5, {u});
                              },
                              -0.5, 0.5, {x});
        },
        -0.5, 0.5);
  }

  double trace_g0g0g0() const {
    return gl.integrate(
        [&](double x) {
          return sig(x) *
                 gl.integrate(
                     [&](double u) {
                       return green_regularized(x, u) * sig(u) *
                              gl.integrate(
                                  [&](double v) {
                                    return green_regularized(u, v) * sig(v) *
                                           gl.integrate(
                                               [&](double y) {
                                                 return green_regularized(v, y) * sig(y);
                                               },
                                               -0.5, 0.5, {v});
                                  },
                                  -0.5, 0.5, {u});
                     },
                     -0.5, 0.5, {x});
        },
        -0.5, 0.5);
  }

  const DensityModel& den;
  GaussLegendre gl;
};

std::vector<double> energies_from_traces(const SpectralTraces& t, int max_order) {
  std::vector<double> e(max_order + 1, 0.0);
  const double s = t.s00;
  if (max_order >= 1) e[1] = 1.0 / s;
  if (max_order >= 2) e[2] = -t.t0 / std::pow(s, 3);
  if (max_order >= 3)
    e[3] = t.t1 / std::pow(s, 3) - t.t00 / std::pow(s, 4) + 2.0 * t.t0 * t.t0 / std::pow(s, 5);
  if (max_order >= 4)
    e[4] = -t.t2 / std::pow(s, 3) + 2.0 * t.t10 / std::pow(s, 4) -
           4.0 * t.t1 * t.t0 / std::pow(s, 5) - 5.0 * std::pow(t.t0, 3) / std::pow(s, 7) +
           5.0 * t.t0 * t.t00 / std::pow(s, 6) - t.t000 / std::pow(s, 5);
  return e;
}

// Order-by-order recursion for energies and wavefunction coefficients.
void run_recursion(const DensityModel& density, int e_order, int wf_order, int K,
                   std::vector<double>* energy, std::vector<Eigen::VectorXd>* psi) {
  const MatrixElementTable s1(density, K);
  Eigen::MatrixXd m = density.lambda() * s1.matrix();
  m += Eigen::MatrixXd::Identity(K + 1, K + 1);

  const int kmax = std::max(e_order, wf_order);
  std::vector<Eigen::VectorXd> psis(kmax + 1, Eigen::VectorXd::Zero(K + 1));
  psis[0](0) = 1.0;  // 1/sqrt(V), V = 1
  std::vector<double> e(kmax + 1, 0.0);
  e[1] = 1.0 / m(0, 0);
  for (int k = 1; k <= kmax; ++k) {
    if (k >= 2) {
      double acc = 0.0;
      for (int j = 1; j < k; ++j) acc += e[j] * m.row(0).dot(psis[k - j]);
      e[k] = -acc / m(0, 0);
    }
    Eigen::VectorXd rhs = -psis[k - 1];
    for (int j = 1; j <= k; ++j) rhs.noalias() += e[j] * (m * psis[k - j]);
    psis[k](0) = 0.0;
    for (int n = 1; n <= K; ++n) psis[k](n) = rhs(n) / NeumannBasis::eigenvalue(n);
  }
  energy->assign(e.begin(), e.begin() + e_order + 1);
  psi->assign(psis.begin(), psis.begin() + wf_order + 1);
}

}  // namespace

std::function<double(double)> ZeroModeSeries::psi_callable(int order) const {
  if (order < 0 || order >= static_cast<int>(psi.size()))
    throw std::invalid_argument("ZeroModeSeries: wavefunction order not computed");
  const Eigen::VectorXd coeffs = psi[order];
  return [coeffs](double x) {
    double v = coeffs(0);
    for (int n = 1; n < coeffs.size(); ++n) {
      if (coeffs(n) != 0.0) v += coeffs(n) * NeumannBasis::mode(n, x);
    }
    return v;
  };
}

ZeroModeSeries e0_series(const DensityModel& density, int max_order, int K, TraceRoute route) {
  if (max_order < 1 || max_order > 4)
    throw std::invalid_argument("e0_series: max_order must be in 1..4");
  ZeroModeSeries out;
  out.truncation = K;
  if (route == TraceRoute::spectral) {
    out.energy = energies_from_traces(spectral_traces(density, K), max_order);
  } else {
    QuadTraces q(density);
    GaussLegendre gl(20);
    SpectralTraces t;
    t.s00 = gl.integrate([&](double x) { return q.sig(x); }, -0.5, 0.5);
    t.t0 = q.trace_g(0);
    t.t1 = max_order >= 3 ? q.trace_g(1) : 0.0;
    t.t2 = max_order >= 4 ? q.trace_g(2) : 0.0;
    t.t00 = max_order >= 3 ? q.trace_g0g0() : 0.0;
    t.t10 = max_order >= 4 ? q.trace_g1g0() : 0.0;
    t.t000 = max_order >= 4 ? q.trace_g0g0g0() : 0.0;
    out.energy = energies_from_traces(t, max_order);
  }
  std::vector<double> unused;
  run_recursion(density, std::min(max_order, 2), std::min(max_order, 2), K, &unused, &out.psi);
  return out;
}

ZeroModeSeries e0_series_recursion(const DensityModel& density, int max_order, int K) {
  if (max_order < 1) throw std::invalid_argument("e0_series_recursion: max_order must be >= 1");
  ZeroModeSeries out;
  out.truncation = K;
  run_recursion(density, max_order, std::min(max_order, 2), K, &out.energy, &out.psi);
  return out;
}

std::function<double(double)> psi0_correction(const DensityModel& density, int order, int K) {
  if (order < 0 || order > 2)
    throw std::invalid_argument("psi0_correction: order must be in 0..2");
  return e0_series_recursion(density, std::max(order, 1), K).psi_callable(order);
}

double zero_mode_coupling_sum(const DensityModel& density, int power, int K) {
  const MatrixElementTable s1(density, K);
  KahanSum sum;
  for (int n = K; n >= 1; --n)
    sum.add(s1(0, n) * s1(0, n) / std::pow(NeumannBasis::eigenvalue(n), power));
  return sum.value();
}

E0InversePowerParts e0_inverse_power_parts(double s, double gamma, const DensityModel& density,
                                           int K) {
  if (!(s > 1.0) || s > 1.5)
    throw std::invalid_argument("e0_inverse_power: requires 1 < s <= 3/2");
  if (!(gamma > 0.0)) throw std::invalid_argument("e0_inverse_power: gamma must be > 0");
  const double lam = density.lambda();
  const double sig0 = lam * density.sigma_mean();
  const double s1 = lam * lam * zero_mode_coupling_sum(density, 1, K);
  const double s2 = lam * lam * zero_mode_coupling_sum(density, 2, K);
  E0InversePowerParts p;
  p.gamma_ms = std::pow(gamma, -s);
  p.gamma_ms_sigma = s * p.gamma_ms * sig0;
  p.gamma_ms_sigma2 = 0.5 * s * (s - 1.0) * p.gamma_ms * sig0 * sig0;
  p.gamma_1ms_sum = s * std::pow(gamma, 1.0 - s) * s1;
  p.gamma_2ms_sum = -s * std::pow(gamma, 2.0 - s) * s2;
  return p;
}

double e0_inverse_power(double s, double gamma, const DensityModel& density, int K) {
  return e0_inverse_power_parts(s, gamma, density, K).total();
}

}  // namespace sumrules
