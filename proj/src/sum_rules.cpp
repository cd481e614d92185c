#include "sumrules/sum_rules.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>

#include "sumrules/fractional_green.hpp"
#include "sumrules/hurwitz.hpp"
#include "sumrules/neumann_basis.hpp"
#include "sumrules/quadrature.hpp"
#include "sumrules/util.hpp"
#include "sumrules/zero_mode.hpp"

namespace sumrules {

namespace {

void check_exponent(double s, bool allow_extended) {
  if (allow_extended) {
    if (!(s > 0.5)) throw std::invalid_argument("sum rule: requires s > 1/2 even in extended mode");
    return;
  }
  if (!(s > 1.0) || s > 1.5)
    throw std::invalid_argument(
        "sum rule: requires 1 < s <= 3/2 (the derivation's validity range); "
        "pass allow_extended_s to explore outside it");
}

int worker_count() {
  if (const char* env = std::getenv("SUMRULE_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// The primed double sum -(s/2) sum_{n != m} dq(e_n, e_m) <m|sigma|n>^2 with
// precomputed powers; strips of n are accumulated independently (Kahan) and
// combined in strip order, so the result does not depend on the worker count.
double primed_double_sum(double s, double gamma, const MatrixElementTable& table, int K) {
  std::vector<double> pow_1ms(K + 1), shifted(K + 1);
  for (int n = 1; n <= K; ++n) {
    shifted[n] = NeumannBasis::eigenvalue(n) + gamma;
    pow_1ms[n] = std::pow(shifted[n], 1.0 - s);
  }
  const int workers = std::min(worker_count(), 8);
  const int strip = std::max(1, (K + workers - 1) / workers);
  std::vector<std::future<double>> parts;
  for (int lo = 1; lo <= K; lo += strip) {
    const int hi = std::min(K, lo + strip - 1);
    parts.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                               [&, lo, hi]() {
                                 KahanSum acc;
                                 for (int n = hi; n >= lo; --n) {
                                   for (int m = K; m >= 1; --m) {
                                     if (m == n) continue;
                                     const double el = table(m, n);
                                     if (el == 0.0) continue;
                                     const double dq =
                                         (pow_1ms[n] - pow_1ms[m]) / (shifted[n] - shifted[m]);
                                     acc.add(dq * el * el);
                                   }
                                 }
                                 return acc.value();
                               }));
  }
  KahanSum total;
  for (auto& p : parts) total.add(p.get());
  return -0.5 * s * total.value();
}

struct DiagonalSums {
  double plain;     // sum' (eps_n + gamma)^{-s}, Hurwitz tail-completed
  double weighted;  // sum' <n|sigma|n> (eps_n + gamma)^{-s}, completed with sigma_mean
  double weighted2; // sum' <n|sigma|n>^2 (...)^{-s}, completed with sigma_mean^2
  double zero_mode; // sum' (eps_n + gamma)^{1-s} <0|sigma|n>^2 / eps_n
  double tail_bound;
};

DiagonalSums diagonal_sums(double s, double gamma, const DensityModel& density,
                           const MatrixElementTable& table, int K) {
  const double mean = density.sigma_mean();
  KahanSum plain, weighted, weighted2, zero_mode;
  for (int n = K; n >= 1; --n) {
    const double a = NeumannBasis::eigenvalue(n) + gamma;
    const double w = std::pow(a, -s);
    const double d = table(n, n);
    plain.add(w);
    weighted.add(d * w);
    weighted2.add(d * d * w);
    zero_mode.add(std::pow(a, 1.0 - s) * table(0, n) * table(0, n) /
                  NeumannBasis::eigenvalue(n));
  }
  // Tail completion: eps_n = n^2 pi^2 exactly, and <n|sigma|n> -> sigma_mean
  // with an O(n^{-2}) moment correction.
  const auto zs = hurwitz_zeta(2.0 * s, K + 1.0);
  const double tail = std::pow(kPi, -2.0 * s) * zs.value;
  const double cm = sigma_decay_scale(density, K);
  const auto zs2 = hurwitz_zeta(2.0 * s + 2.0, K + 1.0);
  const double moment_tail = std::pow(kPi, -2.0 * s) * zs2.value;

  DiagonalSums out;
  out.plain = plain.value() + tail;
  out.weighted = weighted.value() + mean * tail;
  out.weighted2 = weighted2.value() + mean * mean * tail;
  out.zero_mode = zero_mode.value();
  // Neglected: gamma-dependence of the completed tails (<= s*gamma*zeta_H(2s+2)
  // terms), the non-constant part of the diagonal elements, and the zero-mode
  // sum remainder (integrand O(n^{-2s-2-2})).
  const double gamma_tail = s * gamma * moment_tail * (1.0 + std::abs(mean) + mean * mean);
  const double diag_tail = cm * moment_tail * (1.0 + 2.0 * std::abs(mean));
  const double zm_tail = 2.0 * cm * cm * std::pow(kPi, -2.0 * s) *
                         hurwitz_zeta(2.0 * s + 4.0, K + 1.0).value;
  out.tail_bound = gamma_tail + diag_tail + zm_tail + 4.0 * zs.error_bound;
  return out;
}

double double_sum_tail_bound(double s, const DensityModel& density, int K) {
  const double cb = 2.0 * sigma_decay_scale(density, K);  // |<m|sigma|n>| <= cb/(n-m)^2 near the diagonal
  const double band = 2.0 * riemann_zeta(4.0) * std::pow(kPi, -2.0 * s) *
                      hurwitz_zeta(2.0 * s, K + 1.0).value;
  const double far = std::pow(NeumannBasis::eigenvalue(1), -s) * 2.0 / (3.0 * double(K) * K * K);
  return s * (s - 1.0) * cb * cb * (band + far);
}

double trace_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a.cwiseProduct(b).sum();  // tr(a b) for symmetric b
}

}  // namespace

const char* route_name(Route route) {
  switch (route) {
    case Route::perturbative: return "perturbative";
    case Route::trace_assembly: return "trace_assembly";
    case Route::exact_order1: return "exact_order1";
    case Route::numerical_spectrum: return "numerical_spectrum";
  }
  return "unknown";
}

Route route_from_name(const std::string& name) {
  if (name == "perturbative") return Route::perturbative;
  if (name == "trace_assembly" || name == "trace") return Route::trace_assembly;
  if (name == "exact_order1" || name == "exact") return Route::exact_order1;
  if (name == "numerical_spectrum" || name == "numerical") return Route::numerical_spectrum;
  throw std::invalid_argument("unknown route: " + name);
}

double difference_quotient(double a, double b, double s) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("difference_quotient: arguments must be positive");
  const double p = 1.0 - s;
  if (std::abs(a - b) <= 1e-7 * std::max(a, b)) {
    const double mid = 0.5 * (a + b);
    const double u = 0.5 * (a - b) / mid;
    return p * std::pow(mid, -s) * (1.0 + (p - 1.0) * (p - 2.0) / 6.0 * u * u);
  }
  return (std::pow(a, p) - std::pow(b, p)) / (a - b);
}

SumRuleResult z_tilde(double s, const DensityModel& density, int K, bool allow_extended_s) {
  check_exponent(s, allow_extended_s);
  if (K < 2) throw std::invalid_argument("z_tilde: truncation must be >= 2");
  const double lam = density.lambda();
  const MatrixElementTable table(density, K);
  const DiagonalSums d = diagonal_sums(s, 0.0, density, table, K);

  SumRuleResult r;
  r.s = s;
  r.route = Route::perturbative;
  r.truncation = K;
  r.value_by_order[0] = d.plain;
  r.value_by_order[1] = s * lam * d.weighted;
  r.value_by_order[2] = 0.5 * s * (s - 1.0) * lam * lam * d.weighted2 -
                        s * lam * lam * d.zero_mode +
                        lam * lam * primed_double_sum(s, 0.0, table, K);
  r.total = r.value_by_order[0] + r.value_by_order[1] + r.value_by_order[2];
  r.tail_estimate = d.tail_bound * (1.0 + std::abs(lam) + lam * lam) +
                    lam * lam * double_sum_tail_bound(s, density, K);
  return r;
}

GammaOrders z_orders_at_gamma(double s, double gamma, const DensityModel& density, int K) {
  check_exponent(s, false);
  if (!(gamma > 0.0)) throw std::invalid_argument("z_orders_at_gamma: gamma must be > 0");
  const double lam = density.lambda();
  const MatrixElementTable table(density, K);
  const DiagonalSums d = diagonal_sums(s, gamma, density, table, K);
  const double mean = lam * density.sigma_mean();
  const double s1 = zero_mode_coupling_sum(density, 1, K);

  GammaOrders g;
  g.s = s;
  g.gamma = gamma;
  g.divergent[0] = std::pow(gamma, -s);
  g.finite[0] = d.plain;
  g.divergent[1] = s * std::pow(gamma, -s) * mean;
  g.finite[1] = s * lam * d.weighted;
  g.divergent[2] = 0.5 * s * (s - 1.0) * std::pow(gamma, -s) * mean * mean +
                   s * std::pow(gamma, 1.0 - s) * lam * lam * s1;
  g.finite[2] = 0.5 * s * (s - 1.0) * lam * lam * d.weighted2 - s * lam * lam * d.zero_mode +
                lam * lam * primed_double_sum(s, gamma, table, K);
  return g;
}

RenormalizationReport renormalization_check(double s, const DensityModel& density, int K,
                                            const std::vector<double>& gamma_sequence) {
  if (gamma_sequence.size() < 2)
    throw std::invalid_argument("renormalization_check: need at least two gamma values");
  for (size_t i = 0; i + 1 < gamma_sequence.size(); ++i)
    if (!(gamma_sequence[i] > gamma_sequence[i + 1]) || !(gamma_sequence.back() > 0.0))
      throw std::invalid_argument(
          "renormalization_check: gamma sequence must be strictly decreasing and positive");

  RenormalizationReport rep;
  rep.s = s;
  rep.cancellation_ok = true;

  auto check_piece = [&](const char* name, double z_side, double e_side) {
    const double scale = std::max({std::abs(z_side), std::abs(e_side), 1e-300});
    if (std::abs(z_side - e_side) > 1e-10 * scale) {
      rep.cancellation_ok = false;
      if (rep.failing_piece.empty()) rep.failing_piece = name;
    }
  };

  for (double gamma : gamma_sequence) {
    const GammaOrders z = z_orders_at_gamma(s, gamma, density, K);
    const E0InversePowerParts e = e0_inverse_power_parts(s, gamma, density, K);
    check_piece("gamma^-s", z.divergent[0], e.gamma_ms);
    check_piece("gamma^-s <0|sigma|0>", z.divergent[1], e.gamma_ms_sigma);
    check_piece("gamma^-s <0|sigma|0>^2 + gamma^{1-s} sum", z.divergent[2],
                e.gamma_ms_sigma2 + e.gamma_1ms_sum);
    // The divergent pieces agree term by term, so the difference is formed
    // from the finite remainders only (no catastrophic cancellation).
    const double diff =
        z.finite[0] + z.finite[1] + z.finite[2] - e.gamma_2ms_sum;
    rep.samples.emplace_back(gamma, diff);
  }

  // Richardson ladder: the residual behaves as
  //   A gamma^{2-s} + B gamma + C gamma^{3-s} + O(gamma^2);
  // eliminate the known exponents pairwise (works for any decreasing sequence).
  std::vector<double> gs(gamma_sequence), vs;
  for (auto& [g, v] : rep.samples) vs.push_back(v);
  for (double p : {2.0 - s, 1.0, 3.0 - s}) {
    if (vs.size() < 2) break;
    std::vector<double> gs2, vs2;
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
      const double r = std::pow(gs[i + 1] / gs[i], p);
      vs2.push_back((vs[i + 1] - r * vs[i]) / (1.0 - r));
      gs2.push_back(gs[i + 1]);
    }
    gs = std::move(gs2);
    vs = std::move(vs2);
  }
  rep.extrapolated = vs.back();
  rep.z_tilde_value = z_tilde(s, density, K).total;
  rep.distance = std::abs(rep.extrapolated - rep.z_tilde_value);
  return rep;
}

std::array<double, 3> z_trace_assembly(int N, double gamma, const DensityModel& density, int K) {
  if (N != 2 && N != 3)
    throw std::invalid_argument("z_trace_assembly: root order N must be 2 or 3 (1 < s <= 3/2)");
  const auto qs = q_matrices(N, gamma, density, K);
  const Eigen::MatrixXd q0 = q_coeffs(0, gamma, density, K).table();
  const Eigen::MatrixXd q1 = q_coeffs(1, gamma, density, K).table();
  const Eigen::MatrixXd q2 = q_coeffs(2, gamma, density, K).table();
  return {trace_product(q0, qs[0].table),
          trace_product(q0, qs[1].table) + trace_product(q1, qs[0].table),
          trace_product(q1, qs[1].table) + trace_product(q2, qs[0].table) +
              trace_product(q0, qs[2].table)};
}

SumRuleResult z1_exact(const DensityModel& density) {
  GaussLegendre gl(20);
  const double term1 = gl.integrate([](double x) { return 1.0 / 12.0 + x * x; }, -0.5, 0.5);
  const double numerator = gl.integrate(
      [&](double x) {
        return density.total(x) * gl.integrate(
                                      [&](double y) {
                                        return green_regularized(x, y) * density.total(y);
                                      },
                                      -0.5, 0.5, {x});
      },
      -0.5, 0.5);
  const double denominator = gl.integrate([&](double x) { return density.total(x); }, -0.5, 0.5);

  SumRuleResult r;
  r.s = 1.0;
  r.route = Route::exact_order1;
  r.truncation = 0;
  r.total = term1 - numerator / denominator;
  r.value_by_order = {r.total, 0.0, 0.0};
  // Panel-split Gauss quadrature is exact for polynomial densities; only
  // roundoff remains.
  r.tail_estimate = 8.0 * std::numeric_limits<double>::epsilon() * (std::abs(term1) + std::abs(numerator / denominator));
  return r;
}

}  // namespace sumrules
