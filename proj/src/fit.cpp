#include "sumrules/fit.hpp"

#include <cmath>
#include <cstdlib>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "sumrules/hurwitz.hpp"
#include "sumrules/ritz.hpp"
#include "sumrules/util.hpp"

namespace sumrules {

namespace {

int sweep_workers() {
  if (const char* env = std::getenv("SUMRULE_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

using SweepKey = std::tuple<double, double, int, int>;

std::map<SweepKey, FitSample>& sweep_cache() {
  static std::map<SweepKey, FitSample> cache;
  return cache;
}
std::mutex& sweep_cache_mutex() {
  static std::mutex m;
  return m;
}

FitSample sweep_point(double s, double kappa, int n_max, int basis_size) {
  const SweepKey key{s, kappa, n_max, basis_size};
  {
    std::lock_guard<std::mutex> lock(sweep_cache_mutex());
    const auto it = sweep_cache().find(key);
    if (it != sweep_cache().end()) return it->second;
  }
  const SumRuleResult r = z_numerical(s, kappa, n_max, basis_size);
  const FitSample sample{kappa, r.total, r.tail_estimate};
  std::lock_guard<std::mutex> lock(sweep_cache_mutex());
  sweep_cache().emplace(key, sample);
  return sample;
}

}  // namespace

std::vector<FitSample> kappa_sweep(double s, const std::vector<double>& kappa_grid, int n_max,
                                   int basis_size) {
  for (double k : kappa_grid)
    if (!(std::abs(k) < 2.0))
      throw std::invalid_argument("kappa_sweep: every kappa must satisfy |kappa| < 2");

  std::vector<FitSample> out(kappa_grid.size());
  const int workers = sweep_workers();
  if (workers <= 1) {
    for (size_t i = 0; i < kappa_grid.size(); ++i)
      out[i] = sweep_point(s, kappa_grid[i], n_max, basis_size);
    return out;
  }
  // Waves of at most `workers` concurrent tasks; output slots are fixed by
  // grid index, so ordering and values are independent of scheduling.
  for (size_t base = 0; base < kappa_grid.size(); base += workers) {
    std::vector<std::future<FitSample>> wave;
    const size_t end = std::min(kappa_grid.size(), base + workers);
    for (size_t i = base; i < end; ++i)
      wave.push_back(std::async(std::launch::async,
                                [&, i] { return sweep_point(s, kappa_grid[i], n_max, basis_size); }));
    for (size_t i = base; i < end; ++i) out[i] = wave[i - base].get();
  }
  return out;
}

double FitResult::evaluate(double kappa) const {
  double v = 0.0;
  for (int j = coefficients.size(); j-- > 0;) v = v * kappa + coefficients(j);
  return v;
}

FitResult polyfit(const std::vector<FitSample>& samples, int degree) {
  if (degree < 0) throw std::invalid_argument("polyfit: degree must be >= 0");
  const int n = static_cast<int>(samples.size());
  const int cols = degree + 1;
  if (n <= degree)
    throw std::invalid_argument("polyfit: need more samples than polynomial coefficients");

  Eigen::MatrixXd vand(n, cols);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int j = 0; j < cols; ++j) {
      vand(i, j) = p;
      p *= samples[i].kappa;
    }
    y(i) = samples[i].value;
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(vand, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-13 * sv(0))
    throw std::runtime_error("polyfit: Vandermonde system is numerically rank deficient");

  FitResult r;
  r.degree = degree;
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(vand);
  r.coefficients = qr.solve(y);
  r.residual_norm = (vand * r.coefficients - y).norm();
  r.condition_estimate = sv(0) / sv(sv.size() - 1);
  r.sample_points = samples;
  return r;
}

Z32Constants z32_constants(int K) {
  if (K < 100) throw std::invalid_argument("z32_constants: double-sum cutoff must be >= 100");
  const double pi7 = std::pow(kPi, 7);

  KahanSum d;
  for (int n = K; n >= 1; --n) {  // n outer, m inner, small terms first
    KahanSum row;
    for (int m = K; m >= 1; --m) {
      const double mm = 2.0 * m;
      const double nn = 2.0 * n - 1.0;
      const double num = 12.0 * std::pow(mm * mm + nn * nn, 2);
      const double den = pi7 * m * nn * std::pow(mm - nn, 4) * std::pow(mm + nn, 5);
      row.add(num / den);
    }
    d.add(row.value());
  }

  Z32Constants out;
  out.c0 = riemann_zeta(3.0) / std::pow(kPi, 3);
  out.double_sum = d.value();
  // Integral comparison on the dominant near-diagonal band, doubled for the
  // symmetric m-side remainder.
  out.double_sum_tail_bound = 1.0 / (2.0 * std::pow(kPi, 3) * double(K) * K);
  out.c2 = -381.0 * riemann_zeta(7.0) / (32.0 * pi7) + out.double_sum;
  return out;
}

}  // namespace sumrules
