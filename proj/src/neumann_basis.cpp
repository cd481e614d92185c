#include "sumrules/neumann_basis.hpp"

#include <cmath>
#include <stdexcept>

#include "sumrules/util.hpp"

namespace sumrules {

namespace {

// Cosine moments over the shifted interval t = x + 1/2 in [0, 1]:
//   Ic[p] = int_0^1 t^p cos(k pi t) dt,  Is[p] = int_0^1 t^p sin(k pi t) dt,
// by the usual integration-by-parts recursion (sin(k pi) = 0 at integer k).
void cosine_moments(int pmax, int k, std::vector<double>& ic) {
  ic.assign(pmax + 1, 0.0);
  if (k == 0) {
    for (int p = 0; p <= pmax; ++p) ic[p] = 1.0 / (p + 1.0);
    return;
  }
  const double a = k * kPi;
  const double cos_k = (k % 2 == 0) ? 1.0 : -1.0;
  std::vector<double> is(pmax + 1, 0.0);
  is[0] = (1.0 - cos_k) / a;
  for (int p = 1; p <= pmax; ++p) {
    ic[p] = -p / a * is[p - 1];
    is[p] = -cos_k / a + p / a * ic[p - 1];
  }
}

// p(x) with x = t - 1/2 rewritten as a polynomial in t.
std::vector<double> shift_to_unit(const std::vector<double>& poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  std::vector<double> out(deg + 1, 0.0);
  for (int j = 0; j <= deg; ++j) {
    double binom = 1.0;  // C(j, i) built incrementally
    for (int i = 0; i <= j; ++i) {
      out[i] += poly[j] * binom * std::pow(-0.5, j - i);
      binom = binom * (j - i) / (i + 1.0);
    }
  }
  return out;
}

// M_k = int_0^1 p(t - 1/2) cos(k pi t) dt
double moment(const std::vector<double>& shifted, int k) {
  std::vector<double> ic;
  cosine_moments(static_cast<int>(shifted.size()) - 1, k, ic);
  double m = 0.0;
  for (size_t p = 0; p < shifted.size(); ++p) m += shifted[p] * ic[p];
  return m;
}

double element_from_moments(int n, int m, const std::vector<double>& shifted) {
  if (n == 0 && m == 0) return moment(shifted, 0);
  if (n == 0) return std::sqrt(2.0) * moment(shifted, m);
  if (m == 0) return std::sqrt(2.0) * moment(shifted, n);
  // psi_n psi_m = cos(|n-m| pi t) + cos((n+m) pi t)
  return moment(shifted, std::abs(n - m)) + moment(shifted, n + m);
}

void check_domain(double x, double y) {
  if (x < -0.5 || x > 0.5 || y < -0.5 || y > 0.5)
    throw std::invalid_argument("green: coordinates must lie in [-1/2, 1/2]");
}

}  // namespace

NeumannBasis::NeumannBasis(int mode_count) : mode_count_(mode_count) {
  if (mode_count < 1) throw std::invalid_argument("NeumannBasis: mode_count must be >= 1");
  eigenvalues_.resize(mode_count + 1);
  for (int n = 0; n <= mode_count; ++n) eigenvalues_[n] = eigenvalue(n);
}

double NeumannBasis::eigenvalue(int n) {
  if (n < 0) throw std::invalid_argument("NeumannBasis: mode index must be >= 0");
  return static_cast<double>(n) * n * kPi * kPi;
}

double NeumannBasis::mode(int n, double x) {
  if (n < 0) throw std::invalid_argument("NeumannBasis: mode index must be >= 0");
  if (n == 0) return 1.0;
  return std::sqrt(2.0) * std::cos(n * kPi * (x + 0.5));
}

double polynomial_element(const std::vector<double>& poly, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("polynomial_element: mode indices must be >= 0");
  return element_from_moments(n, m, shift_to_unit(poly));
}

double sigma_element(int n, int m, const DensityModel& density) {
  return polynomial_element(density.sigma_coeffs(), n, m);
}

MatrixElementTable::MatrixElementTable(std::vector<double> poly, int truncation, int)
    : truncation_(truncation) {
  if (truncation < 1) throw std::invalid_argument("MatrixElementTable: truncation must be >= 1");
  const std::vector<double> shifted = shift_to_unit(poly);
  // All elements depend on at most the moments M_0 .. M_{2K}.
  std::vector<double> mk(2 * truncation + 1);
  for (int k = 0; k <= 2 * truncation; ++k) mk[k] = moment(shifted, k);
  table_.resize(truncation + 1, truncation + 1);
  const double r2 = std::sqrt(2.0);
  for (int n = 0; n <= truncation; ++n) {
    for (int m = n; m <= truncation; ++m) {
      double v;
      if (n == 0 && m == 0) v = mk[0];
      else if (n == 0) v = r2 * mk[m];
      else v = mk[m - n] + mk[n + m];
      table_(n, m) = v;
      table_(m, n) = v;
    }
  }
}

MatrixElementTable::MatrixElementTable(const DensityModel& density, int truncation)
    : MatrixElementTable(density.sigma_coeffs(), truncation, 0) {}

MatrixElementTable MatrixElementTable::of_polynomial(const std::vector<double>& poly, int truncation) {
  return MatrixElementTable(poly, truncation, 0);
}

double sigma_decay_scale(const DensityModel& density, int K) {
  const std::vector<double> shifted = shift_to_unit(density.sigma_coeffs());
  double c = 0.0;
  for (int k : {K / 2, K / 2 + 1, K - 1, K, 2 * K - 1, 2 * K}) {
    if (k < 1) continue;
    c = std::max(c, std::abs(moment(shifted, k)) * k * k);
  }
  return c;
}

double green_regularized(double x, double y) {
  check_domain(x, y);
  return (1.0 - 6.0 * std::abs(x - y) + 6.0 * (x * x + y * y)) / 12.0;
}

double green_q(int q, double x, double y, int truncation) {
  if (q < 0) throw std::invalid_argument("green_q: order must be >= 0");
  if (truncation < 1) throw std::invalid_argument("green_q: truncation must be >= 1");
  check_domain(x, y);
  KahanSum sum;
  for (int n = truncation; n >= 1; --n) {
    const double en = NeumannBasis::eigenvalue(n);
    sum.add(NeumannBasis::mode(n, x) * NeumannBasis::mode(n, y) / std::pow(en, q + 1.0));
  }
  return sum.value();
}

}  // namespace sumrules
