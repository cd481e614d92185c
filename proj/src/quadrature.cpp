#include "sumrules/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace sumrules {

GaussLegendre::GaussLegendre(int points_per_panel) {
  if (points_per_panel < 1) throw std::invalid_argument("GaussLegendre: points_per_panel must be >= 1");
  std::unique_ptr<gsl_integration_glfixed_table, void (*)(gsl_integration_glfixed_table*)> table(
      gsl_integration_glfixed_table_alloc(static_cast<size_t>(points_per_panel)),
      gsl_integration_glfixed_table_free);
  nodes_.resize(points_per_panel);
  weights_.resize(points_per_panel);
  for (int i = 0; i < points_per_panel; ++i) {
    double x = 0.0, w = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &x, &w, table.get());
    nodes_[i] = x;
    weights_[i] = w;
  }
}

double GaussLegendre::integrate(const std::function<double(double)>& f, double a, double b) const {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
  return half * sum;
}

double GaussLegendre::integrate(const std::function<double(double)>& f, double a, double b,
                                const std::vector<double>& breakpoints) const {
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double c : breakpoints) {
    if (c > a && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate(f, cuts[i], cuts[i + 1]);
  return total;
}

}  // namespace sumrules
