#pragma once

#include <functional>
#include <vector>

namespace sumrules {

/// Composite Gauss-Legendre rule. Panels are split at caller-supplied
/// breakpoints so that integrands with interior derivative kinks (the
/// |x-y| of the Neumann Green's function) are integrated piecewise on
/// intervals where they are polynomial, making the rule exact there.
class GaussLegendre {
 public:
  explicit GaussLegendre(int points_per_panel = 20);

  double integrate(const std::function<double(double)>& f, double a, double b) const;

  /// Breakpoints outside (a, b) are ignored; duplicates are merged.
  double integrate(const std::function<double(double)>& f, double a, double b,
                   const std::vector<double>& breakpoints) const;

  int points() const { return static_cast<int>(nodes_.size()); }

 private:
  std::vector<double> nodes_;    // on [-1, 1]
  std::vector<double> weights_;
};

}  // namespace sumrules
