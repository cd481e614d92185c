#pragma once

#include <array>
#include <string>
#include <vector>

#include "sumrules/density.hpp"

namespace sumrules {

enum class Route { perturbative, trace_assembly, exact_order1, numerical_spectrum };

const char* route_name(Route route);
Route route_from_name(const std::string& name);

/// A sum-rule value decomposed by perturbative order, with truncation
/// metadata. For the non-perturbative routes (exact_order1,
/// numerical_spectrum) the whole value sits in value_by_order[0].
struct SumRuleResult {
  double s = 0.0;
  std::array<double, 3> value_by_order{};  // lambda^0, lambda^1, lambda^2
  double total = 0.0;
  int truncation = 0;
  double tail_estimate = 0.0;
  Route route = Route::perturbative;
};

/// Stable evaluation of (a^{1-s} - b^{1-s}) / (a - b) for a, b > 0, with the
/// symmetric expansion taking over for nearly equal arguments (limit
/// (1-s) a^{-s} on the diagonal).
double difference_quotient(double a, double b, double s);

/// Renormalized sum rule Z~(s): primed diagonal terms through second order,
/// the primed difference-quotient double sum, and the finite zero-mode
/// contribution -s sum' <0|sigma|n>^2 / eps_n^s. Diagonal sums are
/// tail-completed with Hurwitz zeta; the rest carries decay-law bounds in
/// tail_estimate. Domain 1 < s <= 3/2 unless allow_extended_s.
SumRuleResult z_tilde(double s, const DensityModel& density, int truncation = 2000,
                      bool allow_extended_s = false);

/// The finite-gamma order expressions Z^(0), Z^(1), Z^(2). The pieces that
/// diverge as gamma -> 0 (gamma^{-s}-type and the gamma^{1-s} zero-mode sum,
/// which cancel against the E0(gamma)^{-s} expansion) are kept separate from
/// the finite remainders.
struct GammaOrders {
  double s = 0.0;
  double gamma = 0.0;
  std::array<double, 3> divergent{};
  std::array<double, 3> finite{};
  std::array<double, 3> orders() const {
    return {divergent[0] + finite[0], divergent[1] + finite[1], divergent[2] + finite[2]};
  }
  double total() const {
    return divergent[0] + finite[0] + divergent[1] + finite[1] + divergent[2] + finite[2];
  }
};

GammaOrders z_orders_at_gamma(double s, double gamma, const DensityModel& density,
                              int truncation = 2000);

/// Outcome of the gamma -> 0 renormalization study: per-piece cancellation
/// between z_orders_at_gamma and e0_inverse_power, the sampled differences,
/// and the Richardson-extrapolated limit against z_tilde.
struct RenormalizationReport {
  double s = 0.0;
  bool cancellation_ok = false;
  std::string failing_piece;
  std::vector<std::pair<double, double>> samples;  // (gamma, Z - E0^{-s})
  double extrapolated = 0.0;
  double z_tilde_value = 0.0;
  double distance = 0.0;
};

RenormalizationReport renormalization_check(double s, const DensityModel& density, int truncation,
                                            const std::vector<double>& gamma_sequence);

/// Z(1 + 1/N) assembled as the trace sum Q.q, split by lambda order:
///   order 0: tr(Q0 q0)
///   order 1: tr(Q0 q1) + tr(Q1 q0)
///   order 2: tr(Q1 q1) + tr(Q2 q0) + tr(Q0 q2)
/// Must agree with z_orders_at_gamma(1 + 1/N) within truncation error.
std::array<double, 3> z_trace_assembly(int root_order, double gamma, const DensityModel& density,
                                       int truncation);

/// Exact order-1 sum rule, valid to all orders in the density:
///   Z(1) = int (1/12 + x^2) dx - [int int Sigma G0 Sigma] / [int Sigma],
/// evaluated by nested quadrature.
SumRuleResult z1_exact(const DensityModel& density);

}  // namespace sumrules
