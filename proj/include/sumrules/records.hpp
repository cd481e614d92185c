#pragma once

#include <array>
#include <string>
#include <vector>

#include "sumrules/sum_rules.hpp"

namespace sumrules {

/// Parsed CLI configuration; numeric fields are validated against the module
/// preconditions before dispatch.
struct RunConfig {
  std::string command;  // sumrule | spectrum | sweep-fit | verify
  double s = 1.5;
  std::vector<double> kappas{0.1};
  std::vector<double> sigma_coeffs;  // overrides linear kappa when non-empty
  double lambda = 1.0;
  int n_max = 200;
  int basis_size = 2001;
  int truncation = 2000;
  std::vector<double> gamma_sequence;
  double gamma = 1e-4;
  int k_double_sum = 4000;
  int degree = 4;
  int workers = 0;  // 0 -> SUMRULE_WORKERS or 1
  std::string route = "perturbative";
  std::string output_path;  // empty -> stdout
  std::string format = "csv";

  bool operator==(const RunConfig&) const = default;
};

/// One emitted value with its provenance. Every numeric value carries its
/// truncation/tail estimate; serialization round-trips losslessly (doubles
/// are printed with 17 significant digits).
struct ResultRecord {
  RunConfig config;
  double kappa = 0.0;
  double s = 0.0;
  std::string route;
  double value = 0.0;
  std::array<double, 3> orders{};
  double tail_estimate = 0.0;
  int n_max = 0;
  int basis_size = 0;
  double wall_time_s = 0.0;
  std::string version;

  bool operator==(const ResultRecord&) const = default;
};

ResultRecord make_record(const RunConfig& config, double kappa, const SumRuleResult& result,
                         double wall_time_s);

std::string format_double(double v);  // 17 significant digits, locale-free

std::string csv_header();
std::string to_csv_row(const ResultRecord& r);
/// Parses a row written by to_csv_row (schema fields only; config echo is
/// JSON-only).
ResultRecord record_from_csv_row(const std::string& row);

std::string to_json_line(const ResultRecord& r);
ResultRecord record_from_json_line(const std::string& line);

}  // namespace sumrules
