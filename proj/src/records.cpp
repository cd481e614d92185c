#include "sumrules/records.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sumrules/version.hpp"

namespace sumrules {

using nlohmann::json;

ResultRecord make_record(const RunConfig& config, double kappa, const SumRuleResult& result,
                         double wall_time_s) {
  ResultRecord r;
  r.config = config;
  r.kappa = kappa;
  r.s = result.s;
  r.route = route_name(result.route);
  r.value = result.total;
  r.orders = result.value_by_order;
  r.tail_estimate = result.tail_estimate;
  r.n_max = config.n_max;
  r.basis_size = config.basis_size;
  r.wall_time_s = wall_time_s;
  r.version = kVersion;
  return r;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_header() {
  return "kappa,s,route,value,order0,order1,order2,tail_estimate,n_max,basis_size";
}

std::string to_csv_row(const ResultRecord& r) {
  std::ostringstream out;
  out << format_double(r.kappa) << ',' << format_double(r.s) << ',' << r.route << ','
      << format_double(r.value) << ',' << format_double(r.orders[0]) << ','
      << format_double(r.orders[1]) << ',' << format_double(r.orders[2]) << ','
      << format_double(r.tail_estimate) << ',' << r.n_max << ',' << r.basis_size;
  return out.str();
}

ResultRecord record_from_csv_row(const std::string& row) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : row) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  if (fields.size() != 10) throw std::invalid_argument("record_from_csv_row: expected 10 fields");
  ResultRecord r;
  r.kappa = std::stod(fields[0]);
  r.s = std::stod(fields[1]);
  r.route = fields[2];
  r.value = std::stod(fields[3]);
  r.orders = {std::stod(fields[4]), std::stod(fields[5]), std::stod(fields[6])};
  r.tail_estimate = std::stod(fields[7]);
  r.n_max = std::stoi(fields[8]);
  r.basis_size = std::stoi(fields[9]);
  return r;
}

namespace {

json config_to_json(const RunConfig& c) {
  return json{{"command", c.command},
              {"s", c.s},
              {"kappas", c.kappas},
              {"sigma_coeffs", c.sigma_coeffs},
              {"lambda", c.lambda},
              {"n_max", c.n_max},
              {"basis_size", c.basis_size},
              {"truncation", c.truncation},
              {"gamma_sequence", c.gamma_sequence},
              {"gamma", c.gamma},
              {"k_double_sum", c.k_double_sum},
              {"degree", c.degree},
              {"workers", c.workers},
              {"route", c.route},
              {"output_path", c.output_path},
              {"format", c.format}};
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.s = j.at("s").get<double>();
  c.kappas = j.at("kappas").get<std::vector<double>>();
  c.sigma_coeffs = j.at("sigma_coeffs").get<std::vector<double>>();
  c.lambda = j.at("lambda").get<double>();
  c.n_max = j.at("n_max").get<int>();
  c.basis_size = j.at("basis_size").get<int>();
  c.truncation = j.at("truncation").get<int>();
  c.gamma_sequence = j.at("gamma_sequence").get<std::vector<double>>();
  c.gamma = j.at("gamma").get<double>();
  c.k_double_sum = j.at("k_double_sum").get<int>();
  c.degree = j.at("degree").get<int>();
  c.workers = j.at("workers").get<int>();
  c.route = j.at("route").get<std::string>();
  c.output_path = j.at("output_path").get<std::string>();
  c.format = j.at("format").get<std::string>();
  return c;
}

}  // namespace

std::string to_json_line(const ResultRecord& r) {
  const json j{{"kappa", r.kappa},
               {"s", r.s},
               {"route", r.route},
               {"value", r.value},
               {"order0", r.orders[0]},
               {"order1", r.orders[1]},
               {"order2", r.orders[2]},
               {"tail_estimate", r.tail_estimate},
               {"n_max", r.n_max},
               {"basis_size", r.basis_size},
               {"wall_time_s", r.wall_time_s},
               {"version", r.version},
               {"config", config_to_json(r.config)}};
  return j.dump();
}

ResultRecord record_from_json_line(const std::string& line) {
  const json j = json::parse(line);
  ResultRecord r;
  r.kappa = j.at("kappa").get<double>();
  r.s = j.at("s").get<double>();
  r.route = j.at("route").get<std::string>();
  r.value = j.at("value").get<double>();
  r.orders = {j.at("order0").get<double>(), j.at("order1").get<double>(),
              j.at("order2").get<double>()};
  r.tail_estimate = j.at("tail_estimate").get<double>();
  r.n_max = j.at("n_max").get<int>();
  r.basis_size = j.at("basis_size").get<int>();
  r.wall_time_s = j.at("wall_time_s").get<double>();
  r.version = j.at("version").get<std::string>();
  r.config = config_from_json(j.at("config"));
  return r;
}

}  // namespace sumrules
