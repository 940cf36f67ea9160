#pragma once

// Serialized artifacts: JSON reports (schema "v1") and CSV tables.
// Floating-point fields are rounded to 15 significant digits when a report
// is built, so emitted text is deterministic and re-parses to equal values.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semint/analytic.hpp"
#include "semint/counting.hpp"

namespace semint {

inline constexpr const char* kSchemaVersion = "v1";

double round15(double v);
/// "%.15g"
std::string format15(double v);

nlohmann::json to_json(const CountReport& report, bool include_timings = false);
CountReport count_report_from_json(const nlohmann::json& j);

struct PredictionRow {
  double bound;
  double n_main;
  double s_main;
  double t_main;

  friend bool operator==(const PredictionRow&, const PredictionRow&) = default;
};

struct PredictReport {
  int k = 1;
  PrimeSet S;
  i64 prime_cutoff = 0;
  std::string bernoulli;      // B_{2k} as "n/d"
  std::string rational_part;  // 4k / ((3k-1)(4^k-1)|B_{2k}|)
  double zeta_value = 0;
  double prefactor = 0;
  double euler_product = 0;
  double tail_estimate = 0;
  double tail_constant = 0;
  double leading_constant = 0;
  double s_coefficient = 0;  // G / (3(2k-1))
  double t_coefficient = 0;  // G / (6(2k-1)(3k-1))
  std::vector<PredictionRow> rows;

  friend bool operator==(const PredictReport&, const PredictReport&) = default;
};

PredictReport make_predict_report(const LeadingConstant& lc, const PrimeSet& S, const std::vector<double>& bounds);
nlohmann::json to_json(const PredictReport& report);
PredictReport predict_report_from_json(const nlohmann::json& j);

struct CompareRow {
  i64 bound;
  i64 tuples;
  i64 points;
  double n_main;
  double ratio_tuples;
  double ratio_points;

  friend bool operator==(const CompareRow&, const CompareRow&) = default;
};

struct CompareReport {
  int k = 1;
  PrimeSet S;
  RSource r_source = RSource::jacobi_k1;
  i64 prime_cutoff = 0;
  double leading_constant = 0;
  std::vector<CompareRow> rows;

  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

CompareReport make_compare_report(const CountRequest& base, const std::vector<i64>& bounds, const LeadingConstant& lc);
nlohmann::json to_json(const CompareReport& report);
CompareReport compare_report_from_json(const nlohmann::json& j);
std::string to_csv(const CompareReport& report);

struct TableRow {
  i64 bound;
  i64 tuples;
  i64 points;
  double n_main;
  double ratio_points;
  i64 s_sum;
  double s_main;
  double s_ratio;
  i64 t_sum;
  double t_main;
  double t_ratio;
};

std::vector<TableRow> make_table(const CountRequest& base, const std::vector<i64>& bounds, const LeadingConstant& lc);
std::string to_csv(const std::vector<TableRow>& rows);

std::string to_csv(const std::vector<LocalFactorRow>& rows);

}  // namespace semint
