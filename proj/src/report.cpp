#include "semint/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace semint {

using nlohmann::json;

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

std::string format15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {

void check_schema(const json& j, const char* kind) {
  if (j.at("schema").get<std::string>() != kSchemaVersion) throw std::invalid_argument("unsupported schema");
  if (j.at("kind").get<std::string>() != kind) throw std::invalid_argument(std::string("expected a ") + kind + " report");
}

json bound_json(const Bound& b) { return json{{"num", b.num}, {"den", b.den}}; }
Bound bound_from(const json& j) { return Bound(j.at("num").get<i64>(), j.at("den").get<i64>()); }

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

double ratio(double num, double den) { return den != 0.0 ? round15(num / den) : 0.0; }

}  // namespace

// --- count -------------------------------------------------------------------

json to_json(const CountReport& r, bool include_timings) {
  json stars = json::array();
  for (const auto& e : r.n_star_values) {
    stars.push_back({{"d", e.divisor}, {"mu", e.mu}, {"bound", bound_json(e.bound)}, {"n_star", e.value}});
  }
  json j = {
      {"schema", kSchemaVersion},
      {"kind", "count"},
      {"request",
       {{"k", r.request.k},
        {"bound", bound_json(r.request.bound)},
        {"exclude_primes", r.request.S.primes()},
        {"r_source", to_string(r.request.r_source)},
        {"boundary", "half-open: n^3/B < d <= B^2 (|z| < B)"}}},
      {"n_star_values", stars},
      {"n_mobius", r.n_mobius},
      {"tuples", r.tuples()},
      {"points", r.points()},
      {"n_oracle", optional_json(r.n_oracle)},
      {"s_value", optional_json(r.s_value)},
      {"t_value", optional_json(r.t_value)},
  };
  if (include_timings) {
    json t = json::object();
    for (const auto& [k, v] : r.timings_ms) t[k] = round15(v);
    j["timings_ms"] = t;
  }
  return j;
}

CountReport count_report_from_json(const json& j) {
  check_schema(j, "count");
  CountReport r;
  const json& q = j.at("request");
  r.request.k = q.at("k").get<int>();
  r.request.bound = bound_from(q.at("bound"));
  r.request.S = PrimeSet(q.at("exclude_primes").get<std::vector<i64>>());
  r.request.r_source = rsource_from_string(q.at("r_source").get<std::string>());
  for (const auto& e : j.at("n_star_values")) {
    r.n_star_values.push_back(
        {e.at("d").get<i64>(), e.at("mu").get<int>(), bound_from(e.at("bound")), e.at("n_star").get<i64>()});
  }
  r.n_mobius = j.at("n_mobius").get<i64>();
  r.n_oracle = optional_from<i64>(j, "n_oracle");
  r.s_value = optional_from<i64>(j, "s_value");
  r.t_value = optional_from<i64>(j, "t_value");
  if (j.contains("timings_ms")) {
    for (const auto& [k, v] : j.at("timings_ms").items()) r.timings_ms[k] = v.get<double>();
  }
  return r;
}

// --- predict -------------------------------------------------------------------

PredictReport make_predict_report(const LeadingConstant& lc, const PrimeSet& S, const std::vector<double>& bounds) {
  PredictReport r;
  const int k = lc.k;
  r.k = k;
  r.S = S;
  r.prime_cutoff = lc.product.prime_cutoff;
  r.bernoulli = bernoulli(2 * k).to_string();
  r.rational_part = lc.rational_part.to_string();
  r.zeta_value = round15(lc.zeta_value);
  r.prefactor = round15(lc.prefactor);
  r.euler_product = round15(lc.product.value);
  r.tail_estimate = round15(lc.product.tail_estimate);
  r.tail_constant = round15(lc.product.tail_constant);
  r.leading_constant = round15(lc.value);
  r.s_coefficient = round15(lc.product.value / (3.0 * (2 * k - 1)));
  r.t_coefficient = round15(lc.product.value / (6.0 * (2 * k - 1) * (3 * k - 1)));
  for (double b : bounds) {
    const Prediction p = predict(b, lc);
    r.rows.push_back({round15(b), round15(p.n_main), round15(p.s_main), round15(p.t_main)});
  }
  return r;
}

json to_json(const PredictReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"B", row.bound}, {"n_main", row.n_main}, {"s_main", row.s_main}, {"t_main", row.t_main}});
  }
  return json{
      {"schema", kSchemaVersion},
      {"kind", "predict"},
      {"k", r.k},
      {"exclude_primes", r.S.primes()},
      {"prime_cutoff", r.prime_cutoff},
      {"bernoulli_2k", r.bernoulli},
      {"rational_part", r.rational_part},
      {"zeta_4k_minus_1", r.zeta_value},
      {"prefactor", r.prefactor},
      {"euler_product", r.euler_product},
      {"tail_estimate", r.tail_estimate},
      {"tail_constant", r.tail_constant},
      {"leading_constant", r.leading_constant},
      {"s_coefficient", r.s_coefficient},
      {"t_coefficient", r.t_coefficient},
      {"main_terms", rows},
  };
}

PredictReport predict_report_from_json(const json& j) {
  check_schema(j, "predict");
  PredictReport r;
  r.k = j.at("k").get<int>();
  r.S = PrimeSet(j.at("exclude_primes").get<std::vector<i64>>());
  r.prime_cutoff = j.at("prime_cutoff").get<i64>();
  r.bernoulli = j.at("bernoulli_2k").get<std::string>();
  r.rational_part = j.at("rational_part").get<std::string>();
  r.zeta_value = j.at("zeta_4k_minus_1").get<double>();
  r.prefactor = j.at("prefactor").get<double>();
  r.euler_product = j.at("euler_product").get<double>();
  r.tail_estimate = j.at("tail_estimate").get<double>();
  r.tail_constant = j.at("tail_constant").get<double>();
  r.leading_constant = j.at("leading_constant").get<double>();
  r.s_coefficient = j.at("s_coefficient").get<double>();
  r.t_coefficient = j.at("t_coefficient").get<double>();
  for (const auto& row : j.at("main_terms")) {
    r.rows.push_back({row.at("B").get<double>(), row.at("n_main").get<double>(), row.at("s_main").get<double>(),
                      row.at("t_main").get<double>()});
  }
  return r;
}

// --- compare -------------------------------------------------------------------

CompareReport make_compare_report(const CountRequest& base, const std::vector<i64>& bounds, const LeadingConstant& lc) {
  CompareReport r;
  r.k = base.k;
  r.S = base.S;
  r.r_source = base.r_source;
  r.prime_cutoff = lc.product.prime_cutoff;
  r.leading_constant = round15(lc.value);
  for (i64 b : bounds) {
    CountRequest req = base;
    req.bound = Bound(b);
    const CountReport cr = run_count(req);
    const double main = b > 1 ? predict(static_cast<double>(b), lc).n_main : 0.0;
    r.rows.push_back({b, cr.tuples(), cr.points(), round15(main), ratio(static_cast<double>(cr.tuples()), main),
                      ratio(static_cast<double>(cr.points()), main)});
  }
  return r;
}

json to_json(const CompareReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"B", row.bound},
                    {"tuples", row.tuples},
                    {"points", row.points},
                    {"n_main", row.n_main},
                    {"ratio_tuples", row.ratio_tuples},
                    {"ratio_points", row.ratio_points}});
  }
  return json{{"schema", kSchemaVersion},
              {"kind", "compare"},
              {"k", r.k},
              {"exclude_primes", r.S.primes()},
              {"r_source", to_string(r.r_source)},
              {"prime_cutoff", r.prime_cutoff},
              {"leading_constant", r.leading_constant},
              {"rows", rows}};
}

CompareReport compare_report_from_json(const json& j) {
  check_schema(j, "compare");
  CompareReport r;
  r.k = j.at("k").get<int>();
  r.S = PrimeSet(j.at("exclude_primes").get<std::vector<i64>>());
  r.r_source = rsource_from_string(j.at("r_source").get<std::string>());
  r.prime_cutoff = j.at("prime_cutoff").get<i64>();
  r.leading_constant = j.at("leading_constant").get<double>();
  for (const auto& row : j.at("rows")) {
    r.rows.push_back({row.at("B").get<i64>(), row.at("tuples").get<i64>(), row.at("points").get<i64>(),
                      row.at("n_main").get<double>(), row.at("ratio_tuples").get<double>(),
                      row.at("ratio_points").get<double>()});
  }
  return r;
}

std::string to_csv(const CompareReport& r) {
  std::ostringstream out;
  out << "B,tuples,points,n_main,ratio_tuples,ratio_points\n";
  for (const auto& row : r.rows) {
    out << row.bound << ',' << row.tuples << ',' << row.points << ',' << format15(row.n_main) << ','
        << format15(row.ratio_tuples) << ',' << format15(row.ratio_points) << '\n';
  }
  return out.str();
}

// --- table ---------------------------------------------------------------------

std::vector<TableRow> make_table(const CountRequest& base, const std::vector<i64>& bounds, const LeadingConstant& lc) {
  std::vector<TableRow> rows;
  for (i64 b : bounds) {
    CountRequest req = base;
    req.bound = Bound(b);
    const CountReport cr = run_count(req, {.oracle = false, .auxiliary_sums = true});
    const Prediction p = b > 1 ? predict(static_cast<double>(b), lc) : Prediction{0, 0, 0};
    rows.push_back({b, cr.tuples(), cr.points(), round15(p.n_main),
                    ratio(static_cast<double>(cr.points()), p.n_main), *cr.s_value, round15(p.s_main),
                    ratio(static_cast<double>(*cr.s_value), p.s_main), *cr.t_value, round15(p.t_main),
                    ratio(static_cast<double>(*cr.t_value), p.t_main)});
  }
  return rows;
}

std::string to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "B,tuples,points,n_main,ratio_points,s_sum,s_main,s_ratio,t_sum,t_main,t_ratio\n";
  for (const auto& r : rows) {
    out << r.bound << ',' << r.tuples << ',' << r.points << ',' << format15(r.n_main) << ','
        << format15(r.ratio_points) << ',' << r.s_sum << ',' << format15(r.s_main) << ',' << format15(r.s_ratio)
        << ',' << r.t_sum << ',' << format15(r.t_main) << ',' << format15(r.t_ratio) << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<LocalFactorRow>& rows) {
  std::ostringstream out;
  out << "p,in_S,gp_value,gp_special_value,abs_diff\n";
  for (const auto& r : rows) {
    out << r.p << ',' << (r.in_S ? 1 : 0) << ',' << format15(r.gp_value) << ',' << format15(r.gp_special_value)
        << ',' << format15(r.abs_diff) << '\n';
  }
  return out.str();
}

}  // namespace semint
