// semint: counts, main-term predictions, local factor tables and
// verification suites for semi-integral points on x^3 = (y_1^2+...+y_4k^2) z.
//
// Exit status: 0 ok, 1 suite failure or internal error, 2 usage error,
// 3 capacity guard.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semint/analytic.hpp"
#include "semint/counting.hpp"
#include "semint/report.hpp"
#include "semint/verify.hpp"

namespace {

using namespace semint;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  int k = 1;
  std::vector<std::string> bounds;
  std::string exclude_primes;
  std::string r_source;  // empty: jacobi for k = 1, exact otherwise
  std::string method = "mobius";
  i64 prime_cutoff = 0;  // 0: the command default
  std::string format;  // empty: the command default
  std::string output;
  std::string suite = "all";
  int threads = 1;
  bool timings = false;
  bool aux = false;
};

Bound parse_bound(const std::string& text) {
  std::size_t used = 0;
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      const i64 n = std::stoll(text, &used);
      if (used != text.size()) throw UsageError("");
      return Bound(n);
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    const i64 num = std::stoll(a, &used);
    if (used != a.size()) throw UsageError("");
    const i64 den = std::stoll(b, &used);
    if (used != b.size() || den <= 0) throw UsageError("");
    return Bound(num, den);
  } catch (const std::logic_error&) {
    throw UsageError("invalid bound: " + text);
  }
}

std::vector<i64> integer_bounds(const Config& cfg) {
  if (cfg.bounds.empty()) throw UsageError("--bound is required");
  std::vector<i64> out;
  for (const auto& s : cfg.bounds) {
    const Bound b = parse_bound(s);
    if (b.den != 1 || b.num < 1) throw UsageError("bounds must be positive integers here: " + s);
    out.push_back(b.num);
  }
  return out;
}

CountRequest base_request(const Config& cfg) {
  CountRequest req;
  req.k = cfg.k;
  try {
    req.S = PrimeSet::parse(cfg.exclude_primes);
    const std::string src = cfg.r_source.empty() ? (cfg.k == 1 ? "jacobi_k1" : "exact_bruteforce") : cfg.r_source;
    req.r_source = rsource_from_string(src);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  req.threads = cfg.threads;
  return req;
}

i64 product_cutoff(const Config& cfg) {
  const i64 c = cfg.prime_cutoff == 0 ? 100000 : cfg.prime_cutoff;
  if (c < 100) throw UsageError("--prime-cutoff must be at least 100");
  return c;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + cfg.output);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_count(const Config& cfg) {
  if (cfg.bounds.size() != 1) throw UsageError("count takes exactly one --bound");
  if (!cfg.format.empty() && cfg.format != "json") throw UsageError("count emits json only");
  if (cfg.method != "mobius" && cfg.method != "oracle") throw UsageError("--method must be mobius or oracle");
  CountRequest req = base_request(cfg);
  req.bound = parse_bound(cfg.bounds.front());
  try {
    req.validate();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const CountReport r = run_count(req, {.oracle = cfg.method == "oracle", .auxiliary_sums = cfg.aux});
  emit(cfg, dump(to_json(r, cfg.timings)));
  return 0;
}

int cmd_predict(const Config& cfg) {
  const i64 cutoff = product_cutoff(cfg);
  if (!cfg.format.empty() && cfg.format != "json") throw UsageError("predict emits json only");
  const CountRequest req = base_request(cfg);
  std::vector<double> bounds;
  for (const auto& s : cfg.bounds) {
    const double b = parse_bound(s).to_double();
    if (b <= 1.0) throw UsageError("predict bounds must exceed 1");
    bounds.push_back(b);
  }
  const LeadingConstant lc = leading_constant(cfg.k, req.S, cutoff);
  emit(cfg, dump(to_json(make_predict_report(lc, req.S, bounds))));
  return 0;
}

int cmd_compare(const Config& cfg) {
  const i64 cutoff = product_cutoff(cfg);
  const std::vector<i64> bounds = integer_bounds(cfg);
  const CountRequest req = base_request(cfg);
  const LeadingConstant lc = leading_constant(cfg.k, req.S, cutoff);
  const CompareReport r = make_compare_report(req, bounds, lc);
  if (cfg.format == "csv") {
    emit(cfg, to_csv(r));
  } else if (cfg.format.empty() || cfg.format == "json") {
    emit(cfg, dump(to_json(r)));
  } else {
    throw UsageError("--format must be json or csv");
  }
  return 0;
}

int cmd_local_factors(const Config& cfg) {
  if (!cfg.format.empty() && cfg.format != "csv") throw UsageError("local-factors emits csv only");
  const i64 cutoff = cfg.prime_cutoff == 0 ? 97 : cfg.prime_cutoff;
  if (cutoff < 2) throw UsageError("--prime-cutoff must be at least 2");
  const CountRequest req = base_request(cfg);
  emit(cfg, to_csv(local_factor_table(cfg.k, req.S, cutoff)));
  return 0;
}

int cmd_table(const Config& cfg) {
  const i64 cutoff = product_cutoff(cfg);
  if (!cfg.format.empty() && cfg.format != "csv") throw UsageError("table emits csv only");
  const std::vector<i64> bounds = integer_bounds(cfg);
  const CountRequest req = base_request(cfg);
  const LeadingConstant lc = leading_constant(cfg.k, req.S, cutoff);
  emit(cfg, to_csv(make_table(req, bounds, lc)));
  return 0;
}

int cmd_verify(const Config& cfg) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(cfg.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream out;
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    char head[160];
    std::snprintf(head, sizeof head, "%-4s %-28s %.2fs\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    out << head;
    for (const auto& d : r.details) out << "     " << d << '\n';
  }
  emit(cfg, out.str());
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts and asymptotics for semi-integral points of bounded height"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Dimension parameter, 4k squares")->check(CLI::PositiveNumber);
    sub->add_option("--exclude-primes", cfg.exclude_primes, "Primes in S, e.g. 2,3");
    sub->add_option("--output", cfg.output, "Write to file instead of stdout");
  };
  auto bound_opt = [&](CLI::App* sub) {
    sub->add_option("--bound", cfg.bounds, "Height bound(s); repeatable or comma separated")->delimiter(',');
  };
  auto cutoff_opt = [&](CLI::App* sub) {
    sub->add_option("--prime-cutoff", cfg.prime_cutoff, "Largest prime in the Euler product (default 100000)");
  };
  auto rsource_opt = [&](CLI::App* sub) {
    sub->add_option("--r-source", cfg.r_source, "exact_bruteforce | jacobi_k1 | rstar_model");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto format_opt = [&](CLI::App* sub, const char* help) { sub->add_option("--format", cfg.format, help); };

  auto* count = app.add_subcommand("count", "Count primitive tuples up to a bound");
  common(count);
  bound_opt(count);
  rsource_opt(count);
  format_opt(count, "json");
  count->add_option("--method", cfg.method, "mobius | oracle (oracle also runs the direct enumeration)");
  count->add_flag("--timings", cfg.timings, "Include wall-clock timings");
  count->add_flag("--aux", cfg.aux, "Also compute S(B, B^2) and T(B)");

  auto* predict_cmd = app.add_subcommand("predict", "Leading constant and main terms");
  common(predict_cmd);
  bound_opt(predict_cmd);
  cutoff_opt(predict_cmd);
  format_opt(predict_cmd, "json");

  auto* compare = app.add_subcommand("compare", "Counts against the main term");
  common(compare);
  bound_opt(compare);
  cutoff_opt(compare);
  rsource_opt(compare);
  format_opt(compare, "json | csv");

  auto* local = app.add_subcommand("local-factors", "Per-prime local factors at (1, 2k-1) as CSV");
  common(local);
  local->add_option("--prime-cutoff", cfg.prime_cutoff, "Largest prime listed (default 97)");
  format_opt(local, "csv");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", cfg.suite, "Suite name or all");
  verify->add_option("--output", cfg.output, "Write to file instead of stdout");

  auto* table = app.add_subcommand("table", "CSV of counts, S, T and main terms");
  common(table);
  bound_opt(table);
  cutoff_opt(table);
  rsource_opt(table);
  format_opt(table, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(cfg);
    if (predict_cmd->parsed()) return cmd_predict(cfg);
    if (compare->parsed()) return cmd_compare(cfg);
    if (local->parsed()) return cmd_local_factors(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (table->parsed()) return cmd_table(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
