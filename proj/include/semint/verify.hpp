#pragma once

// Named verification suites. Each suite returns one result per check; a
// suite passes iff every result passes.

#include <string>
#include <vector>

namespace semint {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Measured values, one fact per entry.
  std::vector<std::string> details;
  double seconds = 0.0;
};

/// jacobi, rstar, mpoints, routes, st-identity, euler-factors,
/// specialization, euler-product, trend, st-trend.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws
/// std::invalid_argument on an unknown name.
std::vector<CheckResult> run_suite(const std::string& name);

CheckResult check_jacobi_exactness(long d_max = 2000);
CheckResult check_rstar_witness(long d_max = 300);
CheckResult check_mpoint_equivalence(long height = 40, long p_max = 100);
CheckResult check_route_equality();
CheckResult check_st_identity();
CheckResult check_euler_factors(long p_max = 10000);
CheckResult check_specialization(long p_max = 97);
CheckResult check_euler_product_stability();
CheckResult check_asymptotic_trend();
CheckResult check_st_trend();

}  // namespace semint
