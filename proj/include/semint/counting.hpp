#pragma once

// Counting semi-integral points of bounded height: the divisor-sum N*(B),
// Möbius inclusion-exclusion to primitive tuples, a direct enumeration
// oracle, and the auxiliary sums S(X, Y) and T(B) built on r*_{4k}.
//
// Boundary convention: every route uses the window n^3/B < d <= B^2, i.e.
// |x| <= B, h <= B^2 and |z| < B (strict in z).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semint/arith.hpp"
#include "semint/representations.hpp"

namespace semint {

/// A positive rational bound num/den.
struct Bound {
  i64 num = 1;
  i64 den = 1;

  Bound() = default;
  Bound(i64 n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
  Bound(i64 n, i64 d);

  i64 floor() const { return num / den; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// this / d, in lowest terms.
  Bound divided_by(i64 d) const;
  std::string to_string() const;

  friend bool operator==(const Bound&, const Bound&) = default;
};

enum class RSource { exact_bruteforce, jacobi_k1, rstar_model };

std::string to_string(RSource s);
RSource rsource_from_string(const std::string& s);

struct CountRequest {
  int k = 1;
  Bound bound{1};
  PrimeSet S;
  RSource r_source = RSource::jacobi_k1;
  /// Worker threads for the outer n-loop; results do not depend on it.
  int threads = 1;
  i64 rep_budget = kDefaultRepBudget;

  /// Throws std::domain_error on k < 1, bound < 1, or jacobi_k1 with k != 1.
  void validate() const;

  friend bool operator==(const CountRequest&, const CountRequest&) = default;
};

/// One term mu(d) N*(B/d) of the inclusion-exclusion sum.
struct NStarEntry {
  i64 divisor;
  int mu;
  Bound bound;
  i64 value;

  friend bool operator==(const NStarEntry&, const NStarEntry&) = default;
};

struct CountReport {
  CountRequest request;
  /// N*(B/d) for every squarefree d <= B, in increasing d.
  std::vector<NStarEntry> n_star_values;
  i64 n_mobius = 0;
  std::optional<i64> n_oracle;
  std::optional<i64> s_value;
  std::optional<i64> t_value;
  std::map<std::string, double> timings_ms;

  /// Tuples with both signs of x; each projective point is two tuples.
  i64 tuples() const { return n_mobius; }
  i64 points() const { return n_mobius / 2; }

  /// sum mu(d) N*(B/d) recomputed from n_star_values.
  i64 recomputed_mobius_sum() const;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// 1 iff v_p(num/den) != 1 for every prime p outside S.
int indicator_1S(i64 num, i64 den, const PrimeSet& S);

/// 2 sum_{n <= B} sum_{d | n^3, n^3/B < d <= B^2} r(d) 1_S(n^2/d), with r
/// chosen by req.r_source (req.bound is not used).
i64 n_star(Bound B, const CountRequest& req);

/// sum_{d <= B} mu(d) N*(B/d).
i64 n_mobius(Bound B, const CountRequest& req);

/// Largest B accepted by n_oracle for the given k.
i64 oracle_bound_limit(int k);

/// Direct enumeration of primitive tuples (x, y, z) with x >= 1 under the
/// same window, doubled for the sign of x. Throws CapacityError above
/// oracle_bound_limit(k).
i64 n_oracle(i64 B, int k, const PrimeSet& S);

/// S(X, Y) = sum_{n <= X} sum_{d | n^3, d <= Y} r*(d) 1_S(n^2/d).
i64 s_sum(Bound X, Bound Y, const CountRequest& req);

/// T(B) = sum_{n <= B} sum_{d | n^3, d <= n^3/B} r*(d) 1_S(n^2/d).
i64 t_sum(Bound B, const CountRequest& req);

struct CountOptions {
  bool oracle = false;
  bool auxiliary_sums = false;
};

/// Runs the Möbius route at req.bound, plus the oracle and S, T on request.
CountReport run_count(const CountRequest& req, const CountOptions& options = {});

}  // namespace semint
