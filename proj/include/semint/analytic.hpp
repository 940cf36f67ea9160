#pragma once

// Local factors of the double Dirichlet series
//   F(s, w) = sum_n sum_{d | n^3} r*_{4k}(d) 1_S(n^2/d) n^{-s} d^{-w},
// their zeta-normalized versions G_p, the Euler product G_S(1, 2k-1), and
// the leading constants of the counting asymptotics.
//
// All arguments are real. With x = p^{-s}, y = p^{-w}, z = p^{2k-1}:
//   G_p(s, w) = (1 - x)(1 - x y^2 z^2)(1 - x y^3 z^3) F_p(s, w).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "semint/arith.hpp"

namespace semint {

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct EulerFactorInput {
  i64 p = 2;
  int k = 1;
  bool in_S = false;
  double s = 1.0;
  double w = 1.0;

  /// p prime, k >= 1, s > 15/16, w > 2k - 17/16.
  void validate() const;
};

enum class FactorCase { odd_in_S, odd_not_in_S, two_in_S, two_not_in_S };

FactorCase factor_case(i64 p, bool in_S);
std::string to_string(FactorCase c);

/// Truncated local series sum_{a <= a_max} x^a sum_b y^b r*(p^b), where b runs
/// over 0..3a, skipping b = 2a - 1 when p is outside S.
double fp_series(const EulerFactorInput& in, int a_max = 60);

/// Rational-function closed form of the local series. Throws PoleError when a
/// denominator factor is within 1e-14 of zero.
double fp_closed(const EulerFactorInput& in);

/// The p = 2 closed forms in their uncorrected shape: the b = 0 term is taken
/// as A + B rather than r*(1) = 1, and for p outside S the numerator is
/// (1 + x^2 u)(1 - x^2 u^3). Odd p delegates to fp_closed. Used to quantify
/// the discrepancy with gp_special; never used in products.
double fp_closed_uncorrected(const EulerFactorInput& in);

/// The degree-(4, 8, 4) correction polynomial with
///   F_p = (1 + F(x, y, z)) / ((1-x)(1-xy^3)(1-xy^2)(1-xy^3z^3)(1-xy^2z^2))
/// for odd p outside S. Coefficients are all +1 or -1.
double f_poly(double x, double y, double z);

/// (1 - p^{-s})^{-1} (1 - p^{-s-2(w-2k+1)})^{-1} (1 - p^{-s-3(w-2k+1)})^{-1}
double local_zeta_factor(const EulerFactorInput& in);

/// G_p(s, w). Odd p outside S uses the reduced form
/// (1 + F) / ((1 - p^{-s-2w})(1 - p^{-s-3w})); otherwise prefactor * fp_closed.
double gp(const EulerFactorInput& in);

/// Closed expressions for G_p(1, 2k-1) specialized per case. Cases with p
/// odd agree with gp; the p = 2 expressions inherit the uncorrected 2-adic
/// closed forms and do not.
double gp_special(i64 p, int k, bool in_S);

enum class FactorRoute { series, closed_form, specialized };

struct LocalFactor {
  i64 p;
  bool in_S;
  double value;
  FactorRoute route;
};

/// G_p(1, 2k-1) for one prime by the requested route.
LocalFactor local_factor(i64 p, int k, bool in_S, FactorRoute route);

struct LocalFactorRow {
  i64 p;
  bool in_S;
  double gp_value;
  double gp_special_value;
  double abs_diff;
};

/// One row per prime p <= prime_cutoff.
std::vector<LocalFactorRow> local_factor_table(int k, const PrimeSet& S, i64 prime_cutoff);

struct EulerProductResult {
  double value = 1.0;
  i64 prime_cutoff = 0;
  /// Bound on |log(full product) - log(truncated product)|.
  double tail_estimate = 0.0;
  /// max |log G_p| p^2 over primes in (cutoff/10, cutoff].
  double tail_constant = 0.0;
  /// log G_p per prime, ascending p; filled only on request.
  std::vector<double> per_prime_log;
};

/// prod_{p <= cutoff} G_p(1, 2k-1), multiplied in ascending p.
EulerProductResult euler_product(int k, const PrimeSet& S, i64 prime_cutoff, bool keep_per_prime = false);

struct LeadingConstant {
  int k = 1;
  /// 4k / ((3k-1)(4^k-1)|B_{2k}|), exact.
  ExactRational rational_part;
  double zeta_value = 0.0;  // zeta(4k-1)
  /// rational_part / zeta(4k-1).
  double prefactor = 0.0;
  EulerProductResult product;
  /// prefactor * G_S(1, 2k-1)
  double value = 0.0;
};

LeadingConstant leading_constant(int k, const PrimeSet& S, i64 prime_cutoff);

struct Prediction {
  double n_main;
  double s_main;
  double t_main;
};

/// Main terms at B > 1: leading constant, G/(3(2k-1)) and G/(6(2k-1)(3k-1)),
/// each times B^{4k-1} log B.
Prediction predict(double B, const LeadingConstant& lc);
Prediction predict(double B, int k, const PrimeSet& S, i64 prime_cutoff);

}  // namespace semint
