#pragma once

// Exact integer and rational primitives: valuations, factorization, Möbius,
// divisors of cubes, Bernoulli numbers and real zeta values.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace semint {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

/// Raised when a requested computation exceeds a configured resource budget
/// or would overflow the fixed-width integer range it is evaluated in.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  i64 prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod p^e with strictly increasing primes and exponents >= 1.
class Factorization {
 public:
  Factorization() = default;
  Factorization(i64 value, std::vector<PrimePower> factors);

  i64 value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  /// Exponent of p (0 when p does not divide value).
  int exponent_of(i64 p) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  i64 value_ = 1;
  std::vector<PrimePower> factors_;
};

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const mpz_class& num, const mpz_class& den);
  explicit ExactRational(mpq_class q);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  /// "n/d", or just "n" when the denominator is 1.
  std::string to_string() const;

  ExactRational abs() const { return ExactRational(::abs(q_)); }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ + b.q_));
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ - b.q_));
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ * b.q_));
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a) {
    return ExactRational(mpq_class(-a.q_));
  }
  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator<(const ExactRational& a, const ExactRational& b) {
    return a.q_ < b.q_;
  }

 private:
  mpq_class q_{0};
};

/// Finite, sorted set of distinct primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<i64> primes);
  explicit PrimeSet(std::vector<i64> primes);

  bool contains(i64 p) const;
  bool empty() const { return primes_.empty(); }
  const std::vector<i64>& primes() const { return primes_; }
  /// Comma separated, e.g. "2,3"; empty string for the empty set.
  std::string to_string() const;
  /// Parses the `to_string` form. Throws std::invalid_argument.
  static PrimeSet parse(const std::string& text);

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<i64> primes_;
};

bool is_prime(i64 n);

/// All primes <= limit, ascending (sieve of Eratosthenes).
std::vector<i64> primes_up_to(i64 limit);

/// Exponent of the largest power of p dividing n.
int vp(i64 p, i64 n);

/// vp(p, num) - vp(p, den).
int vp_rational(i64 p, i64 num, i64 den);

/// Deterministic trial division with a 2,3,5 wheel.
Factorization factorize(i64 n);

int mobius(i64 n);
int mobius(const Factorization& f);

/// Möbius values for 0..limit from a linear sieve (entry 0 is unused).
std::vector<int> mobius_table(i64 limit);

/// A divisor together with its own factorization.
struct Divisor {
  i64 value;
  Factorization factorization;
};

/// End-point of a divisor window, num/den with den > 0. Comparisons against
/// it are done in 128-bit integer arithmetic.
struct Fraction {
  i64 num;
  i64 den = 1;
};

/// Divisors d of n^3 with lo < d <= hi, ascending.
std::vector<Divisor> divisors_of_cube(i64 n, Fraction lo, Fraction hi);
std::vector<Divisor> divisors_of_cube(const Factorization& n, Fraction lo, Fraction hi);

/// Visits the divisors of n^3 in (lo, hi] in no particular order, without
/// building Factorization objects: visit(value, exponents), where exponents[i]
/// is the exponent of n.factors()[i].prime in value.
template <class Visit>
void for_each_cube_divisor(const Factorization& n, Fraction lo, Fraction hi, Visit&& visit);

/// B_m for even m >= 2, with B_2 = 1/6, B_4 = -1/30.
ExactRational bernoulli(int m);

/// Riemann zeta at real s > 1 via Euler-Maclaurin, |error| <= tol.
double zeta_real(double s, double tol = 1e-13);

// ---------------------------------------------------------------------------

namespace detail {

template <class Visit>
void cube_divisor_rec(const Factorization& n, Fraction lo, Fraction hi, std::size_t idx,
                      i128 value, std::vector<int>& exps, Visit& visit) {
  const auto& fs = n.factors();
  if (idx == fs.size()) {
    // lo < value <= hi
    if (static_cast<i128>(lo.num) < value * lo.den && value * hi.den <= static_cast<i128>(hi.num)) {
      visit(static_cast<i64>(value), static_cast<const std::vector<int>&>(exps));
    }
    return;
  }
  const i64 p = fs[idx].prime;
  const int emax = 3 * fs[idx].exponent;
  i128 v = value;
  for (int e = 0; e <= emax; ++e) {
    if (v * hi.den > static_cast<i128>(hi.num)) break;  // prune: already above hi
    exps[idx] = e;
    cube_divisor_rec(n, lo, hi, idx + 1, v, exps, visit);
    v *= p;
  }
  exps[idx] = 0;
}

}  // namespace detail

template <class Visit>
void for_each_cube_divisor(const Factorization& n, Fraction lo, Fraction hi, Visit&& visit) {
  if (hi.num < 0) return;
  std::vector<int> exps(n.factors().size(), 0);
  detail::cube_divisor_rec(n, lo, hi, 0, 1, exps, visit);
}

}  // namespace semint
