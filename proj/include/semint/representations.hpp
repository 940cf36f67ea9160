#pragma once

// Representation numbers of sums of 4k squares: brute-force tables, the
// Jacobi four-square closed form, and the multiplicative model r*_{4k}.

#include <cstdint>
#include <span>
#include <vector>

#include "semint/arith.hpp"

namespace semint {

/// Default cap on limit * 4k for brute-force representation tables.
inline constexpr i64 kDefaultRepBudget = 400'000'000;

/// counts[d] = #{y in Z^{4k} : |y|^2 = d} for 0 <= d <= limit.
struct RepCountTable {
  int k = 1;
  i64 limit = 0;
  std::vector<i64> counts;

  i64 operator[](i64 d) const { return counts.at(static_cast<std::size_t>(d)); }
};

/// Exact table by 4k successive sparse convolutions with the square
/// indicator (theta coefficients 1, 2, 0, 0, 2, ...). Throws CapacityError
/// when limit * 4k exceeds `budget` or an entry overflows 64 bits.
RepCountTable r4k_bruteforce(i64 limit, int k, i64 budget = kDefaultRepBudget);

/// 8 * sum of divisors m of d with 4 not dividing m.
i64 r4_jacobi(i64 d);
i64 r4_jacobi(const Factorization& d);

/// The multiplicative model r*_{4k}: value at p^l, and its multiplicative
/// extension. Fixed-width; throws CapacityError on overflow.
i64 r4k_star_prime_power(i64 p, int l, int k);
i64 r4k_star(i64 d, int k);
i64 r4k_star(const Factorization& d, int k);

/// The 2-adic coefficients with r*_{4k}(2^l) = A 2^{l(2k-1)} + B for l >= 1.
struct TwoAdicCoefficients {
  ExactRational a;
  ExactRational b;
};
TwoAdicCoefficients two_adic_coefficients(int k);

/// r*_{4k}(p^l) in exact arithmetic. For p = 2 the value is assembled from
/// A and B as rationals and must come out integral; std::logic_error otherwise.
mpz_class r4k_star_prime_power_exact(i64 p, int l, int k);

/// 4k / ((4^k - 1) |B_{2k}|), the coefficient with r_{4k} ~ c r*_{4k}.
ExactRational r4k_main_coeff(int k);

/// Enumerates every y in Z^dim with |y|^2 = d (signed, ordered).
template <class Visit>
void for_each_representation(i64 d, int dim, Visit&& visit);

/// Enumerates representations of d as a sum of `dim` squares up to signs
/// and order: visit(values, multiplicity) where values is nondecreasing and
/// nonnegative and multiplicity counts the signed ordered vectors in the
/// class.
template <class Visit>
void for_each_representation_class(i64 d, int dim, Visit&& visit);

// ---------------------------------------------------------------------------

namespace detail {

inline i64 isqrt(i64 n) {
  if (n <= 0) return 0;
  auto r = static_cast<i64>(__builtin_sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

template <class Visit>
void rep_rec(std::vector<i64>& y, std::size_t pos, i64 remaining, Visit& visit) {
  if (pos + 1 == y.size()) {
    const i64 r = isqrt(remaining);
    if (r * r != remaining) return;
    y[pos] = r;
    visit(std::span<const i64>(y));
    if (r != 0) {
      y[pos] = -r;
      visit(std::span<const i64>(y));
    }
    return;
  }
  const i64 bound = isqrt(remaining);
  for (i64 v = -bound; v <= bound; ++v) {
    y[pos] = v;
    rep_rec(y, pos + 1, remaining - v * v, visit);
  }
}

template <class Visit>
void rep_class_rec(std::vector<i64>& y, std::size_t pos, i64 min_v, i64 remaining,
                   const std::vector<u64>& factorial, Visit& visit) {
  const std::size_t dim = y.size();
  if (pos + 1 == dim) {
    const i64 r = isqrt(remaining);
    if (r * r != remaining || r < min_v) return;
    y[pos] = r;
    u64 mult = factorial[dim];
    int nonzero = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= dim; ++i) {
      if (i < dim && y[i] == y[i - 1]) {
        ++run;
        continue;
      }
      mult /= factorial[run];
      run = 1;
    }
    for (i64 v : y) nonzero += (v != 0);
    mult <<= nonzero;
    visit(std::span<const i64>(y), mult);
    return;
  }
  const auto slots = static_cast<i64>(dim - pos);
  for (i64 v = min_v; v * v * slots <= remaining; ++v) {
    y[pos] = v;
    rep_class_rec(y, pos + 1, v, remaining - v * v, factorial, visit);
  }
}

}  // namespace detail

template <class Visit>
void for_each_representation(i64 d, int dim, Visit&& visit) {
  if (d < 0 || dim < 1) return;
  std::vector<i64> y(static_cast<std::size_t>(dim), 0);
  detail::rep_rec(y, 0, d, visit);
}

template <class Visit>
void for_each_representation_class(i64 d, int dim, Visit&& visit) {
  if (d < 0 || dim < 1) return;
  if (dim > 16) throw CapacityError("for_each_representation_class: dimension too large");
  std::vector<u64> factorial(static_cast<std::size_t>(dim) + 1, 1);
  for (std::size_t i = 1; i < factorial.size(); ++i) factorial[i] = factorial[i - 1] * i;
  std::vector<i64> y(static_cast<std::size_t>(dim), 0);
  detail::rep_class_rec(y, 0, 0, d, factorial, visit);
}

}  // namespace semint
