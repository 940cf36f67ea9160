#include "semint/representations.hpp"

#include <stdexcept>

namespace semint {

namespace {

i64 checked_mul(i64 a, i64 b, const char* what) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw CapacityError(std::string(what) + ": 64-bit overflow");
  return out;
}

i64 checked_add(i64 a, i64 b, const char* what) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw CapacityError(std::string(what) + ": 64-bit overflow");
  return out;
}

void require_k(int k) {
  if (k < 1) throw std::domain_error("k must be a positive integer");
}

}  // namespace

RepCountTable r4k_bruteforce(i64 limit, int k, i64 budget) {
  require_k(k);
  if (limit < 1) throw std::domain_error("r4k_bruteforce: limit must be positive");
  if (limit > budget / (4 * k)) {
    throw CapacityError("r4k_bruteforce: limit*4k = " + std::to_string(limit * 4 * k) +
                        " exceeds budget " + std::to_string(budget));
  }
  const auto n = static_cast<std::size_t>(limit) + 1;
  std::vector<i64> squares;  // j^2 for j >= 1 within range
  for (i64 j = 1; j * j <= limit; ++j) squares.push_back(j * j);

  std::vector<i64> acc(n, 0);
  acc[0] = 1;  // empty sum
  std::vector<i64> next(n);
  for (int round = 0; round < 4 * k; ++round) {
    next = acc;  // y = 0 contributes once
    for (std::size_t d = 0; d < n; ++d) {
      if (acc[d] == 0) continue;
      const i64 twice = checked_mul(acc[d], 2, "r4k_bruteforce");
      for (i64 sq : squares) {
        const std::size_t t = d + static_cast<std::size_t>(sq);
        if (t >= n) break;
        next[t] = checked_add(next[t], twice, "r4k_bruteforce");
      }
    }
    acc.swap(next);
  }
  return RepCountTable{k, limit, std::move(acc)};
}

i64 r4_jacobi(const Factorization& d) {
  i64 sigma = 1;
  for (const auto& [p, e] : d.factors()) {
    if (p == 2) {
      sigma = checked_mul(sigma, 3, "r4_jacobi");  // divisors 1 and 2 only
      continue;
    }
    i64 term = 1, pw = 1;
    for (int i = 0; i < e; ++i) {
      pw = checked_mul(pw, p, "r4_jacobi");
      term = checked_add(term, pw, "r4_jacobi");
    }
    sigma = checked_mul(sigma, term, "r4_jacobi");
  }
  return checked_mul(8, sigma, "r4_jacobi");
}

i64 r4_jacobi(i64 d) {
  if (d < 1) throw std::domain_error("r4_jacobi: d must be positive");
  return r4_jacobi(factorize(d));
}

TwoAdicCoefficients two_adic_coefficients(int k) {
  require_k(k);
  const ExactRational sign = (k % 2 == 0) ? 1L : -1L;
  const mpz_class two_pow_2k1 = mpz_class(1) << (2 * k - 1);
  const ExactRational denom(mpz_class(1 - two_pow_2k1), mpz_class(1));
  const ExactRational a = ExactRational(1L) - sign / denom;
  const ExactRational b = -sign * ExactRational(mpz_class(1 - (two_pow_2k1 << 1)), mpz_class(1)) / denom;
  return {a, b};
}

mpz_class r4k_star_prime_power_exact(i64 p, int l, int k) {
  require_k(k);
  if (l < 0) throw std::domain_error("r4k_star: negative exponent");
  if (!is_prime(p)) throw std::domain_error("r4k_star: p must be prime");
  if (l == 0) return 1;
  if (p == 2) {
    const auto [a, b] = two_adic_coefficients(k);
    const mpz_class pw = mpz_class(1) << (l * (2 * k - 1));
    const ExactRational value = a * ExactRational(pw, 1) + b;
    if (!value.is_integer()) {
      throw std::logic_error("r4k_star: 2-adic value " + value.to_string() + " is not integral");
    }
    return value.numerator();
  }
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * k - 1));
  mpz_class zl;
  mpz_pow_ui(zl.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(l + 1));
  return (1 - zl) / (1 - z);
}

i64 r4k_star_prime_power(i64 p, int l, int k) {
  require_k(k);
  if (l < 0) throw std::domain_error("r4k_star: negative exponent");
  if (l == 0) return 1;
  const char* what = "r4k_star";
  if (p == 2) {
    // (A 2^L + B) = ((1 - 2^{2k-1} - s) 2^L - s (1 - 2^{2k})) / (1 - 2^{2k-1}), s = (-1)^k
    const int shift = l * (2 * k - 1);
    if (shift > 100 || 2 * k > 60) throw CapacityError("r4k_star: 2-adic value exceeds 128 bits");
    const i128 s = (k % 2 == 0) ? 1 : -1;
    const i128 q = static_cast<i128>(1) << (2 * k - 1);
    const i128 num = (1 - q - s) * (static_cast<i128>(1) << shift) - s * (1 - 2 * q);
    const i128 den = 1 - q;
    if (num % den != 0) throw std::logic_error("r4k_star: 2-adic value is not integral");
    const i128 v = num / den;
    if (v > INT64_MAX || v < 0) throw CapacityError("r4k_star: 64-bit overflow");
    return static_cast<i64>(v);
  }
  i64 z = 1;
  for (int i = 0; i < 2 * k - 1; ++i) z = checked_mul(z, p, what);
  i64 term = 1, sum = 1;
  for (int i = 0; i < l; ++i) {
    term = checked_mul(term, z, what);
    sum = checked_add(sum, term, what);
  }
  return sum;
}

i64 r4k_star(const Factorization& d, int k) {
  require_k(k);
  i64 out = 1;
  for (const auto& [p, e] : d.factors()) out = checked_mul(out, r4k_star_prime_power(p, e, k), "r4k_star");
  return out;
}

i64 r4k_star(i64 d, int k) {
  if (d < 1) throw std::domain_error("r4k_star: d must be positive");
  return r4k_star(factorize(d), k);
}

ExactRational r4k_main_coeff(int k) {
  require_k(k);
  const mpz_class four_k = (mpz_class(1) << (2 * k)) - 1;
  return ExactRational(mpz_class(4 * k), mpz_class(1)) /
         (ExactRational(four_k, 1) * bernoulli(2 * k).abs());
}

}  // namespace semint
