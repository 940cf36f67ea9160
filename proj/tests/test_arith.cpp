#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "semint/arith.hpp"

using namespace semint;

TEST_CASE("primality and prime lists agree with trial division") {
  const auto primes = primes_up_to(5000);
  std::size_t idx = 0;
  for (i64 n = -3; n <= 5000; ++n) {
    CHECK(is_prime(n) == oracle::is_prime(n));
    if (oracle::is_prime(n)) {
      REQUIRE(idx < primes.size());
      CHECK(primes[idx++] == n);
    }
  }
  CHECK(idx == primes.size());
}

TEST_CASE("vp") {
  CHECK(vp(2, 8) == 3);
  CHECK(vp(3, 10) == 0);
  CHECK(vp(5, -250) == 3);
  CHECK(vp_rational(2, 1, 8) == -3);
  CHECK(vp_rational(3, 18, 12) == 1);
  CHECK_THROWS_AS(vp(4, 8), std::domain_error);
  CHECK_THROWS_AS(vp(2, 0), std::domain_error);
  CHECK_THROWS_AS(vp_rational(2, 3, 0), std::domain_error);
  for (i64 p : {2, 3, 7, 101}) {
    for (i64 n = 1; n < 3000; n += 7) CHECK(vp(p, n) == oracle::vp(p, n));
  }
}

TEST_CASE("factorize reconstructs n with prime factors") {
  for (i64 n = 1; n <= 20000; ++n) {
    const Factorization f = factorize(n);
    i64 prod = 1;
    i64 last = 1;
    for (const auto& pp : f.factors()) {
      CHECK(oracle::is_prime(pp.prime));
      CHECK(pp.prime > last);
      CHECK(pp.exponent == oracle::vp(pp.prime, n));
      last = pp.prime;
      for (int e = 0; e < pp.exponent; ++e) prod *= pp.prime;
    }
    CHECK(prod == n);
  }
  const Factorization big = factorize(600851475143LL);
  CHECK(big.factors() == std::vector<PrimePower>{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}});
  CHECK(factorize(1).factors().empty());
  CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("mobius") {
  const auto table = mobius_table(3000);
  for (i64 n = 1; n <= 3000; ++n) {
    const int want = oracle::mobius(n);
    CHECK(mobius(n) == want);
    CHECK(table[n] == want);
  }
  CHECK(mobius(1) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
}

TEST_CASE("cube divisors in a half-open window match a brute-force filter") {
  for (i64 n : {1, 2, 6, 12, 30, 36, 97, 210}) {
    const i64 n3 = n * n * n;
    for (auto [lo, hi] : std::vector<std::pair<Fraction, Fraction>>{
             {{0, 1}, {n3, 1}}, {{n3, 7}, {49, 1}}, {{n3 * 2, 11}, {1000, 3}}, {{5, 2}, {5, 2}}}) {
      std::vector<i64> want;
      for (i64 d = 1; d <= n3; ++d) {
        if (n3 % d) continue;
        // lo < d <= hi
        if (d * lo.den > lo.num && d * hi.den <= hi.num) want.push_back(d);
      }
      std::vector<i64> got;
      for (const auto& d : divisors_of_cube(n, lo, hi)) got.push_back(d.value);
      CHECK(got == want);
    }
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(2) == ExactRational(mpz_class(1), mpz_class(6)));
  CHECK(bernoulli(4) == ExactRational(mpz_class(-1), mpz_class(30)));
  CHECK(bernoulli(6) == ExactRational(mpz_class(1), mpz_class(42)));
  CHECK(bernoulli(8) == ExactRational(mpz_class(-1), mpz_class(30)));
  CHECK(bernoulli(10) == ExactRational(mpz_class(5), mpz_class(66)));
  CHECK(bernoulli(12) == ExactRational(mpz_class(-691), mpz_class(2730)));
  CHECK_THROWS(bernoulli(3));
  CHECK_THROWS(bernoulli(0));
}

TEST_CASE("zeta against direct summation with an integral tail") {
  for (double s : {3.0, 5.0, 7.0, 2.5}) {
    // sum_{n <= N} n^-s + N^{1-s}/(s-1) - N^-s/2 + s N^{-s-1}/12
    const int N = 20000;
    double direct = 0.0;
    for (int n = N; n >= 1; --n) direct += std::pow(n, -s);
    direct += std::pow(N, 1 - s) / (s - 1) - std::pow(N, -s) / 2 + s * std::pow(N, -s - 1) / 12;
    CHECK(zeta_real(s) == doctest::Approx(direct).epsilon(1e-13));
  }
  CHECK(zeta_real(3.0) == doctest::Approx(1.2020569031595942).epsilon(1e-14));
  CHECK_THROWS(zeta_real(1.0));
}

TEST_CASE("ExactRational") {
  const ExactRational a(mpz_class(6), mpz_class(-4));
  CHECK(a.to_string() == "-3/2");
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK((a + ExactRational(2)).to_string() == "1/2");
  CHECK((a * a).to_string() == "9/4");
  CHECK((a / ExactRational(3)).to_string() == "-1/2");
  CHECK(a.abs() == ExactRational(mpz_class(3), mpz_class(2)));
  CHECK(ExactRational(4).is_integer());
  CHECK(a < ExactRational(0));
  CHECK(a.to_double() == -1.5);
}

TEST_CASE("PrimeSet") {
  const PrimeSet s = PrimeSet::parse("3,2,3");
  CHECK(s.primes() == std::vector<i64>{2, 3});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(5));
  CHECK(s.to_string() == "2,3");
  CHECK(PrimeSet::parse("").primes().empty());
  CHECK_THROWS_AS(PrimeSet::parse("4"), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSet::parse("2,x"), std::invalid_argument);
}
