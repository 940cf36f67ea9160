#include "semint/arith.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace semint {

Factorization::Factorization(i64 value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {
  if (value_ < 1) throw std::domain_error("Factorization: value must be positive");
  i128 product = 1;
  i64 prev = 1;
  for (const auto& [p, e] : factors_) {
    if (p <= prev || e < 1) throw std::domain_error("Factorization: malformed factor list");
    for (int i = 0; i < e; ++i) product *= p;
    prev = p;
  }
  if (product != value_) throw std::domain_error("Factorization: factors do not multiply to value");
}

int Factorization::exponent_of(i64 p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& pp, i64 q) { return pp.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

// --- ExactRational ---------------------------------------------------------

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  q_.canonicalize();
}

ExactRational::ExactRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

std::string ExactRational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.q_ == 0) throw std::domain_error("ExactRational: division by zero");
  return ExactRational(mpq_class(a.q_ / b.q_));
}

// --- PrimeSet --------------------------------------------------------------

PrimeSet::PrimeSet(std::initializer_list<i64> primes) : PrimeSet(std::vector<i64>(primes)) {}

PrimeSet::PrimeSet(std::vector<i64> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (i64 p : primes_) {
    if (!is_prime(p)) throw std::domain_error("PrimeSet: " + std::to_string(p) + " is not prime");
  }
}

bool PrimeSet::contains(i64 p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string PrimeSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(primes_[i]);
  }
  return out;
}

PrimeSet PrimeSet::parse(const std::string& text) {
  std::vector<i64> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    i64 p = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("PrimeSet: bad entry '" + item + "'");
    primes.push_back(p);
  }
  try {
    return PrimeSet(std::move(primes));
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

// --- primes and valuations -------------------------------------------------

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (i64 d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<i64> primes_up_to(i64 limit) {
  std::vector<i64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (i64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

int vp(i64 p, i64 n) {
  if (n == 0) throw std::domain_error("vp: n must be nonzero");
  if (!is_prime(p)) throw std::domain_error("vp: p must be prime");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

int vp_rational(i64 p, i64 num, i64 den) {
  if (num == 0 || den == 0) throw std::domain_error("vp_rational: zero argument");
  return vp(p, num) - vp(p, den);
}

Factorization factorize(i64 n) {
  if (n < 1) throw std::domain_error("factorize: n must be positive");
  const i64 value = n;
  std::vector<PrimePower> fs;
  auto strip = [&](i64 p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) fs.push_back({p, e});
  };
  strip(2);
  strip(3);
  strip(5);
  static constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};  // gaps from 7 mod 30
  i64 d = 7;
  for (int i = 0; d * d <= n; d += kWheel[i], i = (i + 1) & 7) strip(d);
  if (n > 1) fs.push_back({n, 1});
  return Factorization(value, std::move(fs));
}

int mobius(const Factorization& f) {
  int sign = 1;
  for (const auto& pp : f.factors()) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

int mobius(i64 n) { return mobius(factorize(n)); }

std::vector<int> mobius_table(i64 limit) {
  std::vector<int> mu(static_cast<std::size_t>(std::max<i64>(limit, 1)) + 1, 1);
  std::vector<i64> primes;
  std::vector<bool> composite(mu.size(), false);
  mu[0] = 0;
  for (i64 i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (i64 p : primes) {
      if (i * p > limit) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

// --- divisors --------------------------------------------------------------

std::vector<Divisor> divisors_of_cube(const Factorization& n, Fraction lo, Fraction hi) {
  if (lo.den <= 0 || hi.den <= 0) throw std::domain_error("divisors_of_cube: nonpositive denominator");
  std::vector<Divisor> out;
  const auto& base = n.factors();
  for_each_cube_divisor(n, lo, hi, [&](i64 value, const std::vector<int>& exps) {
    std::vector<PrimePower> fs;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i]) fs.push_back({base[i].prime, exps[i]});
    }
    out.push_back({value, Factorization(value, std::move(fs))});
  });
  std::sort(out.begin(), out.end(), [](const Divisor& a, const Divisor& b) { return a.value < b.value; });
  return out;
}

std::vector<Divisor> divisors_of_cube(i64 n, Fraction lo, Fraction hi) {
  return divisors_of_cube(factorize(n), lo, hi);
}

// --- Bernoulli and zeta ----------------------------------------------------

namespace {

std::vector<mpq_class> bernoulli_table(int m) {
  std::vector<mpq_class> b(static_cast<std::size_t>(m) + 1);
  b[0] = 1;
  for (int n = 1; n <= m; ++n) {
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(n+1, j)
    for (int j = 0; j < n; ++j) {
      acc += binom * b[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    b[n] = -acc / (n + 1);
    b[n].canonicalize();
  }
  return b;
}

constexpr int kZetaTerms = 40;

const std::vector<double>& bernoulli_over_factorial() {
  // B_{2j} / (2j)! for j = 1..kZetaTerms
  static const std::vector<double> table = [] {
    auto b = bernoulli_table(2 * kZetaTerms);
    std::vector<double> out(kZetaTerms + 1, 0.0);
    mpz_class fact = 1;
    for (int n = 1; n <= 2 * kZetaTerms; ++n) {
      fact *= n;
      if (n % 2 == 0) out[n / 2] = mpq_class(b[n] / fact).get_d();
    }
    return out;
  }();
  return table;
}

}  // namespace

ExactRational bernoulli(int m) {
  if (m < 2 || m % 2 != 0) throw std::domain_error("bernoulli: m must be even and >= 2");
  return ExactRational(bernoulli_table(m)[m]);
}

double zeta_real(double s, double tol) {
  if (!(s > 1.0)) throw std::domain_error("zeta_real: s must exceed 1");
  if (!(tol > 0.0)) throw std::domain_error("zeta_real: tol must be positive");
  const auto& coeff = bernoulli_over_factorial();
  for (long n_cut = 10;; n_cut *= 2) {
    const double N = static_cast<double>(n_cut);
    double head = 0.0;
    for (long n = n_cut - 1; n >= 1; --n) head += std::pow(static_cast<double>(n), -s);
    double sum = head + std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);
    // rising = s (s+1) ... (s+2j-2), power = N^{-s-2j+1}
    double rising = s;
    double power = std::pow(N, -s - 1.0);
    double prev = INFINITY;
    for (int j = 1; j <= kZetaTerms; ++j) {
      const double term = coeff[j] * rising * power;
      if (std::fabs(term) < tol / 10.0) return sum;
      if (std::fabs(term) > prev) break;  // asymptotic series diverging: enlarge N
      sum += term;
      prev = std::fabs(term);
      rising *= (s + 2 * j - 1) * (s + 2 * j);
      power /= N * N;
    }
    if (n_cut > (1L << 24)) throw CapacityError("zeta_real: tolerance not reachable");
  }
}

}  // namespace semint
