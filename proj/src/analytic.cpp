#include "semint/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "semint/representations.hpp"

namespace semint {

namespace {

constexpr double kPoleEps = 1e-14;

double pole_checked(double factor, const char* what) {
  if (std::fabs(factor) < kPoleEps) throw PoleError(std::string("pole in ") + what);
  return factor;
}

struct Vars {
  double x;  // p^{-s}
  double y;  // p^{-w}
  double z;  // p^{2k-1}
  double u;  // y z = p^{2k-1-w}
};

Vars vars_of(const EulerFactorInput& in) {
  const double p = static_cast<double>(in.p);
  const double e = 2.0 * in.k - 1.0;
  return {std::pow(p, -in.s), std::pow(p, -in.w), std::pow(p, e), std::pow(p, e - in.w)};
}

struct TwoAdic {
  double a;
  double b;
};

TwoAdic two_adic(int k) {
  const auto c = two_adic_coefficients(k);
  return {c.a.to_double(), c.b.to_double()};
}

// sum_a x^a sum_{b=0}^{3a} v^b
double full_block(double x, double v) {
  return (1.0 + x * v + x * v * v) /
         (pole_checked(1.0 - x, "1-x") * pole_checked(1.0 - x * v * v * v, "1-xv^3"));
}

// the same, skipping b = 2a - 1
double punctured_block(double x, double v) {
  const double v2 = v * v, v3 = v2 * v;
  return (1.0 + x * x * v - x * x * v3 - x * x * x * v3 * v) /
         (pole_checked(1.0 - x, "1-x") * pole_checked(1.0 - x * v2, "1-xv^2") *
          pole_checked(1.0 - x * v3, "1-xv^3"));
}

double punctured_block_uncorrected(double x, double v) {
  const double v2 = v * v, v3 = v2 * v;
  return (1.0 + x * x * v) * (1.0 - x * x * v3) /
         (pole_checked(1.0 - x, "1-x") * pole_checked(1.0 - x * v2, "1-xv^2") *
          pole_checked(1.0 - x * v3, "1-xv^3"));
}

double prefactor(const Vars& v) { return (1.0 - v.x) * (1.0 - v.x * v.u * v.u) * (1.0 - v.x * v.u * v.u * v.u); }

}  // namespace

void EulerFactorInput::validate() const {
  if (!is_prime(p)) throw std::domain_error("EulerFactorInput: p must be prime");
  if (k < 1) throw std::domain_error("EulerFactorInput: k must be positive");
  if (!(s > 15.0 / 16.0)) throw std::domain_error("EulerFactorInput: s must exceed 15/16");
  if (!(w > 2.0 * k - 17.0 / 16.0)) throw std::domain_error("EulerFactorInput: w must exceed 2k - 17/16");
}

FactorCase factor_case(i64 p, bool in_S) {
  if (p == 2) return in_S ? FactorCase::two_in_S : FactorCase::two_not_in_S;
  return in_S ? FactorCase::odd_in_S : FactorCase::odd_not_in_S;
}

std::string to_string(FactorCase c) {
  switch (c) {
    case FactorCase::odd_in_S: return "odd_in_S";
    case FactorCase::odd_not_in_S: return "odd_not_in_S";
    case FactorCase::two_in_S: return "two_in_S";
    case FactorCase::two_not_in_S: return "two_not_in_S";
  }
  return "?";
}

double fp_series(const EulerFactorInput& in, int a_max) {
  in.validate();
  if (a_max < 0) throw std::domain_error("fp_series: a_max must be nonnegative");
  const Vars v = vars_of(in);
  const double p = static_cast<double>(in.p);
  const double e = 2.0 * in.k - 1.0;
  const TwoAdic ab = in.p == 2 ? two_adic(in.k) : TwoAdic{0.0, 0.0};

  // y^b r*(p^b), kept in overflow-free form:
  //   odd p: (y^b - z (yz)^b) / (1 - z);  p = 2, b >= 1: A (yz)^b + B y^b
  auto weighted = [&](int b) {
    if (b == 0) return 1.0;
    const double yb = std::pow(p, -in.w * b);
    const double ub = std::pow(p, (e - in.w) * b);
    if (in.p == 2) return ab.a * ub + ab.b * yb;
    return (yb - v.z * ub) / (1.0 - v.z);
  };

  double total = 0.0;
  for (int a = a_max; a >= 0; --a) {  // small terms first
    double inner = 0.0;
    for (int b = 3 * a; b >= 0; --b) {
      if (!in.in_S && b == 2 * a - 1) continue;
      inner += weighted(b);
    }
    total += std::pow(v.x, a) * inner;
  }
  return total;
}

double f_poly(double x, double y, double z) {
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const double y2 = y * y, y3 = y2 * y, y4 = y3 * y, y5 = y4 * y, y6 = y5 * y, y7 = y6 * y, y8 = y7 * y;
  const double z2 = z * z, z3 = z2 * z, z4 = z3 * z;
  double f = 0.0;
  f += x2 * y * z - x2 * y3 * z3 - x3 * y4 * z4;
  f += x * y2 * z + x * y3 * z2 + x2 * y - x2 * y3 * z2 - x2 * y5 * z4 - x3 * y4 * z3;
  f += x * y3 * z - x2 * y3 * z - x2 * y5 * z3 + x3 * y5 * z3;
  f += -x2 * y3 - x2 * y5 * z2 - x3 * y4 * z + x3 * y5 * z2 + x3 * y6 * z3 + x4 * y7 * z4;
  f += -x2 * y5 * z - x3 * y4 + x4 * y7 * z3 + x4 * y8 * z4;
  return f;
}

double fp_closed(const EulerFactorInput& in) {
  in.validate();
  const Vars v = vars_of(in);
  const double x = v.x, y = v.y, z = v.z, u = v.u;
  switch (factor_case(in.p, in.in_S)) {
    case FactorCase::odd_in_S: {
      const double num = 1 + x * y + x * u + x * y * y + x * y * u + x * u * u + x * y * y * u + x * y * u * u +
                         x * x * y * y * u * u;
      return num / (pole_checked(1 - x, "1-x") * pole_checked(1 - x * y * y * y, "1-xy^3") *
                    pole_checked(1 - x * u * u * u, "1-xy^3z^3"));
    }
    case FactorCase::odd_not_in_S: {
      const double den = pole_checked(1 - x, "1-x") * pole_checked(1 - x * y * y * y, "1-xy^3") *
                         pole_checked(1 - x * y * y, "1-xy^2") * pole_checked(1 - x * u * u * u, "1-xy^3z^3") *
                         pole_checked(1 - x * u * u, "1-xy^2z^2");
      return (1 + f_poly(x, y, z)) / den;
    }
    case FactorCase::two_in_S: {
      const TwoAdic ab = two_adic(in.k);
      const double b0 = (1 - ab.a - ab.b) / pole_checked(1 - x, "1-x");  // r*(1) = 1
      return ab.a * full_block(x, u) + ab.b * full_block(x, y) + b0;
    }
    case FactorCase::two_not_in_S: {
      const TwoAdic ab = two_adic(in.k);
      const double b0 = (1 - ab.a - ab.b) / pole_checked(1 - x, "1-x");
      return ab.a * punctured_block(x, u) + ab.b * punctured_block(x, y) + b0;
    }
  }
  throw std::logic_error("unreachable");
}

double fp_closed_uncorrected(const EulerFactorInput& in) {
  in.validate();
  if (in.p != 2) return fp_closed(in);
  const Vars v = vars_of(in);
  const TwoAdic ab = two_adic(in.k);
  if (in.in_S) return ab.a * full_block(v.x, v.u) + ab.b * full_block(v.x, v.y);
  return ab.a * punctured_block_uncorrected(v.x, v.u) + ab.b * punctured_block_uncorrected(v.x, v.y);
}

double local_zeta_factor(const EulerFactorInput& in) {
  in.validate();
  const Vars v = vars_of(in);
  return 1.0 / (pole_checked(1 - v.x, "zeta(s)") * pole_checked(1 - v.x * v.u * v.u, "zeta(s+2w-4k+2)") *
                pole_checked(1 - v.x * v.u * v.u * v.u, "zeta(s+3w-6k+3)"));
}

double gp(const EulerFactorInput& in) {
  in.validate();
  const Vars v = vars_of(in);
  if (factor_case(in.p, in.in_S) == FactorCase::odd_not_in_S) {
    const double x = v.x, y = v.y;
    return (1 + f_poly(x, y, v.z)) /
           (pole_checked(1 - x * y * y, "1-p^{-s-2w}") * pole_checked(1 - x * y * y * y, "1-p^{-s-3w}"));
  }
  return prefactor(v) * fp_closed(in);
}

double gp_special(i64 p, int k, bool in_S) {
  if (!is_prime(p)) throw std::domain_error("gp_special: p must be prime");
  if (k < 1) throw std::domain_error("gp_special: k must be positive");
  const double q = static_cast<double>(p);
  auto pw = [&](double e) { return std::pow(q, e); };
  const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
  const double c = 1.0 - std::pow(2.0, 2 * k - 1);  // 1 - 2^{2k-1}
  switch (factor_case(p, in_S)) {
    case FactorCase::odd_in_S:
      return (1 + 2 / q + 3 / pw(2 * k) + (2 * q + 1) / pw(4 * k)) * (1 - 1 / q) / (1 - 1 / pw(6 * k - 2));
    case FactorCase::odd_not_in_S: {
      const double a = 2 * q * q - q - 1;
      const double poly = 1 - 1 / pw(3) + a / pw(2 * k + 2) + (q * q - 2 * q + 1) / pw(4 * k + 1) -
                          a / pw(6 * k + 1) - (q * q + q - 2) / pw(8 * k);
      return poly / (1 - 1 / pw(4 * k - 1)) / (1 - 1 / pw(6 * k - 2));
    }
    case FactorCase::two_in_S:
      return 1 - sgn / c -
             sgn * (1 - std::pow(2.0, 2 * k)) * (1 + std::pow(2.0, -2 * k) + std::pow(2.0, -4 * k + 1)) /
                 (4 * c * (1 - std::pow(2.0, -6 * k + 2)));
    case FactorCase::two_not_in_S:
      return 15.0 / 128.0 * (sgn / c) -
             sgn * (1 - std::pow(2.0, 2 * k)) * (1 + std::pow(2.0, -2 * k - 1)) * (1 - std::pow(2.0, -6 * k + 1)) /
                 (4 * (1 - std::pow(2.0, -4 * k + 1)) * (1 - std::pow(2.0, -6 * k + 2)) * c);
  }
  throw std::logic_error("unreachable");
}

LocalFactor local_factor(i64 p, int k, bool in_S, FactorRoute route) {
  const EulerFactorInput in{p, k, in_S, 1.0, 2.0 * k - 1.0};
  double value = 0.0;
  switch (route) {
    case FactorRoute::series:
      value = 1.0 / local_zeta_factor(in) * fp_series(in, 200);
      break;
    case FactorRoute::closed_form:
      value = gp(in);
      break;
    case FactorRoute::specialized:
      value = gp_special(p, k, in_S);
      break;
  }
  return {p, in_S, value, route};
}

std::vector<LocalFactorRow> local_factor_table(int k, const PrimeSet& S, i64 prime_cutoff) {
  std::vector<LocalFactorRow> rows;
  for (i64 p : primes_up_to(prime_cutoff)) {
    const bool in_s = S.contains(p);
    const double g = gp({p, k, in_s, 1.0, 2.0 * k - 1.0});
    const double sp = gp_special(p, k, in_s);
    rows.push_back({p, in_s, g, sp, std::fabs(g - sp)});
  }
  return rows;
}

EulerProductResult euler_product(int k, const PrimeSet& S, i64 prime_cutoff, bool keep_per_prime) {
  if (k < 1) throw std::domain_error("euler_product: k must be positive");
  if (prime_cutoff < 100) throw std::domain_error("euler_product: prime_cutoff must be at least 100");
  EulerProductResult out;
  out.prime_cutoff = prime_cutoff;
  const double tail_from = static_cast<double>(prime_cutoff) / 10.0;
  for (i64 p : primes_up_to(prime_cutoff)) {
    const double g = gp({p, k, S.contains(p), 1.0, 2.0 * k - 1.0});
    if (!(g > 0.0)) throw std::logic_error("euler_product: nonpositive local factor at p = " + std::to_string(p));
    out.value *= g;
    if (!(out.value > 0.0)) throw std::logic_error("euler_product: nonpositive partial product");
    const double lg = std::log(g);
    if (static_cast<double>(p) > tail_from) {
      const double pd = static_cast<double>(p);
      out.tail_constant = std::max(out.tail_constant, std::fabs(lg) * pd * pd);
    }
    if (keep_per_prime) out.per_prime_log.push_back(lg);
  }
  // sum_{p > N} C p^{-2} <= C / (N log N), with a 25% margin.
  const double n = static_cast<double>(prime_cutoff);
  out.tail_estimate = 1.25 * out.tail_constant / (n * std::log(n));
  return out;
}

LeadingConstant leading_constant(int k, const PrimeSet& S, i64 prime_cutoff) {
  if (k < 1) throw std::domain_error("leading_constant: k must be positive");
  LeadingConstant lc;
  lc.k = k;
  const mpz_class four_k_minus_1 = (mpz_class(1) << (2 * k)) - 1;
  lc.rational_part = ExactRational(mpz_class(4 * k), mpz_class(1)) /
                     (ExactRational(mpz_class(3 * k - 1), 1) * ExactRational(four_k_minus_1, 1) *
                      bernoulli(2 * k).abs());
  lc.zeta_value = zeta_real(4.0 * k - 1.0, 1e-15);
  lc.prefactor = lc.rational_part.to_double() / lc.zeta_value;
  lc.product = euler_product(k, S, prime_cutoff);
  lc.value = lc.prefactor * lc.product.value;
  return lc;
}

Prediction predict(double B, const LeadingConstant& lc) {
  if (!(B > 1.0)) throw std::domain_error("predict: B must exceed 1");
  const int k = lc.k;
  const double scale = std::pow(B, 4.0 * k - 1.0) * std::log(B);
  const double g = lc.product.value;
  return {lc.value * scale, g / (3.0 * (2 * k - 1)) * scale, g / (6.0 * (2 * k - 1) * (3 * k - 1)) * scale};
}

Prediction predict(double B, int k, const PrimeSet& S, i64 prime_cutoff) {
  return predict(B, leading_constant(k, S, prime_cutoff));
}

}  // namespace semint
