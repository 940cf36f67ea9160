#include "semint/counting.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "semint/geometry.hpp"

namespace semint {

// --- Bound -----------------------------------------------------------------

Bound::Bound(i64 n, i64 d) : num(n), den(d) {
  if (den <= 0) throw std::domain_error("Bound: denominator must be positive");
  const i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Bound Bound::divided_by(i64 d) const {
  if (d <= 0) throw std::domain_error("Bound: divisor must be positive");
  i64 den2;
  if (__builtin_mul_overflow(den, d, &den2)) throw CapacityError("Bound: denominator overflow");
  return Bound(num, den2);
}

std::string Bound::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(RSource s) {
  switch (s) {
    case RSource::exact_bruteforce: return "exact_bruteforce";
    case RSource::jacobi_k1: return "jacobi_k1";
    case RSource::rstar_model: return "rstar_model";
  }
  return "?";
}

RSource rsource_from_string(const std::string& s) {
  if (s == "exact_bruteforce" || s == "exact") return RSource::exact_bruteforce;
  if (s == "jacobi_k1" || s == "jacobi") return RSource::jacobi_k1;
  if (s == "rstar_model" || s == "rstar") return RSource::rstar_model;
  throw std::invalid_argument("unknown r-source '" + s + "'");
}

void CountRequest::validate() const {
  if (k < 1) throw std::domain_error("CountRequest: k must be positive");
  if (bound.den <= 0 || bound.num < bound.den) throw std::domain_error("CountRequest: bound must be >= 1");
  if (r_source == RSource::jacobi_k1 && k != 1) {
    throw std::domain_error("CountRequest: jacobi_k1 is only valid for k = 1");
  }
  if (threads < 1) throw std::domain_error("CountRequest: threads must be positive");
}

i64 CountReport::recomputed_mobius_sum() const {
  i64 acc = 0;
  for (const auto& e : n_star_values) acc += e.mu * e.value;
  return acc;
}

// --- shared divisor-sum engine ---------------------------------------------

namespace {

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw CapacityError("count exceeds 64 bits");
  return out;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw CapacityError("count exceeds 64 bits");
  return out;
}

// How each visited divisor d | n^3 is weighted before the 1_S filter.
enum class Weight { rep_table, jacobi, rstar };

struct SumContext {
  int k;
  const PrimeSet* S;
  Weight weight;
  const RepCountTable* table;  // rep_table only
  const std::vector<Factorization>* facts;
};

struct Window {
  Fraction lo;
  Fraction hi;
};

i64 prime_power_weight(Weight w, i64 p, int e, int k) {
  if (w == Weight::jacobi) {
    if (e == 0) return 1;
    if (p == 2) return 3;
    i64 sum = 1, pw = 1;
    for (int i = 0; i < e; ++i) {
      pw = checked_mul(pw, p);
      sum = checked_add(sum, pw);
    }
    return sum;
  }
  return r4k_star_prime_power(p, e, k);
}

i64 sum_for_n(const SumContext& ctx, i64 n, const Window& win) {
  const Factorization& f = (*ctx.facts)[static_cast<std::size_t>(n)];
  const auto& fs = f.factors();
  const std::size_t m = fs.size();

  std::vector<bool> in_s(m);
  std::vector<std::vector<i64>> pp(m);
  for (std::size_t i = 0; i < m; ++i) {
    in_s[i] = ctx.S->contains(fs[i].prime);
    if (ctx.weight != Weight::rep_table) {
      pp[i].resize(static_cast<std::size_t>(3 * fs[i].exponent) + 1);
      for (int e = 0; e <= 3 * fs[i].exponent; ++e) pp[i][e] = prime_power_weight(ctx.weight, fs[i].prime, e, ctx.k);
    }
  }

  i64 acc = 0;
  for_each_cube_divisor(f, win.lo, win.hi, [&](i64 d, const std::vector<int>& exps) {
    // 1_S(n^2 / d): v_p(n^2/d) = 2 e_p(n) - e_p(d)
    for (std::size_t i = 0; i < m; ++i) {
      if (!in_s[i] && 2 * fs[i].exponent - exps[i] == 1) return;
    }
    i64 w;
    if (ctx.weight == Weight::rep_table) {
      w = (*ctx.table)[d];
    } else {
      w = 1;
      for (std::size_t i = 0; i < m; ++i) w = checked_mul(w, pp[i][exps[i]]);
      if (ctx.weight == Weight::jacobi) w = checked_mul(w, 8);
    }
    acc = checked_add(acc, w);
  });
  return acc;
}

i64 divisor_sum(const SumContext& ctx, i64 n_max, const std::function<Window(i64)>& window, int threads) {
  if (n_max < 1) return 0;
  const i64 chunks = std::min<i64>(threads, n_max);
  if (chunks <= 1) {
    i64 acc = 0;
    for (i64 n = 1; n <= n_max; ++n) acc = checked_add(acc, sum_for_n(ctx, n, window(n)));
    return acc;
  }
  std::vector<i64> partial(static_cast<std::size_t>(chunks), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
  std::vector<std::thread> pool;
  for (i64 c = 0; c < chunks; ++c) {
    pool.emplace_back([&, c] {
      try {
        const i64 begin = 1 + c * n_max / chunks;
        const i64 end = (c + 1) * n_max / chunks;
        i64 acc = 0;
        for (i64 n = begin; n <= end; ++n) acc = checked_add(acc, sum_for_n(ctx, n, window(n)));
        partial[c] = acc;
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  i64 acc = 0;
  for (i64 v : partial) acc = checked_add(acc, v);
  return acc;
}

std::vector<Factorization> factorizations_up_to(i64 n_max) {
  std::vector<Factorization> out(static_cast<std::size_t>(std::max<i64>(n_max, 0)) + 1);
  for (i64 n = 1; n <= n_max; ++n) out[n] = factorize(n);
  return out;
}

i64 cube(i64 n) { return checked_mul(checked_mul(n, n), n); }

// B^2 as a divisor-window end-point.
Fraction squared(const Bound& b) { return {checked_mul(b.num, b.num), checked_mul(b.den, b.den)}; }

// n^3 / B
Fraction cube_over(i64 n, const Bound& b) { return {checked_mul(cube(n), b.den), b.num}; }

Weight weight_for(RSource s) {
  switch (s) {
    case RSource::exact_bruteforce: return Weight::rep_table;
    case RSource::jacobi_k1: return Weight::jacobi;
    case RSource::rstar_model: return Weight::rstar;
  }
  throw std::logic_error("unreachable");
}

// Everything N*(B/d) needs for all d, built once for the largest bound.
struct NStarEngine {
  CountRequest req;
  std::vector<Factorization> facts;
  std::optional<RepCountTable> table;

  NStarEngine(const CountRequest& r, Bound largest) : req(r) {
    facts = factorizations_up_to(largest.floor());
    if (req.r_source == RSource::exact_bruteforce) {
      const Fraction sq = squared(largest);
      table = r4k_bruteforce(std::max<i64>(1, sq.num / sq.den), req.k, req.rep_budget);
    }
  }

  i64 operator()(Bound B) const {
    const SumContext ctx{req.k, &req.S, weight_for(req.r_source), table ? &*table : nullptr, &facts};
    const Fraction hi = squared(B);
    const i64 inner = divisor_sum(
        ctx, B.floor(), [&](i64 n) { return Window{cube_over(n, B), hi}; }, req.threads);
    return checked_mul(2, inner);
  }
};

void check_request_shape(const CountRequest& req) {
  CountRequest probe = req;
  probe.bound = Bound(1);
  probe.validate();
}

}  // namespace

int indicator_1S(i64 num, i64 den, const PrimeSet& S) {
  if (num < 1 || den < 1) throw std::domain_error("indicator_1S: arguments must be positive");
  const i64 g = std::gcd(num, den);
  // In lowest terms v_p > 0 only at primes of the numerator, where it is
  // their exponent; the denominator contributes negative valuations only.
  const Factorization f = factorize(num / g);
  for (const auto& [p, e] : f.factors()) {
    if (e == 1 && !S.contains(p)) return 0;
  }
  return 1;
}

i64 n_star(Bound B, const CountRequest& req) {
  check_request_shape(req);
  if (B.num < B.den) return 0;
  return NStarEngine(req, B)(B);
}

i64 n_mobius(Bound B, const CountRequest& req) {
  CountRequest r = req;
  r.bound = B;
  return run_count(r).n_mobius;
}

i64 oracle_bound_limit(int k) {
  switch (k) {
    case 1: return 100;
    case 2: return 14;
    case 3: return 6;
    default: return 4;
  }
}

i64 n_oracle(i64 B, int k, const PrimeSet& S) {
  if (k < 1) throw std::domain_error("n_oracle: k must be positive");
  if (B < 1) throw std::domain_error("n_oracle: B must be positive");
  if (B > oracle_bound_limit(k)) {
    throw CapacityError("n_oracle: B = " + std::to_string(B) + " exceeds the enumeration limit " +
                        std::to_string(oracle_bound_limit(k)) + " for k = " + std::to_string(k));
  }
  const int dim = 4 * k;
  i64 total = 0;
  for (i64 x = 1; x <= B; ++x) {
    const i64 x3 = x * x * x;
    for (const auto& div : divisors_of_cube(x, Fraction{x3, B}, Fraction{B * B, 1})) {
      const i64 d = div.value;
      const i64 z = x3 / d;
      std::optional<bool> condition;  // depends on x and z only
      for_each_representation_class(d, dim, [&](std::span<const i64> ys, u64 mult) {
        i64 g = x;
        for (i64 y : ys) g = std::gcd(g, y);
        if (std::gcd(g, z) != 1) return;
        if (!condition) {
          const SurfacePoint pt(k, x, std::vector<i64>(ys.begin(), ys.end()), z);
          condition = semi_integral_ok(pt, S);
        }
        if (*condition) total = checked_add(total, static_cast<i64>(mult));
      });
    }
  }
  return checked_mul(2, total);
}

i64 s_sum(Bound X, Bound Y, const CountRequest& req) {
  check_request_shape(req);
  if (X.num < X.den || Y.num < Y.den) return 0;  // n <= X and d <= Y both need >= 1
  const auto facts = factorizations_up_to(X.floor());
  const SumContext ctx{req.k, &req.S, Weight::rstar, nullptr, &facts};
  const Fraction hi{Y.num, Y.den};
  return divisor_sum(
      ctx, X.floor(), [&](i64) { return Window{Fraction{0, 1}, hi}; }, req.threads);
}

i64 t_sum(Bound B, const CountRequest& req) {
  check_request_shape(req);
  if (B.num < B.den) return 0;
  const auto facts = factorizations_up_to(B.floor());
  const SumContext ctx{req.k, &req.S, Weight::rstar, nullptr, &facts};
  return divisor_sum(
      ctx, B.floor(), [&](i64 n) { return Window{Fraction{0, 1}, cube_over(n, B)}; }, req.threads);
}

CountReport run_count(const CountRequest& req, const CountOptions& options) {
  req.validate();
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };

  CountReport report;
  report.request = req;
  const Bound B = req.bound;

  auto t0 = clock::now();
  const NStarEngine engine(req, B);
  const auto mu = mobius_table(B.floor());
  for (i64 d = 1; d <= B.floor(); ++d) {
    if (mu[d] == 0) continue;
    const Bound scaled = B.divided_by(d);
    report.n_star_values.push_back({d, mu[d], scaled, engine(scaled)});
  }
  report.n_mobius = report.recomputed_mobius_sum();
  report.timings_ms["mobius"] = ms_since(t0);

  if (options.oracle) {
    if (B.den != 1) throw std::domain_error("run_count: the oracle needs an integer bound");
    t0 = clock::now();
    report.n_oracle = n_oracle(B.num, req.k, req.S);
    report.timings_ms["oracle"] = ms_since(t0);
  }
  if (options.auxiliary_sums) {
    t0 = clock::now();
    const Fraction sq = squared(B);
    report.s_value = s_sum(B, Bound(sq.num, sq.den), req);
    report.t_value = t_sum(B, req);
    report.timings_ms["auxiliary_sums"] = ms_since(t0);
  }
  return report;
}

}  // namespace semint
