#include "semint/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "semint/analytic.hpp"
#include "semint/counting.hpp"
#include "semint/geometry.hpp"
#include "semint/representations.hpp"

namespace semint {

namespace {

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

template <class Body>
CheckResult timed(int id, const char* name, Body body) {
  CheckResult r;
  r.id = id;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.passed = body(r.details);
  } catch (const std::exception& e) {
    r.passed = false;
    r.details.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<PrimeSet> sets(std::initializer_list<std::vector<i64>> lists) {
  std::vector<PrimeSet> out;
  for (const auto& l : lists) out.emplace_back(l);
  return out;
}

}  // namespace

CheckResult check_jacobi_exactness(long d_max) {
  return timed(1, "jacobi-exactness", [&](std::vector<std::string>& det) {
    const RepCountTable brute = r4k_bruteforce(d_max, 1);
    long bad = 0;
    for (i64 d = 1; d <= d_max; ++d) {
      const i64 j = r4_jacobi(d);
      if (brute[d] != j || j != 8 * r4k_star(d, 1)) {
        if (bad++ < 5) det.push_back(fmt("mismatch at d=%lld", static_cast<long long>(d)));
      }
    }
    det.push_back(fmt("d<=%ld mismatches=%ld", d_max, bad));
    return bad == 0;
  });
}

CheckResult check_rstar_witness(long d_max) {
  return timed(2, "rstar-witness-k2", [&](std::vector<std::string>& det) {
    const RepCountTable r8 = r4k_bruteforce(d_max, 2);
    auto witness = [&](long limit) {
      double c = 0.0;
      for (i64 d = 1; d <= limit; ++d) {
        const double diff = std::fabs(static_cast<double>(r8[d] - 16 * r4k_star(d, 2)));
        c = std::max(c, diff / (static_cast<double>(d) * static_cast<double>(d)));
      }
      return c;
    };
    const double full = witness(d_max);
    const double half = witness(d_max / 2);
    det.push_back(fmt("C(d<=%ld)=%.15g", d_max, full));
    det.push_back(fmt("C(d<=%ld)=%.15g", d_max / 2, half));
    return std::isfinite(full) && full <= 4.0 * half;
  });
}

CheckResult check_mpoint_equivalence(long height, long p_max) {
  return timed(3, "mpoint-equivalence", [&](std::vector<std::string>& det) {
    const std::vector<i64> primes = primes_up_to(p_max);
    const std::vector<PrimeSet> s_sets = sets({{}, {2}, {2, 3}, {5}});
    long points = 0;
    long classes = 0;
    long bad = 0;
    for (i64 x = 1; x <= height; ++x) {
      const i64 x3 = x * x * x;
      for (i64 z = 1; z <= height; ++z) {
        if (x3 % z != 0) continue;
        const i64 h = x3 / z;
        if (h > height * height) continue;
        const i64 g = std::gcd(x, z);
        for_each_representation_class(h, 4, [&](std::span<const i64> ys, u64 mult) {
          i64 gg = g;
          for (i64 y : ys) gg = std::gcd(gg, y);
          if (gg != 1) return;
          ++classes;
          for (int sign : {1, -1}) {
            const SurfacePoint pt(1, sign * x, std::vector<i64>(ys.begin(), ys.end()), sign * z);
            points += static_cast<long>(mult);
            for (i64 p : primes) {
              const MultPair m = intersection_mults(pt, p);
              const int want = std::max(vp(p, z) - vp(p, x), 0);
              if (2 * m.n1 + m.n2 != want) {
                if (bad++ < 5) det.push_back(fmt("multiplicity mismatch x=%lld z=%lld p=%lld", (long long)x, (long long)z, (long long)p));
              }
            }
            for (const auto& S : s_sets) {
              if (semi_integral_ok(pt, S) != m_point_ok(pt, S)) {
                if (bad++ < 5) det.push_back(fmt("predicate mismatch x=%lld z=%lld S={%s}", (long long)x, (long long)z, S.to_string().c_str()));
              }
            }
          }
        });
      }
    }
    det.push_back(fmt("height<=%ld points=%ld classes=%ld mismatches=%ld", height, points, classes, bad));
    return bad == 0 && points > 0;
  });
}

CheckResult check_route_equality() {
  return timed(4, "route-equality", [&](std::vector<std::string>& det) {
    bool ok = true;
    for (const auto& S : sets({{}, {2}, {2, 3}})) {
      for (i64 B : {5, 10, 20, 30, 50}) {
        CountRequest req;
        req.S = S;
        const i64 mob = n_mobius(Bound(B), req);
        const i64 orc = n_oracle(B, 1, S);
        ok = ok && mob == orc;
        det.push_back(fmt("S={%s} B=%lld mobius=%lld oracle=%lld", S.to_string().c_str(), (long long)B, (long long)mob,
                          (long long)orc));
      }
    }
    return ok;
  });
}

CheckResult check_st_identity() {
  return timed(5, "st-identity", [&](std::vector<std::string>& det) {
    bool ok = true;
    CountRequest req;
    for (i64 B : {10, 50, 100, 200}) {
      const i64 s = s_sum(Bound(B), Bound(B * B), req);
      const i64 t = t_sum(Bound(B), req);
      const i64 ns = n_star(Bound(B), req);
      ok = ok && 16 * (s - t) == ns;
      det.push_back(fmt("B=%lld S=%lld T=%lld 16(S-T)=%lld N*=%lld", (long long)B, (long long)s, (long long)t,
                        (long long)(16 * (s - t)), (long long)ns));
    }
    return ok;
  });
}

CheckResult check_euler_factors(long p_max) {
  return timed(6, "euler-factor-certification", [&](std::vector<std::string>& det) {
    double series_err = 0.0;
    for (i64 p : {2, 3, 5, 7, 11}) {
      for (int k : {1, 2}) {
        for (bool in_S : {false, true}) {
          const double grid[3][2] = {{2.0, 2.0 * k}, {1.5, 2.0 * k - 0.5}, {3.0, 2.0 * k + 1}};
          for (const auto& sw : grid) {
            const EulerFactorInput in{p, k, in_S, sw[0], sw[1]};
            series_err = std::max(series_err, std::fabs(fp_series(in, 60) - fp_closed(in)));
          }
        }
      }
    }
    double zeta_err = 0.0;
    for (int k : {1, 2}) {
      for (i64 p : primes_up_to(p_max)) {
        for (bool in_S : {false, true}) {
          const EulerFactorInput in{p, k, in_S, 2.0, 2.0 * k};
          zeta_err = std::max(zeta_err, std::fabs(fp_closed(in) - local_zeta_factor(in) * gp(in)));
        }
      }
    }
    det.push_back(fmt("max |series - closed| = %.3g (tol 1e-9)", series_err));
    det.push_back(fmt("max |F_p - zeta_p G_p| = %.3g over p<=%ld (tol 1e-12)", zeta_err, p_max));
    return series_err <= 1e-9 && zeta_err <= 1e-12;
  });
}

CheckResult check_specialization(long p_max) {
  return timed(7, "specialization", [&](std::vector<std::string>& det) {
    std::map<FactorCase, double> worst;
    for (int k : {1, 2}) {
      for (i64 p : primes_up_to(p_max)) {
        for (bool in_S : {false, true}) {
          const double certified = gp({p, k, in_S, 1.0, 2.0 * k - 1});
          const double printed = gp_special(p, k, in_S);
          const FactorCase c = factor_case(p, in_S);
          worst[c] = std::max(worst[c], std::fabs(certified - printed));
          if (p == 2) {
            det.push_back(fmt("%s k=%d certified=%.15g printed=%.15g", to_string(c).c_str(), k, certified, printed));
          }
        }
      }
    }
    bool ok = true;
    for (const auto& [c, diff] : worst) {
      const bool asserted = c != FactorCase::two_not_in_S;
      if (asserted) ok = ok && diff <= 1e-12;
      det.push_back(fmt("%s max diff=%.3g%s", to_string(c).c_str(), diff, asserted ? "" : " (reported only)"));
    }
    return ok;
  });
}

CheckResult check_euler_product_stability() {
  return timed(8, "euler-product-stability", [&](std::vector<std::string>& det) {
    const double g4 = euler_product(1, PrimeSet(), 10000).value;
    const double g5 = euler_product(1, PrimeSet(), 100000).value;
    const double rel = std::fabs(g5 - g4) / g5;
    det.push_back(fmt("G(1e4)=%.15g G(1e5)=%.15g rel=%.3g (tol 1e-4)", g4, g5, rel));
    return rel <= 1e-4;
  });
}

CheckResult check_asymptotic_trend() {
  return timed(9, "asymptotic-trend", [&](std::vector<std::string>& det) {
    const LeadingConstant lc = leading_constant(1, PrimeSet(), 100000);
    std::vector<double> rho_t;
    std::vector<double> rho_p;
    for (i64 B : {1000, 10000, 30000}) {
      CountRequest req;
      req.bound = Bound(B);
      const CountReport r = run_count(req);
      const double main = predict(static_cast<double>(B), lc).n_main;
      rho_t.push_back(static_cast<double>(r.tuples()) / main);
      rho_p.push_back(static_cast<double>(r.points()) / main);
      det.push_back(fmt("B=%lld tuples=%lld rho_tuples=%.6f rho_points=%.6f", (long long)B, (long long)r.tuples(),
                        rho_t.back(), rho_p.back()));
    }
    auto holds = [](const std::vector<double>& rho) {
      for (double v : rho) {
        if (v < 0.3 || v > 3.0) return false;
      }
      return std::fabs(rho.back() - 1.0) <= std::fabs(rho.front() - 1.0);
    };
    const bool t_ok = holds(rho_t);
    const bool p_ok = holds(rho_p);
    det.push_back(fmt("tuples normalization %s, points normalization %s", t_ok ? "holds" : "fails",
                      p_ok ? "holds" : "fails"));
    return t_ok || p_ok;
  });
}

CheckResult check_st_trend() {
  return timed(10, "st-trend", [&](std::vector<std::string>& det) {
    const LeadingConstant lc = leading_constant(1, PrimeSet(), 100000);
    CountRequest req;
    double s_ratio[2];
    double t_ratio[2];
    int i = 0;
    for (i64 B : {1000, 10000}) {
      const Prediction p = predict(static_cast<double>(B), lc);
      s_ratio[i] = static_cast<double>(s_sum(Bound(B), Bound(B * B), req)) / p.s_main;
      t_ratio[i] = static_cast<double>(t_sum(Bound(B), req)) / p.t_main;
      det.push_back(fmt("B=%lld S/s_main=%.6f T/t_main=%.6f", (long long)B, s_ratio[i], t_ratio[i]));
      ++i;
    }
    auto holds = [](const double* r) {
      return r[1] >= 0.3 && r[1] <= 3.0 && std::fabs(r[1] - 1.0) < std::fabs(r[0] - 1.0);
    };
    const bool s_ok = holds(s_ratio);
    const bool t_ok = holds(t_ratio);
    det.push_back(fmt("S trend %s, T trend %s", s_ok ? "holds" : "fails", t_ok ? "holds" : "fails"));
    return s_ok && t_ok;
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"jacobi",         "rstar",          "mpoints",       "routes",
                                                 "st-identity",    "euler-factors",  "specialization",
                                                 "euler-product",  "trend",          "st-trend"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  static const std::map<std::string, std::function<CheckResult()>> table = {
      {"jacobi", [] { return check_jacobi_exactness(); }},
      {"rstar", [] { return check_rstar_witness(); }},
      {"mpoints", [] { return check_mpoint_equivalence(); }},
      {"routes", [] { return check_route_equality(); }},
      {"st-identity", [] { return check_st_identity(); }},
      {"euler-factors", [] { return check_euler_factors(); }},
      {"specialization", [] { return check_specialization(); }},
      {"euler-product", [] { return check_euler_product_stability(); }},
      {"trend", [] { return check_asymptotic_trend(); }},
      {"st-trend", [] { return check_st_trend(); }},
  };
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& n : suite_names()) out.push_back(table.at(n)());
    return out;
  }
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
  return {it->second()};
}

}  // namespace semint
