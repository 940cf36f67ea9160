#include <doctest.h>

#include "oracles.hpp"
#include "semint/counting.hpp"

using namespace semint;

namespace {

CountRequest request(int k = 1, RSource src = RSource::jacobi_k1, PrimeSet S = {}) {
  CountRequest r;
  r.k = k;
  r.r_source = src;
  r.S = std::move(S);
  return r;
}

}  // namespace

TEST_CASE("Bound") {
  const Bound b(6, 4);
  CHECK(b.num == 3);
  CHECK(b.den == 2);
  CHECK(b.floor() == 1);
  CHECK(Bound(10).divided_by(4) == Bound(5, 2));
  CHECK(Bound(7, 3).to_string() == "7/3");
  CHECK(Bound(7).to_string() == "7");
}

TEST_CASE("indicator") {
  const PrimeSet none;
  CHECK(indicator_1S(4, 1, none) == 1);
  CHECK(indicator_1S(4, 2, none) == 0);   // v_2 = 1
  CHECK(indicator_1S(4, 8, none) == 1);   // v_2 = -1
  CHECK(indicator_1S(6, 1, PrimeSet({2, 3})) == 1);
  CHECK(indicator_1S(6, 1, PrimeSet({2})) == 0);
}

TEST_CASE("small values") {
  const CountRequest r = request();
  CHECK(n_star(Bound(1), r) == 0);
  CHECK(n_star(Bound(2), r) == 16);
  CHECK(s_sum(Bound(1), Bound(1), r) == 1);
  CHECK(s_sum(Bound(1, 2), Bound(10), r) == 0);
  // n = 1: 1. n = 2: d = 1, 4, 8 pass (v_2(4/d) = 2, 0, -1), d = 2 fails; 1 + 3 + 3.
  CHECK(s_sum(Bound(2), Bound(8), r) == 8);
  // n = 2, d <= 4: d = 1 and d = 4.
  CHECK(t_sum(Bound(2), r) == 4);
  CHECK(s_sum(Bound(2), Bound(4), r) == 5);
}

TEST_CASE("N* and N against direct tuple enumeration") {
  for (const std::set<i64>& S : {std::set<i64>{}, std::set<i64>{2}, std::set<i64>{3}}) {
    const PrimeSet ps(std::vector<i64>(S.begin(), S.end()));
    for (i64 B = 1; B <= 14; ++B) {
      const CountRequest r = request(1, RSource::jacobi_k1, ps);
      CHECK(n_star(Bound(B), r) == oracle::count_tuples(B, 1, S, false));
      CHECK(n_mobius(Bound(B), r) == oracle::count_tuples(B, 1, S, true));
    }
  }
}

TEST_CASE("r sources agree where the model is exact") {
  for (i64 B : {3, 7, 12, 20}) {
    const i64 j = n_star(Bound(B), request(1, RSource::jacobi_k1));
    CHECK(n_star(Bound(B), request(1, RSource::exact_bruteforce)) == j);
    CHECK(8 * n_star(Bound(B), request(1, RSource::rstar_model)) == j);
  }
  for (i64 B : {3, 5, 8}) {
    CHECK(n_star(Bound(B), request(2, RSource::exact_bruteforce)) ==
          16 * n_star(Bound(B), request(2, RSource::rstar_model)));
  }
}

TEST_CASE("oracle route at k = 2") {
  for (i64 B : {2, 4, 6}) {
    CHECK(n_oracle(B, 2, PrimeSet()) == n_mobius(Bound(B), request(2, RSource::exact_bruteforce)));
  }
}

TEST_CASE("16 (S - T) = N* at k = 1") {
  const CountRequest r = request();
  for (i64 B : {2, 10, 37, 100}) {
    CHECK(16 * (s_sum(Bound(B), Bound(B * B), r) - t_sum(Bound(B), r)) == n_star(Bound(B), r));
  }
}

TEST_CASE("report invariants and thread independence") {
  CountRequest r = request();
  r.bound = Bound(300);
  const CountReport one = run_count(r, {.oracle = false, .auxiliary_sums = true});
  CHECK(one.recomputed_mobius_sum() == one.n_mobius);
  CHECK(one.points() * 2 == one.tuples());
  r.threads = 3;
  const CountReport three = run_count(r, {.oracle = false, .auxiliary_sums = true});
  CHECK(three.n_mobius == one.n_mobius);
  CHECK(three.n_star_values == one.n_star_values);
  CHECK(three.s_value == one.s_value);
  CHECK(three.t_value == one.t_value);
}

TEST_CASE("rational bounds") {
  const CountRequest r = request();
  for (auto [num, den] : std::vector<std::pair<i64, i64>>{{21, 2}, {31, 3}, {15, 4}, {7, 7}}) {
    CHECK(n_star(Bound(num, den), r) == oracle::count_tuples(num, den, {}, false));
    CHECK(n_mobius(Bound(num, den), r) == oracle::count_tuples(num, den, {}, true));
  }
}

TEST_CASE("validation and capacity") {
  CountRequest r = request(2, RSource::jacobi_k1);
  CHECK_THROWS_AS(r.validate(), std::domain_error);
  CHECK_THROWS_AS(n_oracle(oracle_bound_limit(1) + 1, 1, PrimeSet()), CapacityError);
  CountRequest big = request(1, RSource::exact_bruteforce);
  big.rep_budget = 1000;
  CHECK_THROWS_AS(n_star(Bound(100), big), CapacityError);
  CHECK(rsource_from_string("jacobi") == RSource::jacobi_k1);
  CHECK_THROWS(rsource_from_string("nope"));
}
