#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "semint/geometry.hpp"

using namespace semint;

TEST_CASE("point validation") {
  CHECK_NOTHROW(SurfacePoint(1, 1, {1, 0, 0, 0}, 1));
  CHECK_THROWS(SurfacePoint(1, 0, {0, 0, 0, 0}, 1));
  CHECK_THROWS(SurfacePoint(1, 2, {1, 0, 0, 0}, 1));     // 8 != 1
  CHECK_THROWS(SurfacePoint(1, 2, {2, 0, 0, 0}, 2));     // not primitive
  CHECK_THROWS(SurfacePoint(1, 1, {1, 0, 0}, 1));        // wrong length
  CHECK_THROWS(SurfacePoint(0, 1, {}, 1));
  CHECK_NOTHROW(SurfacePoint(2, 1, {1, 0, 0, 0, 0, 0, 0, 0}, 1));
}

TEST_CASE("height") {
  const SurfacePoint p(1, 2, {1, 1, 0, 0}, 4);
  CHECK(height(p) == 4.0);
  CHECK(height_le(p, 4));
  CHECK_FALSE(height_le(p, 3));
  const SurfacePoint q(1, 6, {5, 3, 1, 1}, 6);  // h = 36
  CHECK(height(q) == 6.0);
  CHECK(height_data(q).h == 36);
}

TEST_CASE("semi-integral condition and multiplicities on hand examples") {
  // v_2(z) - v_2(x) = 1
  const SurfacePoint bad(1, 2, {1, 1, 0, 0}, 4);
  CHECK_FALSE(semi_integral_ok(bad, PrimeSet()));
  CHECK(semi_integral_ok(bad, PrimeSet({2})));
  CHECK(intersection_mults(bad, 2) == MultPair{0, 1});
  CHECK_FALSE(m_point_ok(bad, PrimeSet()));
  CHECK(m_point_ok(bad, PrimeSet({2})));

  const SurfacePoint a(1, 2, {1, 0, 0, 0}, 8);
  CHECK(intersection_mults(a, 2) == MultPair{1, 0});
  CHECK(semi_integral_ok(a, PrimeSet()));

  const SurfacePoint b(1, 4, {1, 1, 1, 1}, 16);
  CHECK(intersection_mults(b, 2) == MultPair{0, 2});
  CHECK(intersection_mults(b, 3) == MultPair{0, 0});

  const SurfacePoint neg(1, -2, {1, 1, 0, 0}, -4);
  CHECK(intersection_mults(neg, 2) == MultPair{0, 1});
  CHECK(relevant_primes(neg) == std::vector<i64>{2});
}

TEST_CASE("exhaustive small-height equivalence against naive valuations") {
  long seen = 0;
  for (i64 x = 1; x <= 15; ++x) {
    for (i64 z = 1; z <= 15; ++z) {
      const i64 x3 = x * x * x;
      if (x3 % z) continue;
      const i64 h = x3 / z;
      for (i64 a = 0; a * a <= h; ++a)
        for (i64 b = 0; a * a + b * b <= h; ++b)
          for (i64 c = 0; a * a + b * b + c * c <= h; ++c) {
            const i64 rest = h - a * a - b * b - c * c;
            i64 d = 0;
            while (d * d < rest) ++d;
            if (d * d != rest) continue;
            if (std::gcd(std::gcd(std::gcd(x, z), std::gcd(a, b)), std::gcd(c, d)) != 1) continue;
            const SurfacePoint pt(1, x, {a, b, c, d}, z);
            ++seen;
            for (i64 p : {2, 3, 5, 7, 11, 13}) {
              const MultPair m = intersection_mults(pt, p);
              CHECK(2 * m.n1 + m.n2 == std::max(oracle::vp(p, z) - oracle::vp(p, x), 0));
            }
            for (const std::set<i64>& S : {std::set<i64>{}, std::set<i64>{2}, std::set<i64>{3, 5}}) {
              const PrimeSet ps(std::vector<i64>(S.begin(), S.end()));
              CHECK(semi_integral_ok(pt, ps) == oracle::semi_ok(x, z, S));
              CHECK(m_point_ok(pt, ps) == oracle::semi_ok(x, z, S));
            }
          }
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("json round trip") {
  const SurfacePoint p(1, -2, {1, -1, 0, 0}, -4);
  nlohmann::json j;
  to_json(j, p);
  CHECK(j.dump() == R"({"k":1,"x":-2,"ys":[1,-1,0,0],"z":-4})");
  CHECK(point_from_json(j) == p);
}
