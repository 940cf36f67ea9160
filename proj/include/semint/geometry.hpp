#pragma once

// Points on x^3 = (y_1^2 + ... + y_{4k}^2) z, their heights, the
// semi-integral condition, and intersection multiplicities with the two
// boundary divisors of the resolved model.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "semint/arith.hpp"

namespace semint {

/// A primitive integer solution with x != 0. The constructor validates the
/// equation, primitivity and the length of ys.
class SurfacePoint {
 public:
  SurfacePoint(int k, i64 x, std::vector<i64> ys, i64 z);

  int k() const { return k_; }
  i64 x() const { return x_; }
  const std::vector<i64>& ys() const { return ys_; }
  i64 z() const { return z_; }
  /// Sum of squares of ys.
  i64 h() const { return h_; }

  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;

 private:
  int k_;
  i64 x_;
  std::vector<i64> ys_;
  i64 z_;
  i64 h_;
};

/// Exact form of H(P) = max{|x|, sqrt(h), |z|}.
struct HeightData {
  i64 max_abs_xz;
  i64 h;
};

HeightData height_data(const SurfacePoint& pt);
/// Floating-point H(P), for display only.
double height(const SurfacePoint& pt);
/// |x| <= B, h <= B^2 and |z| <= B, in integer arithmetic.
bool height_le(const SurfacePoint& pt, i64 bound);

/// v_p(z) - v_p(x) != 1 for every prime p outside S.
bool semi_integral_ok(const SurfacePoint& pt, const PrimeSet& S);

/// Intersection multiplicities with the two boundary divisors at p.
struct MultPair {
  i64 n1;
  i64 n2;

  friend bool operator==(const MultPair&, const MultPair&) = default;
};

MultPair intersection_mults(const SurfacePoint& pt, i64 p);

/// (n1, n2) != (0, 1) at every prime outside S.
bool m_point_ok(const SurfacePoint& pt, const PrimeSet& S);

/// Primes dividing x * z * h, ascending.
std::vector<i64> relevant_primes(const SurfacePoint& pt);

void to_json(nlohmann::json& j, const SurfacePoint& pt);
SurfacePoint point_from_json(const nlohmann::json& j);

}  // namespace semint
