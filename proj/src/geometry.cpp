#include "semint/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace semint {

namespace {

i64 abs64(i64 v) {
  if (v == INT64_MIN) throw CapacityError("coordinate out of range");
  return v < 0 ? -v : v;
}

void append_primes(std::vector<i64>& out, i64 v) {
  if (v == 0) return;
  const Factorization f = factorize(abs64(v));
  for (const auto& pp : f.factors()) out.push_back(pp.prime);
}

}  // namespace

SurfacePoint::SurfacePoint(int k, i64 x, std::vector<i64> ys, i64 z)
    : k_(k), x_(x), ys_(std::move(ys)), z_(z), h_(0) {
  if (k_ < 1) throw std::domain_error("SurfacePoint: k must be positive");
  if (ys_.size() != static_cast<std::size_t>(4 * k_)) {
    throw std::domain_error("SurfacePoint: expected 4k y-coordinates");
  }
  if (x_ == 0) throw std::domain_error("SurfacePoint: x must be nonzero");
  i128 h = 0;
  for (i64 y : ys_) h += static_cast<i128>(y) * y;
  if (h > INT64_MAX) throw CapacityError("SurfacePoint: sum of squares overflows");
  h_ = static_cast<i64>(h);
  const i128 x3 = static_cast<i128>(x_) * x_ * x_;
  if (x3 != static_cast<i128>(h_) * z_) throw std::domain_error("SurfacePoint: x^3 != h z");
  i64 g = abs64(x_);
  for (i64 y : ys_) g = std::gcd(g, abs64(y));
  g = std::gcd(g, abs64(z_));
  if (g != 1) throw std::domain_error("SurfacePoint: coordinates are not coprime");
}

HeightData height_data(const SurfacePoint& pt) {
  return {std::max(abs64(pt.x()), abs64(pt.z())), pt.h()};
}

double height(const SurfacePoint& pt) {
  const auto hd = height_data(pt);
  return std::max(static_cast<double>(hd.max_abs_xz), std::sqrt(static_cast<double>(hd.h)));
}

bool height_le(const SurfacePoint& pt, i64 bound) {
  const auto hd = height_data(pt);
  return hd.max_abs_xz <= bound && static_cast<i128>(hd.h) <= static_cast<i128>(bound) * bound;
}

bool semi_integral_ok(const SurfacePoint& pt, const PrimeSet& S) {
  // Only primes dividing x z can give a nonzero difference.
  std::vector<i64> primes;
  append_primes(primes, pt.x());
  append_primes(primes, pt.z());
  for (i64 p : primes) {
    if (S.contains(p)) continue;
    if (vp_rational(p, pt.z(), pt.x()) == 1) return false;
  }
  return true;
}

MultPair intersection_mults(const SurfacePoint& pt, i64 p) {
  const i64 vx = vp(p, pt.x());
  const i64 vh = vp(p, pt.h());
  const i64 vz = vp(p, pt.z());
  const i64 a = std::min({vx, vh, vz});
  if (vz <= 0) return {0, 0};
  MultPair out{0, 0};
  if (a == vh) out.n1 = vx - vh;
  if (a == vx) {
    out.n2 = vz - vx;
    if (a == vh && vh != out.n2) {
      throw std::logic_error("intersection_mults: overlapping branches disagree");
    }
  } else if (a == vh) {
    out.n2 = vh;
  }
  return out;
}

std::vector<i64> relevant_primes(const SurfacePoint& pt) {
  std::vector<i64> primes;
  append_primes(primes, pt.x());
  append_primes(primes, pt.z());
  append_primes(primes, pt.h());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

bool m_point_ok(const SurfacePoint& pt, const PrimeSet& S) {
  for (i64 p : relevant_primes(pt)) {
    if (S.contains(p)) continue;
    if (intersection_mults(pt, p) == MultPair{0, 1}) return false;
  }
  return true;
}

void to_json(nlohmann::json& j, const SurfacePoint& pt) {
  j = nlohmann::json{{"k", pt.k()}, {"x", pt.x()}, {"ys", pt.ys()}, {"z", pt.z()}};
}

SurfacePoint point_from_json(const nlohmann::json& j) {
  return SurfacePoint(j.at("k").get<int>(), j.at("x").get<i64>(), j.at("ys").get<std::vector<i64>>(),
                      j.at("z").get<i64>());
}

}  // namespace semint
