#include "swmac/regions.hpp"

#include <algorithm>
#include <cmath>

#include "swmac/errors.hpp"

namespace swmac {

namespace {

double half_log2(double snr) { return 0.5 * std::log2(1.0 + snr); }

// Pulls a vertex inward by single ulps until the exact membership test
// accepts it; only rounding in s = b012 - r0 or s - r1 can require this.
RatePair settle_inside(const RegionBounds& bounds, double r0, RatePair v) {
  while (!contains(bounds, {r0, v.r1, v.r2})) {
    if (v.r2 >= v.r1 && v.r2 > 0.0) {
      v.r2 = std::nextafter(v.r2, 0.0);
    } else if (v.r1 > 0.0) {
      v.r1 = std::nextafter(v.r1, 0.0);
    } else {
      break;
    }
  }
  return v;
}

}  // namespace

PowerBudget::PowerBudget(double p0, double p1, double p2, double noise) : p0_(p0), p1_(p1), p2_(p2), noise_(noise) {
  if (!(p1 > 0.0) || !(p2 > 0.0) || !std::isfinite(p1) || !std::isfinite(p2)) {
    throw InvalidArgument("transmit powers P1, P2 must be positive");
  }
  if (!(noise > 0.0) || !std::isfinite(noise)) throw InvalidArgument("noise variance must be positive");
  if (!(p0 >= 0.0) || p0 > std::min(p1, p2)) throw InvalidArgument("common power must satisfy 0 <= P0 <= min(P1, P2)");
}

RegionBounds make_region_bounds(double b1, double b2, double b12, double b012) {
  if (!(b1 >= 0.0 && b2 >= 0.0 && b12 >= 0.0 && b012 >= 0.0)) throw InvalidArgument("region bounds must be >= 0");
  if (b1 > b12 || b2 > b12 || b12 > b012) throw InvalidArgument("region bounds must satisfy b1, b2 <= b12 <= b012");
  return {b1, b2, b12, b012};
}

RegionBounds gaussian_region_bounds(const PowerBudget& budget) {
  return wireless_region_bounds(budget, {1.0, 1.0});
}

RegionBounds wireless_region_bounds(const PowerBudget& budget, GainPair gains) {
  if (!(gains.g1 >= 0.0) || !(gains.g2 >= 0.0)) throw InvalidArgument("power gains must be nonnegative");
  const double n = budget.noise();
  const double rx1 = gains.g1 * budget.private1();
  const double rx2 = gains.g2 * budget.private2();
  const double coherent = gains.g1 * budget.p1() + gains.g2 * budget.p2() +
                          2.0 * std::sqrt(gains.g1 * gains.g2) * budget.p0();
  // P0 = 0 makes the last argument (g1 P1 + g2 P2) / N equal to the sum-rate
  // one term for term, so b12 == b012 holds bit-exactly.
  return {half_log2(rx1 / n), half_log2(rx2 / n), half_log2((rx1 + rx2) / n), half_log2(coherent / n)};
}

bool contains(const RegionBounds& bounds, const RatePoint& point) noexcept {
  return point.r1 <= bounds.b1 && point.r2 <= bounds.b2 && point.r1 + point.r2 <= bounds.b12 &&
         point.r0 + point.r1 + point.r2 <= bounds.b012;
}

std::vector<RatePair> region_vertices(const RegionBounds& bounds, double r0) {
  if (r0 > bounds.b012) throw EmptyRegion("common rate exceeds b012; the region is empty");
  const double s = std::max(0.0, std::min(bounds.b12, bounds.b012 - r0));
  const double x = std::min(bounds.b1, s);
  const double y = std::min(bounds.b2, s);

  std::vector<RatePair> out;
  auto push = [&](RatePair v) {
    v = settle_inside(bounds, r0, v);
    if (out.empty() || !(out.back() == v)) out.push_back(v);
  };
  push({0.0, 0.0});
  push({x, 0.0});
  // Along R1 = x, the sum constraint caps R2 at s - x.
  push({x, std::min(y, s - x)});
  // Along R2 = y, the sum constraint caps R1 at s - y.
  push({std::min(x, s - y), y});
  push({0.0, y});
  // A closed walk may come back to the origin.
  while (out.size() > 1 && out.back() == out.front()) out.pop_back();
  return out;
}

ScalingFactors scaling_factors(const PowerBudget& budget, double p11, double p21) {
  if (!(p11 > 0.0) || !(p21 > 0.0)) throw InvalidArgument("private-message powers must be positive");
  return {std::sqrt(budget.private1() / p11), std::sqrt(budget.private2() / p21)};
}

}  // namespace swmac
