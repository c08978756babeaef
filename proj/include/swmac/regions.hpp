#pragma once

// Achievable-rate regions of the two-user MAC with specially correlated
// sources (common message V0 plus private parts W1, W2). Rates are in bits
// per channel use (base-2 logarithms throughout).

#include <utility>
#include <vector>

#include "swmac/copula.hpp"

namespace swmac {

/// Common-message power P0, per-transmitter caps P1, P2, noise variance N.
class PowerBudget {
 public:
  PowerBudget(double p0, double p1, double p2, double noise);

  double p0() const noexcept { return p0_; }
  double p1() const noexcept { return p1_; }
  double p2() const noexcept { return p2_; }
  double noise() const noexcept { return noise_; }

  /// Private-message powers P1 - P0 and P2 - P0.
  double private1() const noexcept { return p1_ - p0_; }
  double private2() const noexcept { return p2_ - p0_; }

  friend bool operator==(const PowerBudget&, const PowerBudget&) = default;

 private:
  double p0_, p1_, p2_, noise_;
};

struct RatePoint {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Right-hand sides of R1 <= b1, R2 <= b2, R1+R2 <= b12, R0+R1+R2 <= b012.
struct RegionBounds {
  double b1;
  double b2;
  double b12;
  double b012;

  friend bool operator==(const RegionBounds&, const RegionBounds&) = default;
};

struct ScalingFactors {
  double a1;
  double a2;
};

struct RatePair {
  double r1;
  double r2;

  friend bool operator==(const RatePair&, const RatePair&) = default;
};

/// Checked construction: bounds >= 0, b1 <= b12, b2 <= b12, b12 <= b012.
RegionBounds make_region_bounds(double b1, double b2, double b12, double b012);

RegionBounds gaussian_region_bounds(const PowerBudget& budget);

/// Instantaneous region for fixed power gains. The common-message term uses
/// |h1||h2| = sqrt(g1 g2), i.e. coherent combining of V0 at the receiver.
RegionBounds wireless_region_bounds(const PowerBudget& budget, GainPair gains);

/// Closed-set membership; comparisons are exact.
bool contains(const RegionBounds& bounds, const RatePoint& point) noexcept;

/// Corners of {R1 <= b1, R2 <= b2, R1 + R2 <= min(b12, b012 - r0)} in the
/// positive quadrant, counterclockwise from the origin, without duplicates.
/// Every returned vertex satisfies contains() at common rate r0.
/// Throws EmptyRegion when r0 > b012.
std::vector<RatePair> region_vertices(const RegionBounds& bounds, double r0);

/// Amplitudes a_i = sqrt((P_i - P0) / P_i1) so that X_i = V0 + a_i W_i meets
/// E[X_i^2] = P_i with equality.
ScalingFactors scaling_factors(const PowerBudget& budget, double p11, double p21);

}  // namespace swmac
