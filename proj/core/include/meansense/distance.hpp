#pragma once

#include <span>
#include <vector>

#include "meansense/point.hpp"

namespace meansense {

inline constexpr Length kDefaultComparisonDepth = 64;

/// For each step i in [0, steps): p - i where p is the first position >= i+1
/// inside one of the sorted, disjoint `intervals`; 0 when no such p exists.
std::vector<Length> next_gaps(std::span<const Interval> intervals, Length steps);

/// Per-step shift-metric distances d(sigma^i x, sigma^i y), i < steps, each
/// found by a first-difference search of fixed depth D. A step whose first
/// difference lies beyond D counts as 0 with correction 1/(D+1).
class DistanceSequence {
 public:
  DistanceSequence() = default;
  DistanceSequence(std::vector<Length> gaps, Length depth);

  Length size() const noexcept { return gaps_.size(); }
  Length depth() const noexcept { return depth_; }
  /// First-difference offset at step i, 0 when truncated.
  Length gap(Length i) const { return gaps_[i]; }
  bool truncated(Length i) const { return gaps_[i] == 0; }
  double value(Length i) const {
    return gaps_[i] == 0 ? 0.0 : 1.0 / static_cast<double>(gaps_[i]);
  }
  double correction(Length i) const {
    return gaps_[i] == 0 ? 1.0 / static_cast<double>(depth_ + 1) : 0.0;
  }
  std::vector<double> values() const;

 private:
  std::vector<Length> gaps_;
  Length depth_ = kDefaultComparisonDepth;
};

/// Requires steps + depth <= min(horizon(x), horizon(y)); throws
/// HorizonExhausted otherwise. O(runs + steps).
DistanceSequence distance_sequence(const PointView& x, const PointView& y, Length steps,
                                   Length depth = kDefaultComparisonDepth);

/// Largest number of steps a pair supports at comparison depth `depth`.
Length usable_steps(const PointView& x, const PointView& y, Length depth);

}  // namespace meansense
