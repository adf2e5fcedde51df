#include "meansense/distance.hpp"

#include <algorithm>

#include "meansense/error.hpp"

namespace meansense {

std::vector<Length> next_gaps(std::span<const Interval> intervals, Length steps) {
  std::vector<Length> out(static_cast<std::size_t>(steps), 0);
  std::size_t k = 0;
  for (Length i = 0; i < steps; ++i) {
    while (k < intervals.size() && intervals[k].last < i + 1) ++k;
    if (k == intervals.size()) break;
    const Length p = std::max(intervals[k].first, i + 1);
    out[i] = p - i;
  }
  return out;
}

DistanceSequence::DistanceSequence(std::vector<Length> gaps, Length depth)
    : gaps_(std::move(gaps)), depth_(depth) {
  if (depth_ == 0) throw ParameterError("comparison depth must be positive");
  for (Length& g : gaps_) {
    if (g > depth_) g = 0;
  }
}

std::vector<double> DistanceSequence::values() const {
  std::vector<double> out(gaps_.size());
  for (std::size_t i = 0; i < gaps_.size(); ++i) out[i] = value(i);
  return out;
}

Length usable_steps(const PointView& x, const PointView& y, Length depth) {
  const Length h = std::min(x.horizon(), y.horizon());
  return h > depth ? h - depth : 0;
}

DistanceSequence distance_sequence(const PointView& x, const PointView& y, Length steps,
                                   Length depth) {
  if (x.prefix.alphabet_size() != y.prefix.alphabet_size()) {
    throw AlphabetMismatch("points use different alphabets");
  }
  if (depth == 0) throw ParameterError("comparison depth must be positive");
  const Length h = std::min(x.horizon(), y.horizon());
  if (steps > h || depth > h - steps) {
    throw HorizonExhausted(std::to_string(steps) + " steps at comparison depth " +
                           std::to_string(depth) + " need horizon " +
                           std::to_string(steps + depth) + ", have " + std::to_string(h));
  }
  const auto diffs = difference_intervals(x.prefix, y.prefix, steps + depth);
  return DistanceSequence(next_gaps(diffs, steps), depth);
}

}  // namespace meansense
