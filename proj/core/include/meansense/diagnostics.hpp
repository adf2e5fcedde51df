#pragma once

#include <functional>
#include <span>
#include <vector>

#include "meansense/distance.hpp"
#include "meansense/index_set.hpp"
#include "meansense/language.hpp"
#include "meansense/report.hpp"

namespace meansense {

/// E_y = {i : y_{i+1} = 1} over the known prefix.
IndexSet indicator_set_E(const PointView& y);

struct DensityPoint {
  Length length = 0;  // n for prefix densities, L for windows
  Length count = 0;
  Length witness = 0;  // 0-based start of the first maximising window
  double value() const noexcept {
    return length == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(length);
  }
};

/// #{F ∩ [0, n)} / n for each n.
std::vector<DensityPoint> prefix_densities(const IndexSet& f, std::span<const Length> lengths);
/// max_M #{F ∩ [M, M+L)} / L over windows inside [0, horizon), for each L.
std::vector<DensityPoint> window_densities(const IndexSet& f, std::span<const Length> windows);

/// Headline: max over the requested prefixes (a proxy for the limsup).
Report upper_density(const IndexSet& f, std::span<const Length> prefix_lengths);
/// Headline: the value at the largest requested window.
Report upper_banach_density(const IndexSet& f, std::span<const Length> window_lengths);

struct AverageReport {
  double value = 0.0;
  Length window_begin = 0;  // [begin, end) of the steps that produced `value`
  Length window_end = 0;
  double truncation_correction = 0.0;
  Length samples = 0;
  double upper() const noexcept { return value + truncation_correction; }
};

/// (1/n) sum_{i<n} d(sigma^i x, sigma^i y).
AverageReport cesaro_avg_distance(const PointView& x, const PointView& y, Length n,
                                  Length depth = kDefaultComparisonDepth);
AverageReport cesaro_average(const DistanceSequence& seq, Length n);

/// Exact sup over length-L windows inside the usable steps. The correction
/// is the largest windowed correction, so value + correction bounds the sup.
AverageReport banach_avg_distance(const PointView& x, const PointView& y, Length window,
                                  Length depth = kDefaultComparisonDepth);
AverageReport banach_average(const DistanceSequence& seq, Length window);

struct DiamSequence {
  std::vector<Length> gaps;  // first non-constant column offset, 0 if none seen
  bool degenerate = false;   // fewer than two members
  Length size() const noexcept { return gaps.size(); }
  double value(Length i) const {
    return gaps[i] == 0 ? 0.0 : 1.0 / static_cast<double>(gaps[i]);
  }
  std::vector<double> values() const;
};

/// Lower bound on diam(sigma^i U), i < steps, from the sampled members. In
/// the shift metric the max pairwise distance is 1/(c - i), c the first
/// column after i where the members do not all agree. O(members * runs + steps).
DiamSequence diam_sequence(std::span<const PointView> members, Length steps);

/// Diameters along the orbit of an arbitrary step map (pairwise, exact on
/// the supplied members).
DiamSequence orbit_diam_sequence(std::vector<PointView> members, Length steps,
                                 const std::function<PointView(const PointView&)>& step);

IndexSet sensitivity_times(const DiamSequence& diam, double delta);
IndexSet sensitivity_times(std::span<const PointView> members, double delta, Length steps);

AverageReport diam_mean_avg(std::span<const PointView> members, Length steps);

/// Both mean/density implications on a finite sequence in [0, bound]:
///  (i)  max prefix average <= delta  =>  prefix density of {a_i >= sqrt(delta)} <= sqrt(delta)
///  (ii) prefix density of {a_i >= delta} <= delta  =>  max prefix average <= (bound+1) delta
/// Throws InputError on out-of-range terms, ParameterError unless delta > 0.
Report mean_to_density_check(std::span<const double> a, double delta, double bound);

enum class AverageMode { cesaro, banach };

struct ClassifyOptions {
  double epsilon = 0.1;
  Length steps = 1000;  // n for cesaro, L for banach
  AverageMode mode = AverageMode::cesaro;
  std::size_t sample_budget = 100;
  std::vector<Length> depths;  // cylinder depths to try; default powers of two
  Length comparison_depth = kDefaultComparisonDepth;
};

/// Empirical mean-equicontinuity classification of p: tries cylinder depths
/// deepest first and stops at the first depth whose sampled co-members all
/// stay within epsilon (value + correction).
Report classify_point(const LanguageApprox& la, const PointView& p, const ClassifyOptions& opt);

}  // namespace meansense
