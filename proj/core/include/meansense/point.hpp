#pragma once

#include <string>
#include <string_view>

#include "meansense/word.hpp"

namespace meansense {

enum class Provenance {
  transitive_shift,  // sigma^offset of the transitive point x
  periodic,          // shifted periodic point; offset is the shift
  explicit_limit,    // a limit point given by an explicit formula (z_j, B 0^inf, ...)
  patched_system,    // point of the patched four-symbol system
  explicit_word,     // caller-supplied prefix with no further structure
};

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

/// A point of a subshift known only up to a finite horizon.
struct PointView {
  Word prefix;
  Provenance provenance = Provenance::explicit_word;
  Length offset = 0;
  std::string truncation_note;

  Length horizon() const noexcept { return prefix.size(); }
  /// sigma^k of the point; the horizon shrinks by k.
  PointView shifted(Length k = 1) const;
  bool starts_with(const Word& u) const { return meansense::starts_with(prefix, u); }
};

PointView make_point(Word prefix, Provenance provenance = Provenance::explicit_word,
                     Length offset = 0, std::string note = {});

/// Shift-metric value d = 1/i for first difference i, or 0 with `truncated`
/// set when the prefixes agree on the whole comparison horizon H. In the
/// truncated case the true distance lies in [0, bias_bound] = [0, 1/(H+1)].
struct MetricValue {
  Length first_difference = 0;  // 0 when none was found
  Length compared = 0;          // H
  bool truncated = false;

  double value() const noexcept {
    return first_difference == 0 ? 0.0 : 1.0 / static_cast<double>(first_difference);
  }
  double bias_bound() const noexcept {
    return truncated ? 1.0 / static_cast<double>(compared + 1) : 0.0;
  }
  double upper() const noexcept { return value() + bias_bound(); }
};

MetricValue point_metric(const PointView& x, const PointView& y);

}  // namespace meansense
