#pragma once

#include <vector>

#include "meansense/word.hpp"

namespace meansense {

struct WindowMax {
  Length max_count = 0;
  Length witness_position = 1;  // 1-based start of the first maximising window
};

/// Per-run cumulative counts of one designated symbol, answering range
/// counts in O(log R) and fixed-length window maxima in O(R).
class OccurrenceIndex {
 public:
  explicit OccurrenceIndex(Word word, Symbol designated = 1);

  const Word& word() const noexcept { return word_; }
  Symbol designated() const noexcept { return designated_; }
  Length total() const noexcept { return cumulative_.empty() ? 0 : cumulative_.back(); }

  /// Occurrences among positions [1, p]; p may be 0.
  Length count_prefix(Length p) const;
  /// Occurrences among positions [i, j], 1 <= i <= j <= |w|.
  Length count(Length i, Length j) const;
  WindowMax max_window(Length window) const;

 private:
  Word word_;
  Symbol designated_;
  std::vector<Length> cumulative_;  // occurrences in runs [0, r]
};

Length occurrences_in_range(const OccurrenceIndex& idx, Length i, Length j);
WindowMax max_window_count(const OccurrenceIndex& idx, Length window);

/// Count of symbol 1 in the whole word.
Length count_ones(const Word& w);

}  // namespace meansense
