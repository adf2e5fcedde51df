#pragma once

#include <vector>

#include "meansense/word.hpp"

namespace meansense {

/// A finite subset of [0, horizon), kept sorted and deduplicated.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::vector<Length> members, Length horizon);

  const std::vector<Length>& members() const noexcept { return members_; }
  Length horizon() const noexcept { return horizon_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Length i) const;

  /// #{F ∩ [0, n)}.
  Length count_below(Length n) const;

  /// 0/1 word of length `horizon` with a 1 at position i+1 for every member i.
  Word indicator() const;
  static IndexSet from_indicator(const Word& w, Symbol designated = 1);

  bool includes(const IndexSet& other) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<Length> members_;
  Length horizon_ = 0;
};

}  // namespace meansense
