#include "meansense/index_set.hpp"

#include <algorithm>

#include "meansense/error.hpp"

namespace meansense {

IndexSet::IndexSet(std::vector<Length> members, Length horizon)
    : members_(std::move(members)), horizon_(horizon) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= horizon_) {
    throw RangeError("index " + std::to_string(members_.back()) + " outside [0, " +
                     std::to_string(horizon_) + ")");
  }
}

bool IndexSet::contains(Length i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

Length IndexSet::count_below(Length n) const {
  return static_cast<Length>(std::lower_bound(members_.begin(), members_.end(), n) -
                             members_.begin());
}

Word IndexSet::indicator() const {
  Word w(2);
  Length next = 0;
  for (Length i : members_) {
    w.append(0, i - next);
    w.append(1, 1);
    next = i + 1;
  }
  w.append(0, horizon_ - next);
  return w;
}

IndexSet IndexSet::from_indicator(const Word& w, Symbol designated) {
  std::vector<Length> members;
  for (std::size_t r = 0; r < w.run_count(); ++r) {
    if (w.runs()[r].symbol != designated) continue;
    for (Length p = w.run_start(r); p <= w.run_end(r); ++p) members.push_back(p - 1);
  }
  return IndexSet(std::move(members), w.size());
}

bool IndexSet::includes(const IndexSet& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

}  // namespace meansense
