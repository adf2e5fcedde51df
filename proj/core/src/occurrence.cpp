#include "meansense/occurrence.hpp"

#include <algorithm>

#include "meansense/error.hpp"

namespace meansense {

OccurrenceIndex::OccurrenceIndex(Word word, Symbol designated)
    : word_(std::move(word)), designated_(designated) {
  cumulative_.reserve(word_.run_count());
  Length acc = 0;
  for (const Run& r : word_.runs()) {
    if (r.symbol == designated_) acc += r.length;
    cumulative_.push_back(acc);
  }
}

Length OccurrenceIndex::count_prefix(Length p) const {
  if (p == 0) return 0;
  if (p > word_.size()) throw RangeError("prefix length beyond word");
  std::size_t r = word_.run_at(p);
  Length before = r == 0 ? 0 : cumulative_[r - 1];
  if (word_.runs()[r].symbol != designated_) return before;
  return before + (p - word_.run_start(r) + 1);
}

Length OccurrenceIndex::count(Length i, Length j) const {
  if (i == 0 || i > j || j > word_.size()) {
    throw RangeError("range [" + std::to_string(i) + ", " + std::to_string(j) +
                     "] invalid for word of length " + std::to_string(word_.size()));
  }
  return count_prefix(j) - count_prefix(i - 1);
}

namespace {

// Evaluates count_prefix at non-decreasing positions in amortised O(1).
class PrefixCursor {
 public:
  PrefixCursor(const Word& w, const std::vector<Length>& cumulative, Symbol designated)
      : w_(w), cumulative_(cumulative), designated_(designated) {}

  Length at(Length p) {
    if (p == 0) return 0;
    while (w_.run_end(r_) < p) ++r_;
    Length before = r_ == 0 ? 0 : cumulative_[r_ - 1];
    if (w_.runs()[r_].symbol != designated_) return before;
    return before + (p - w_.run_start(r_) + 1);
  }

 private:
  const Word& w_;
  const std::vector<Length>& cumulative_;
  Symbol designated_;
  std::size_t r_ = 0;
};

}  // namespace

WindowMax OccurrenceIndex::max_window(Length window) const {
  const Length n = word_.size();
  if (window == 0 || window > n) {
    throw ParameterError("window length " + std::to_string(window) + " outside [1, " +
                         std::to_string(n) + "]");
  }
  // f(s) = C(s+L-1) - C(s-1) is piecewise linear in s with kinks where s is a
  // run start or s+L-1 is a run end, so the maximum (and its smallest
  // maximiser) lies on one of those candidates or on the last start.
  const Length last_start = n - window + 1;
  const std::size_t runs = word_.run_count();
  PrefixCursor lo(word_, cumulative_, designated_);
  PrefixCursor hi(word_, cumulative_, designated_);
  WindowMax best{0, 1};
  bool have = false;
  std::size_t a = 0;  // run starts
  std::size_t b = 0;  // run ends shifted back by L-1
  while (b < runs && word_.run_end(b) < window) ++b;
  Length prev = 0;
  auto consider = [&](Length s) {
    if (s < 1 || s > last_start || (have && s <= prev)) return;
    Length c = hi.at(s + window - 1) - lo.at(s - 1);
    if (!have || c > best.max_count) best = {c, s};
    have = true;
    prev = s;
  };
  while (a < runs || b < runs) {
    Length sa = a < runs ? word_.run_start(a) : ~Length{0};
    Length sb = b < runs ? word_.run_end(b) - window + 1 : ~Length{0};
    if (sa <= sb) {
      consider(sa);
      ++a;
    } else {
      consider(sb);
      ++b;
    }
    if ((a < runs && word_.run_start(a) > last_start) &&
        (b >= runs || word_.run_end(b) - window + 1 > last_start)) {
      break;
    }
  }
  consider(last_start);
  return best;
}

Length occurrences_in_range(const OccurrenceIndex& idx, Length i, Length j) {
  return idx.count(i, j);
}

WindowMax max_window_count(const OccurrenceIndex& idx, Length window) {
  return idx.max_window(window);
}

Length count_ones(const Word& w) {
  Length n = 0;
  for (const Run& r : w.runs()) {
    if (r.symbol == 1) n += r.length;
  }
  return n;
}

}  // namespace meansense
