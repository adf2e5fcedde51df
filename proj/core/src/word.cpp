#include "meansense/word.hpp"

#include <algorithm>

#include "meansense/checked.hpp"
#include "meansense/error.hpp"

namespace meansense {

Word::Word(unsigned alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size != 2 && alphabet_size != 4) {
    throw ParameterError("alphabet size must be 2 or 4, got " + std::to_string(alphabet_size));
  }
}

Word Word::from_symbols(std::string_view symbols, unsigned alphabet_size) {
  Word w(alphabet_size);
  for (char c : symbols) {
    if (c < '0' || c > '9') throw ParseError(std::string("not a symbol: '") + c + "'");
    w.append(static_cast<Symbol>(c - '0'), 1);
  }
  return w;
}

Word Word::from_runs(std::span<const Run> runs, unsigned alphabet_size) {
  Word w(alphabet_size);
  w.reserve_runs(runs.size());
  for (const Run& r : runs) w.append(r.symbol, r.length);
  return w;
}

Word Word::repeat(Symbol symbol, Length count, unsigned alphabet_size) {
  Word w(alphabet_size);
  w.append(symbol, count);
  return w;
}

std::size_t Word::run_at(Length pos) const {
  if (pos == 0 || pos > size()) {
    throw RangeError("position " + std::to_string(pos) + " outside [1, " +
                     std::to_string(size()) + "]");
  }
  auto it = std::lower_bound(ends_.begin(), ends_.end(), pos);
  return static_cast<std::size_t>(it - ends_.begin());
}

Symbol Word::at(Length pos) const { return runs_[run_at(pos)].symbol; }

Word& Word::append(Symbol symbol, Length count) {
  if (symbol >= alphabet_size_) {
    throw ParameterError("symbol " + std::to_string(symbol) + " outside alphabet of size " +
                         std::to_string(alphabet_size_));
  }
  if (count == 0) return *this;
  auto total = checked_add(size(), count);
  if (!total) throw OverflowError("word length exceeds 64 bits", 0);
  if (!runs_.empty() && runs_.back().symbol == symbol) {
    runs_.back().length += count;
    ends_.back() = *total;
  } else {
    runs_.push_back({symbol, count});
    ends_.push_back(*total);
  }
  return *this;
}

Word& Word::append(const Word& other) {
  if (other.alphabet_size_ != alphabet_size_) {
    throw AlphabetMismatch("cannot join words over alphabets of size " +
                           std::to_string(alphabet_size_) + " and " +
                           std::to_string(other.alphabet_size_));
  }
  reserve_runs(runs_.size() + other.runs_.size());
  for (const Run& r : other.runs_) append(r.symbol, r.length);
  return *this;
}

Word& Word::append_slice(const Word& other, Length first, Length count) {
  if (other.alphabet_size_ != alphabet_size_) {
    throw AlphabetMismatch("cannot join words over different alphabets");
  }
  if (count == 0) return *this;
  if (first == 0 || first + count - 1 > other.size() || first + count - 1 < first) {
    throw RangeError("slice [" + std::to_string(first) + ", +" + std::to_string(count) +
                     ") outside word of length " + std::to_string(other.size()));
  }
  std::size_t r = other.run_at(first);
  Length pos = first;
  Length remaining = count;
  while (remaining > 0) {
    Length avail = other.ends_[r] - pos + 1;
    Length take = std::min(avail, remaining);
    append(other.runs_[r].symbol, take);
    remaining -= take;
    pos += take;
    ++r;
  }
  return *this;
}

void Word::reserve_runs(std::size_t n) {
  runs_.reserve(n);
  ends_.reserve(n);
}

std::string Word::symbols() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const Run& r : runs_) out.append(static_cast<std::size_t>(r.length), char('0' + r.symbol));
  return out;
}

std::vector<Symbol> Word::expand() const {
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const Run& r : runs_) out.insert(out.end(), static_cast<std::size_t>(r.length), r.symbol);
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  Length limit = std::min(a.size(), b.size());
  Length lcp = common_prefix_length(a, 0, b, 0, limit);
  if (lcp < limit) return a.at(lcp + 1) <=> b.at(lcp + 1);
  return a.size() <=> b.size();
}

Word concat(std::span<const Word> parts) {
  if (parts.empty()) return Word();
  Word out(parts.front().alphabet_size());
  std::size_t runs = 0;
  for (const Word& p : parts) runs += p.run_count();
  out.reserve_runs(runs);
  for (const Word& p : parts) out.append(p);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word power(const Word& w, Length m) {
  Word out(w.alphabet_size());
  if (w.empty() || m == 0) return out;
  if (w.run_count() == 1) {
    auto len = checked_mul(w.size(), m);
    if (!len) throw OverflowError("power length exceeds 64 bits", 0);
    return Word::repeat(w.front(), *len, w.alphabet_size());
  }
  if (!checked_mul(w.size(), m)) throw OverflowError("power length exceeds 64 bits", 0);
  out.reserve_runs(static_cast<std::size_t>(std::min<Length>(m * w.run_count(), 1u << 24)));
  for (Length i = 0; i < m; ++i) out.append(w);
  return out;
}

Word subword_at(const Word& w, Length t, Length len) {
  Word out(w.alphabet_size());
  if (t == 0 || (len > 0 && (t + len - 1 > w.size() || t + len - 1 < t)) ||
      (len == 0 && t > w.size() + 1)) {
    throw RangeError("subword [" + std::to_string(t) + ", " + std::to_string(t + len - 1) +
                     "] outside word of length " + std::to_string(w.size()));
  }
  out.append_slice(w, t, len);
  return out;
}

bool starts_with(const Word& w, const Word& prefix) {
  if (prefix.size() > w.size()) return false;
  return common_prefix_length(w, 0, prefix, 0, prefix.size()) == prefix.size();
}

bool ends_with(const Word& w, const Word& suffix) {
  if (suffix.size() > w.size()) return false;
  if (suffix.empty()) return true;
  Length off = w.size() - suffix.size();
  return common_prefix_length(w, off, suffix, 0, suffix.size()) == suffix.size();
}

Length common_prefix_length(const Word& a, Length a_offset, const Word& b, Length b_offset,
                            Length limit) {
  if (a_offset >= a.size() || b_offset >= b.size()) return 0;
  limit = std::min({limit, a.size() - a_offset, b.size() - b_offset});
  if (limit == 0) return 0;
  std::size_t ra = a.run_at(a_offset + 1);
  std::size_t rb = b.run_at(b_offset + 1);
  Length pa = a_offset + 1;
  Length pb = b_offset + 1;
  Length matched = 0;
  auto ra_runs = a.runs();
  auto rb_runs = b.runs();
  while (matched < limit) {
    if (ra_runs[ra].symbol != rb_runs[rb].symbol) return matched;
    Length step = std::min(a.run_end(ra) - pa + 1, b.run_end(rb) - pb + 1);
    step = std::min(step, limit - matched);
    matched += step;
    pa += step;
    pb += step;
    if (pa > a.run_end(ra)) ++ra;
    if (pb > b.run_end(rb)) ++rb;
  }
  return matched;
}

std::vector<Interval> difference_intervals(const Word& a, const Word& b, Length horizon) {
  std::vector<Interval> out;
  horizon = std::min({horizon, a.size(), b.size()});
  if (horizon == 0) return out;
  auto ar = a.runs();
  auto br = b.runs();
  std::size_t ia = 0, ib = 0;
  Length pos = 1;
  while (pos <= horizon) {
    Length seg_end = std::min({a.run_end(ia), b.run_end(ib), horizon});
    if (ar[ia].symbol != br[ib].symbol) {
      if (!out.empty() && out.back().last + 1 == pos) {
        out.back().last = seg_end;
      } else {
        out.push_back({pos, seg_end});
      }
    }
    pos = seg_end + 1;
    if (pos > a.run_end(ia)) ++ia;
    if (pos > b.run_end(ib)) ++ib;
  }
  return out;
}

std::vector<Interval> find_occurrences(const Word& text, const Word& pattern) {
  if (pattern.empty()) throw ParameterError("empty pattern");
  if (pattern.alphabet_size() != text.alphabet_size()) {
    throw AlphabetMismatch("pattern and text use different alphabets");
  }
  std::vector<Interval> out;
  auto tr = text.runs();
  auto pr = pattern.runs();
  const std::size_t k = pr.size();
  if (k == 1) {
    for (std::size_t r = 0; r < tr.size(); ++r) {
      if (tr[r].symbol == pr[0].symbol && tr[r].length >= pr[0].length) {
        out.push_back({text.run_start(r), text.run_end(r) - pr[0].length + 1});
      }
    }
    return out;
  }
  if (tr.size() < k) return out;
  for (std::size_t r = 0; r + k <= tr.size(); ++r) {
    if (tr[r].symbol != pr[0].symbol || tr[r].length < pr[0].length) continue;
    bool ok = true;
    for (std::size_t q = 1; q + 1 < k && ok; ++q) ok = tr[r + q] == pr[q];
    if (!ok) continue;
    const Run& last = tr[r + k - 1];
    if (last.symbol != pr[k - 1].symbol || last.length < pr[k - 1].length) continue;
    Length start = text.run_end(r) - pr[0].length + 1;
    out.push_back({start, start});
  }
  return out;
}

Length occurrence_total(std::span<const Interval> occurrences) {
  Length total = 0;
  for (const Interval& iv : occurrences) total += iv.size();
  return total;
}

}  // namespace meansense
