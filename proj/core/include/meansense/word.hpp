#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meansense {

using Length = std::uint64_t;
using Symbol = std::uint8_t;

struct Run {
  Symbol symbol = 0;
  Length length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Closed interval of 1-based positions.
struct Interval {
  Length first = 0;
  Length last = 0;

  Length size() const noexcept { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite word over {0, ..., alphabet_size-1}, stored run-length encoded.
///
/// The run list is always canonical: run lengths are positive and adjacent
/// runs carry distinct symbols, so two words are equal iff their run lists
/// are. Positions are 1-based in every public accessor. Lengths are 64-bit,
/// which lets the construction words grow past 2^31 symbols while the run
/// count stays small.
class Word {
 public:
  Word() : Word(2) {}
  explicit Word(unsigned alphabet_size);

  /// Parses a string of digit characters, e.g. "10110".
  static Word from_symbols(std::string_view symbols, unsigned alphabet_size = 2);
  /// Canonicalises (merges equal neighbours, drops empty runs).
  static Word from_runs(std::span<const Run> runs, unsigned alphabet_size = 2);
  static Word repeat(Symbol symbol, Length count, unsigned alphabet_size = 2);

  unsigned alphabet_size() const noexcept { return alphabet_size_; }
  Length size() const noexcept { return ends_.empty() ? 0 : ends_.back(); }
  bool empty() const noexcept { return runs_.empty(); }

  std::span<const Run> runs() const noexcept { return runs_; }
  std::size_t run_count() const noexcept { return runs_.size(); }
  /// Inclusive 1-based end position of run `r`.
  Length run_end(std::size_t r) const noexcept { return ends_[r]; }
  Length run_start(std::size_t r) const noexcept { return r == 0 ? 1 : ends_[r - 1] + 1; }
  /// Index of the run holding 1-based position `pos`. Requires 1 <= pos <= size().
  std::size_t run_at(Length pos) const;

  Symbol at(Length pos) const;
  Symbol front() const { return runs_.front().symbol; }
  Symbol back() const { return runs_.back().symbol; }

  Word& append(Symbol symbol, Length count);
  Word& append(const Word& other);
  /// Appends positions [first, first+count) of `other` without expanding it.
  Word& append_slice(const Word& other, Length first, Length count);

  void reserve_runs(std::size_t n);

  /// Expanded form as digit characters. Intended for small words.
  std::string symbols() const;
  std::vector<Symbol> expand() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_size_ == b.alphabet_size_ && a.runs_ == b.runs_;
  }
  /// Lexicographic order on the expanded words (shorter prefix first).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  unsigned alphabet_size_;
  std::vector<Run> runs_;
  std::vector<Length> ends_;
};

// Word algebra.
Word concat(std::span<const Word> parts);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, Length m);
/// `len` symbols of `w` starting at 1-based position `t`.
Word subword_at(const Word& w, Length t, Length len);
bool starts_with(const Word& w, const Word& prefix);
bool ends_with(const Word& w, const Word& suffix);

/// Number of leading positions on which `a` and `b` agree, up to `limit`.
Length common_prefix_length(const Word& a, Length a_offset, const Word& b, Length b_offset,
                            Length limit);

/// Maximal intervals of positions in [1, horizon] where `a` and `b` differ.
std::vector<Interval> difference_intervals(const Word& a, const Word& b, Length horizon);

/// Start positions (1-based) of every occurrence of `pattern` in `text`,
/// grouped into intervals. Single-run patterns produce one interval per long
/// enough run; longer patterns produce one point interval per occurrence.
std::vector<Interval> find_occurrences(const Word& text, const Word& pattern);
Length occurrence_total(std::span<const Interval> occurrences);

}  // namespace meansense
