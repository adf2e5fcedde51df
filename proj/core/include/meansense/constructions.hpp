#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "meansense/point.hpp"
#include "meansense/schedule.hpp"

namespace meansense {

/// Default ceiling on the number of runs a single built word may hold.
/// S3's B_4 would need about 10^12 runs and is refused.
inline constexpr std::size_t kDefaultRunBudget = std::size_t{1} << 24;

/// The words A_1..A_depth and B_1..B_depth of a schedule, built eagerly in
/// RLE. Immutable once constructed. A_n only needs B_{n-1}, so every A_n is
/// always built; a B_n whose run count would exceed the budget is left out
/// and asking for it raises ResourceError.
class WordFamily {
 public:
  explicit WordFamily(Schedule schedule, std::size_t run_budget = kDefaultRunBudget);

  const Schedule& schedule() const noexcept { return schedule_; }
  unsigned depth() const noexcept { return schedule_.depth(); }

  const Word& a(unsigned n) const;
  const Word& b(unsigned n) const;
  bool has_b(unsigned n) const;

  /// C_n = y_1..y_n of the base generator (S4 only).
  Word c(unsigned n) const;

 private:
  void build_s3(std::size_t run_budget);
  void build_s4(std::size_t run_budget);

  Schedule schedule_;
  std::vector<Word> a_;
  std::vector<std::optional<Word>> b_;
};

std::pair<Word, Word> build_words_s3(const Schedule& s, unsigned n);
std::pair<Word, Word> build_words_s4(const Schedule& s, unsigned n);

/// Length-H prefix of x = lim A_n 0^inf. Available up to |A_d| + k_d, since
/// A_{d+1} starts with A_d 0^{k_d}.
PointView transitive_prefix(const WordFamily& family, Length horizon);
Length transitive_horizon_limit(const WordFamily& family);

/// Prefix of sigma^t (A_n 0^{|A_{n+1}|})^inf; the period is |A_n| + |A_{n+1}|.
PointView periodic_point_s4(const WordFamily& family, unsigned n, Length t, Length horizon);

struct SuffixAlignment {
  Length s = 0;      // x_[m+1, m+s] is a suffix of A_level
  unsigned level = 0;
};

/// Smallest s >= min_s such that x_[m+1, m+s] ends an occurrence of some A_i
/// that starts at or before m+1 (hence is a suffix of A_i). Throws
/// WitnessUnavailable when no built level provides one.
SuffixAlignment find_suffix_alignment(const WordFamily& family, Length m, Length min_s);

/// z_j = x_[m+1, m+s] 0^j 1 0^inf truncated to `horizon`. Requires the S3
/// family and that x_[m+1, m+s] is a suffix of a built A_i.
PointView witness_zj_s3(const WordFamily& family, Length m, Length s, Length j, Length horizon);

/// One step of the patched four-symbol map: shift on points in Y (leading
/// symbol 0/1), reset to the fixed point y otherwise.
PointView patched_step(const PointView& p, const Word& y_prefix);

}  // namespace meansense
