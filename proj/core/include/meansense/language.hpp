#pragma once

#include <cstddef>
#include <vector>

#include "meansense/constructions.hpp"
#include "meansense/point.hpp"
#include "meansense/report.hpp"

namespace meansense {

/// Under-approximation of a subshift's language: the subwords of a long
/// prefix of a transitive point, plus prefixes of explicitly registered
/// points (periodic points, z_j witnesses, B 0^inf limits).
struct LanguageApprox {
  PointView source;
  std::vector<PointView> specials;

  Length horizon() const noexcept { return source.horizon(); }
  void register_special(PointView p) { specials.push_back(std::move(p)); }
};

struct SubwordSet {
  std::vector<Word> words;  // sorted, distinct
  bool truncated = false;   // the cap stopped the enumeration
};

/// Distinct length-n windows of `w`, enumerated run by run: a window is
/// determined by its start run and how many symbols of that run it takes.
SubwordSet distinct_subwords(const Word& w, Length n, std::size_t cap);

/// Length-n words of the source prefix and of the special prefixes.
SubwordSet subwords(const LanguageApprox& la, Length n, std::size_t cap = 1u << 20);

/// Points of [u]: shifts sigma^t of the source at occurrences of u (evenly
/// sampled when there are more than `max_members`; only shifts with a full
/// `member_horizon` qualify), after every registered special starting with u.
std::vector<PointView> cylinder_members(const LanguageApprox& la, const Word& u,
                                        std::size_t max_members, Length member_horizon);

/// Two-half recurrence: every length-n word of the first half of the source
/// must occur in the second half. INCONCLUSIVE when 4n > horizon.
Report check_transitive_desk(const LanguageApprox& la, Length n);

/// Every u in subwords(la, n) must begin some sigma^t (A_i 0^{|A_{i+1}|})^inf.
/// The report maps each u to the smallest (i, t).
Report check_dense_periodic_desk(const WordFamily& family, const LanguageApprox& la, Length n);

}  // namespace meansense
