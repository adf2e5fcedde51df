#include "meansense/language.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "meansense/checked.hpp"
#include "meansense/error.hpp"

namespace meansense {

namespace {

// Inserts the windows of `w` into `out`; returns false once the cap is hit.
bool collect_windows(const Word& w, Length n, std::size_t cap, std::set<Word>& out) {
  if (n == 0 || w.size() < n) return true;
  const Length last_start = w.size() - n + 1;
  for (std::size_t r = 0; r < w.run_count(); ++r) {
    const Length end = w.run_end(r);
    const Length len = w.runs()[r].length;
    for (Length c = std::min(len, n); c >= 1; --c) {
      const Length start = end - c + 1;
      if (start > last_start) break;
      Word win = subword_at(w, start, n);
      if (!out.contains(win)) {
        if (out.size() >= cap) return false;
        out.insert(std::move(win));
      }
    }
    if (w.run_start(r) > last_start) break;
  }
  return true;
}

SubwordSet to_set(std::set<Word>&& words, bool complete) {
  SubwordSet s;
  s.words.assign(std::make_move_iterator(words.begin()), std::make_move_iterator(words.end()));
  s.truncated = !complete;
  return s;
}

}  // namespace

SubwordSet distinct_subwords(const Word& w, Length n, std::size_t cap) {
  std::set<Word> found;
  bool complete = collect_windows(w, n, cap, found);
  return to_set(std::move(found), complete);
}

SubwordSet subwords(const LanguageApprox& la, Length n, std::size_t cap) {
  std::set<Word> found;
  bool complete = collect_windows(la.source.prefix, n, cap, found);
  for (const PointView& sp : la.specials) {
    if (!complete || sp.horizon() < n || n == 0) continue;
    Word head = subword_at(sp.prefix, 1, n);
    if (!found.contains(head)) {
      if (found.size() >= cap) {
        complete = false;
      } else {
        found.insert(std::move(head));
      }
    }
  }
  return to_set(std::move(found), complete);
}

std::vector<PointView> cylinder_members(const LanguageApprox& la, const Word& u,
                                        std::size_t max_members, Length member_horizon) {
  if (u.empty()) throw ParameterError("cylinder word must be non-empty");
  if (member_horizon < u.size()) {
    throw ParameterError("member horizon shorter than the cylinder word");
  }
  std::vector<PointView> out;
  for (const PointView& sp : la.specials) {
    if (out.size() >= max_members) break;
    if (!sp.starts_with(u)) continue;
    PointView p = sp;
    if (p.horizon() > member_horizon) p.prefix = subword_at(p.prefix, 1, member_horizon);
    out.push_back(std::move(p));
  }
  const Word& text = la.source.prefix;
  if (out.size() >= max_members || text.size() < member_horizon) return out;
  const Length last_start = text.size() - member_horizon + 1;

  std::vector<Interval> occ;
  for (Interval iv : find_occurrences(text, u)) {
    if (iv.first > last_start) break;
    iv.last = std::min(iv.last, last_start);
    occ.push_back(iv);
  }
  const Length total = occurrence_total(occ);
  if (total == 0) return out;
  const std::size_t budget = max_members - out.size();
  const Length take = std::min<Length>(total, budget);

  // Evenly spaced ranks k*total/take, mapped to positions through the intervals.
  std::size_t iv = 0;
  Length before = 0;
  for (Length k = 0; k < take; ++k) {
    const Length rank = static_cast<Length>((static_cast<u128>(k) * total) / take);
    while (before + occ[iv].size() <= rank) {
      before += occ[iv].size();
      ++iv;
    }
    const Length pos = occ[iv].first + (rank - before);
    PointView p = make_point(subword_at(text, pos, member_horizon), la.source.provenance,
                             la.source.offset + pos - 1,
                             "shift of the source prefix at occurrence " + std::to_string(pos));
    if (!p.starts_with(u)) throw std::logic_error("cylinder member does not start with u");
    out.push_back(std::move(p));
  }
  return out;
}

Report check_transitive_desk(const LanguageApprox& la, Length n) {
  Report r;
  r.check = "transitive-desk";
  r.params = {{"n", n}, {"horizon", la.horizon()}};
  r.caveats.push_back("two-half recurrence on a finite prefix; evidence, not a proof");
  if (n == 0 || n > la.horizon() / 4) {
    r.verdict = Verdict::inconclusive;
    r.caveats.push_back("n must satisfy 1 <= n <= horizon/4 for recurrence to be observable");
    return r;
  }
  const Length half = la.horizon() / 2;
  const Word first = subword_at(la.source.prefix, 1, half);
  const Word second = subword_at(la.source.prefix, half + 1, la.horizon() - half);
  const SubwordSet a = distinct_subwords(first, n, 1u << 22);
  const SubwordSet b = distinct_subwords(second, n, 1u << 22);
  std::vector<Word> missing;
  std::set_difference(a.words.begin(), a.words.end(), b.words.begin(), b.words.end(),
                      std::back_inserter(missing));
  r.values = {{"first_half_words", a.words.size()},
              {"second_half_words", b.words.size()},
              {"non_recurring", missing.size()}};
  for (const Word& w : missing) r.witnesses.push_back({{"non_recurring", w.symbols()}});
  if (a.truncated || b.truncated) {
    r.verdict = Verdict::inconclusive;
    r.caveats.push_back("subword enumeration hit its cap");
    return r;
  }
  r.verdict = missing.empty() ? Verdict::pass : Verdict::fail;
  return r;
}

Report check_dense_periodic_desk(const WordFamily& family, const LanguageApprox& la, Length n) {
  Report r;
  r.check = "dense-periodic-desk";
  r.params = {{"n", n}, {"horizon", la.horizon()}};
  if (family.schedule().construction != Construction::s4) {
    throw ParameterError("dense periodic points are checked for S4");
  }
  r.caveats.push_back("words are drawn from the language under-approximation");

  // Period words with n-1 symbols of wrap-around, one per level.
  std::vector<std::pair<Word, Length>> periods;
  for (unsigned i = 1; i <= family.depth(); ++i) {
    Length zeros = 0;
    try {
      zeros = family.schedule().next_a_length(i);
    } catch (const OverflowError&) {
      break;
    }
    Word period = family.a(i);
    period.append(0, zeros);
    const Length p = period.size();
    Word text = period;
    Length wrap = n > 0 ? n - 1 : 0;
    while (wrap > 0) {
      Length take = std::min(wrap, p);
      text.append_slice(period, 1, take);
      wrap -= take;
    }
    periods.emplace_back(std::move(text), p);
  }

  const SubwordSet words = subwords(la, n);
  std::size_t unwitnessed = 0;
  for (const Word& u : words.words) {
    std::optional<std::pair<unsigned, Length>> hit;
    for (std::size_t i = 0; i < periods.size() && !hit; ++i) {
      for (const Interval& iv : find_occurrences(periods[i].first, u)) {
        if (iv.first <= periods[i].second) {
          hit = std::make_pair(static_cast<unsigned>(i + 1), iv.first - 1);
        }
        break;
      }
    }
    if (hit) {
      r.witnesses.push_back({{"u", u.symbols()}, {"i", hit->first}, {"t", hit->second}});
    } else {
      ++unwitnessed;
      r.witnesses.push_back({{"u", u.symbols()}, {"i", nullptr}, {"t", nullptr}});
    }
  }
  r.values = {{"words", words.words.size()}, {"unwitnessed", unwitnessed}};
  if (words.truncated) {
    r.verdict = Verdict::inconclusive;
    r.caveats.push_back("subword enumeration hit its cap");
  } else {
    r.verdict = unwitnessed == 0 ? Verdict::pass : Verdict::fail;
  }
  return r;
}

}  // namespace meansense
