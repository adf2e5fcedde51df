#include "meansense/constructions.hpp"

#include <algorithm>
#include <string>

#include "meansense/error.hpp"
#include "meansense/generator.hpp"

namespace meansense {

namespace {

Word ones(Length n) { return Word::repeat(1, n); }

}  // namespace

WordFamily::WordFamily(Schedule schedule, std::size_t run_budget)
    : schedule_(std::move(schedule)) {
  verify_schedule(schedule_);
  if (schedule_.construction == Construction::s3) {
    build_s3(run_budget);
  } else {
    build_s4(run_budget);
  }
}

void WordFamily::build_s3(std::size_t run_budget) {
  const unsigned d = depth();
  a_.push_back(ones(3));
  b_.emplace_back(Word::repeat(0, 3));
  for (unsigned n = 2; n <= d; ++n) {
    const LevelRecord& prev = schedule_.level(n - 1);
    const Word& a_prev = a_.back();
    if (!b_.back()) {
      throw ResourceError("A_" + std::to_string(n) + " needs B_" + std::to_string(n - 1) +
                          ", which exceeds the run budget");
    }
    Word a(2);
    a.reserve_runs(2 * a_prev.run_count() + b_.back()->run_count() + 4);
    a.append(a_prev).append(0, prev.k).append(*b_.back()).append(0, prev.k).append(a_prev);
    const Length len_a = a.size();

    // B_n = concat_{i=1}^{|A_n|} A_{n-1} 0^{i-1} 1 0^{|A_n|-i}, then A_{n-1} 0^{|A_n|}.
    const double est = (static_cast<double>(len_a) + 1.0) *
                       (static_cast<double>(a_prev.run_count()) + 3.0);
    std::optional<Word> b;
    if (est <= static_cast<double>(run_budget)) {
      Word bw(2);
      bw.reserve_runs(static_cast<std::size_t>(est));
      for (Length i = 1; i <= len_a; ++i) {
        bw.append(a_prev).append(0, i - 1).append(1, 1).append(0, len_a - i);
      }
      bw.append(a_prev).append(0, len_a);
      b = std::move(bw);
    }
    a_.push_back(std::move(a));
    b_.push_back(std::move(b));
  }
}

void WordFamily::build_s4(std::size_t run_budget) {
  const unsigned d = depth();
  const GeneratorDescriptor& base = *schedule_.base;
  a_.push_back(Word::from_symbols("101"));
  b_.emplace_back(minimal_generator(base, 1));
  for (unsigned n = 2; n <= d; ++n) {
    const LevelRecord& prev = schedule_.level(n - 1);
    Word a(2);
    a.append(a_.back()).append(0, prev.k).append(*b_.back()).append(0, prev.k).append(a_.back());
    a_.push_back(std::move(a));

    // B_n = C_n concat_{i=1}^{n-1} (A_i 0^{|A_{i+1}|})^{n-i}
    double est = static_cast<double>(n);
    for (unsigned i = 1; i < n; ++i) {
      est += static_cast<double>(n - i) * (static_cast<double>(a_[i - 1].run_count()) + 1.0);
    }
    if (est > static_cast<double>(run_budget)) {
      b_.emplace_back(std::nullopt);
      continue;
    }
    Word b = minimal_generator(base, n);
    for (unsigned i = 1; i < n; ++i) {
      for (unsigned rep = 0; rep < n - i; ++rep) b.append(a_[i - 1]).append(0, a_[i].size());
    }
    b_.emplace_back(std::move(b));
  }
}

const Word& WordFamily::a(unsigned n) const {
  if (n == 0 || n > a_.size()) {
    throw ParameterError("level " + std::to_string(n) + " exceeds schedule depth " +
                         std::to_string(a_.size()));
  }
  return a_[n - 1];
}

bool WordFamily::has_b(unsigned n) const { return n >= 1 && n <= b_.size() && b_[n - 1].has_value(); }

const Word& WordFamily::b(unsigned n) const {
  if (n == 0 || n > b_.size()) {
    throw ParameterError("level " + std::to_string(n) + " exceeds schedule depth " +
                         std::to_string(b_.size()));
  }
  if (!b_[n - 1]) {
    throw ResourceError("B_" + std::to_string(n) + " exceeds the run budget (|B_n| = " +
                        std::to_string(schedule_.level(n).len_b) + ")");
  }
  return *b_[n - 1];
}

Word WordFamily::c(unsigned n) const {
  if (!schedule_.base) throw ParameterError("C_n is only defined for S4");
  return minimal_generator(*schedule_.base, n);
}

namespace {

std::pair<Word, Word> build_words(const Schedule& s, unsigned n, Construction expect) {
  if (s.construction != expect) throw ParameterError("schedule built for a different construction");
  if (n == 0 || n > s.depth()) {
    throw ParameterError("level " + std::to_string(n) + " exceeds schedule depth " +
                         std::to_string(s.depth()));
  }
  Schedule trimmed = s;
  trimmed.levels.resize(n);
  WordFamily family(std::move(trimmed));
  return {family.a(n), family.b(n)};
}

}  // namespace

std::pair<Word, Word> build_words_s3(const Schedule& s, unsigned n) {
  return build_words(s, n, Construction::s3);
}

std::pair<Word, Word> build_words_s4(const Schedule& s, unsigned n) {
  return build_words(s, n, Construction::s4);
}

Length transitive_horizon_limit(const WordFamily& family) {
  const LevelRecord& top = family.schedule().level(family.depth());
  return top.len_a + top.k;
}

PointView transitive_prefix(const WordFamily& family, Length horizon) {
  if (horizon == 0) throw ParameterError("horizon must be positive");
  const unsigned d = family.depth();
  for (unsigned n = 1; n <= d; ++n) {
    if (family.a(n).size() >= horizon) {
      return make_point(subword_at(family.a(n), 1, horizon), Provenance::transitive_shift, 0,
                        "prefix of A_" + std::to_string(n) +
                            "; x continues as the longer A_m 0^{k_m} B_m ... of deeper levels");
    }
  }
  if (horizon > transitive_horizon_limit(family)) {
    throw DepthError("horizon " + std::to_string(horizon) + " exceeds |A_" + std::to_string(d) +
                     "| + k_" + std::to_string(d) + " = " +
                     std::to_string(transitive_horizon_limit(family)) +
                     "; build a deeper schedule");
  }
  Word w = family.a(d);
  w.append(0, horizon - w.size());
  return make_point(std::move(w), Provenance::transitive_shift, 0,
                    "prefix of A_" + std::to_string(d) + " 0^{k_" + std::to_string(d) +
                        "}; next comes B_" + std::to_string(d));
}

PointView periodic_point_s4(const WordFamily& family, unsigned n, Length t, Length horizon) {
  if (family.schedule().construction != Construction::s4) {
    throw ParameterError("periodic points are built for S4");
  }
  const Word& a = family.a(n);
  const Length zeros = family.schedule().next_a_length(n);
  Word period = a;
  period.append(0, zeros);
  const Length p = period.size();
  if (t >= p) throw ParameterError("shift offset must be below the period " + std::to_string(p));
  if (horizon == 0) throw ParameterError("horizon must be positive");
  Word out(2);
  Length remaining = horizon;
  Length first = t + 1;
  while (remaining > 0) {
    Length take = std::min(remaining, p - first + 1);
    out.append_slice(period, first, take);
    remaining -= take;
    first = 1;
  }
  return make_point(std::move(out), Provenance::periodic, t,
                    "period A_" + std::to_string(n) + " 0^{|A_" + std::to_string(n + 1) +
                        "|}, length " + std::to_string(p));
}

SuffixAlignment find_suffix_alignment(const WordFamily& family, Length m, Length min_s) {
  if (min_s == 0) min_s = 1;
  const PointView x = transitive_prefix(family, transitive_horizon_limit(family));
  std::optional<SuffixAlignment> best;
  for (unsigned i = 1; i <= family.depth(); ++i) {
    const Word& a = family.a(i);
    if (a.size() > x.horizon()) break;
    const Length len = a.size();
    for (const Interval& occ : find_occurrences(x.prefix, a)) {
      Length lo = occ.first;
      if (m + min_s > len - 1 + lo) lo = m + min_s - (len - 1);
      Length hi = std::min(occ.last, m + 1);
      if (lo > hi) continue;
      Length s = lo + len - 1 - m;
      if (!best || s < best->s) best = SuffixAlignment{s, i};
    }
  }
  if (!best) {
    throw WitnessUnavailable("no built A_i ends at or after position " + std::to_string(m + min_s) +
                             " while starting at or before " + std::to_string(m + 1));
  }
  return *best;
}

PointView witness_zj_s3(const WordFamily& family, Length m, Length s, Length j, Length horizon) {
  if (family.schedule().construction != Construction::s3) {
    throw ParameterError("z_j witnesses are built for S3");
  }
  if (s == 0) throw ParameterError("suffix length s must be positive");
  if (horizon < s + j + 1) {
    throw ParameterError("horizon " + std::to_string(horizon) + " too short for z_" +
                         std::to_string(j) + " (needs s+j+1 = " + std::to_string(s + j + 1) + ")");
  }
  const Word w = subword_at(transitive_prefix(family, m + s).prefix, m + 1, s);
  unsigned level = 0;
  for (unsigned i = 1; i <= family.depth() && level == 0; ++i) {
    if (ends_with(family.a(i), w)) level = i;
  }
  if (level == 0) {
    throw WitnessUnavailable("x_[" + std::to_string(m + 1) + ", " + std::to_string(m + s) +
                             "] is not a suffix of any built A_i");
  }
  // A_{n-1} 0^j 1 0^{|A_n|-j-1} is block j+1 of B_n for every n > level, and
  // A_{n-1} ends with A_level; pick the first n whose block is long enough.
  const Schedule& sched = family.schedule();
  std::string realised = "gap j beyond the lengths this schedule describes";
  for (unsigned n = level + 1; n <= sched.depth() + 1; ++n) {
    Length len_a = n <= sched.depth() ? sched.level(n).len_a : sched.next_a_length(sched.depth());
    if (len_a >= j + 1) {
      realised = "realised through length " + std::to_string(s + len_a) + " by block " +
                 std::to_string(j + 1) + " of B_" + std::to_string(n);
      break;
    }
  }
  Word z = w;
  z.append(0, j).append(1, 1).append(0, horizon - s - j - 1);
  return make_point(std::move(z), Provenance::explicit_limit, j,
                    "z_j = x_[m+1,m+s] 0^j 1 0^inf with x_[m+1,m+s] a suffix of A_" +
                        std::to_string(level) + "; " + realised);
}

PointView patched_step(const PointView& p, const Word& y_prefix) {
  if (p.prefix.empty()) throw HorizonExhausted("patched_step on an empty prefix");
  if (p.prefix.alphabet_size() != 4) throw ParameterError("patched system uses a four-symbol alphabet");
  if (p.prefix.front() >= 2) {
    if (y_prefix.empty()) throw ParameterError("fixed point y needs a non-empty prefix");
    Word y(4);
    for (const Run& r : y_prefix.runs()) y.append(r.symbol, r.length);
    return make_point(std::move(y), Provenance::patched_system, 0,
                      "reset to the fixed point y of the base system");
  }
  PointView out = p.shifted(1);
  out.provenance = Provenance::patched_system;
  return out;
}

}  // namespace meansense
