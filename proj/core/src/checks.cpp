#include "meansense/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "meansense/checked.hpp"
#include "meansense/diagnostics.hpp"
#include "meansense/distance.hpp"
#include "meansense/error.hpp"
#include "meansense/hyperspace.hpp"
#include "meansense/language.hpp"
#include "meansense/occurrence.hpp"

namespace meansense {

using nlohmann::json;

constexpr i128 kI128Low = -(static_cast<i128>(1) << 125);
constexpr i128 kI128High = static_cast<i128>(1) << 125;

std::shared_ptr<const WordFamily> CheckContext::get(Key key, const std::function<Schedule()>& make) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = families_.find(key);
  if (it != families_.end()) return it->second;
  auto fam = std::make_shared<const WordFamily>(make());
  families_.emplace(std::move(key), fam);
  return fam;
}

std::shared_ptr<const WordFamily> CheckContext::s3(unsigned depth) {
  return get({0, depth, ""}, [depth] { return build_schedule_s3(depth); });
}

std::shared_ptr<const WordFamily> CheckContext::s4(unsigned depth) {
  const GeneratorDescriptor base = config_.base;
  return get({1, depth, base.description()}, [depth, base] { return build_schedule_s4(depth, base); });
}

std::string schedule_hash(const Schedule& s) { return fnv1a_hex(to_json(s).dump()); }

namespace {

template <class T>
T param(const json& p, const char* key, T fallback) {
  if (!p.contains(key) || p.at(key).is_null()) return fallback;
  try {
    return p.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParameterError(std::string("parameter '") + key + "' has the wrong type");
  }
}

unsigned param_level(const json& p, const char* key, unsigned fallback) {
  const auto v = param<long long>(p, key, fallback);
  if (v < 1 || v > 64) throw ParameterError(std::string("parameter '") + key + "' must lie in [1, 64]");
  return static_cast<unsigned>(v);
}

Length param_length(const json& p, const char* key, Length fallback) {
  if (p.contains(key) && p.at(key).is_number_integer() && p.at(key).get<long long>() < 0) {
    throw ParameterError(std::string("parameter '") + key + "' must be non-negative");
  }
  return param<Length>(p, key, fallback);
}

std::uint64_t seed_of(const CheckContext& ctx, const json& p) {
  return param<std::uint64_t>(p, "seed", ctx.config().seed);
}

Length horizon_of(const CheckContext& ctx, const json& p, Length fallback) {
  const Length cfg = ctx.config().horizon;
  return param_length(p, "horizon", cfg != 0 ? cfg : fallback);
}

/// "0,1,2" or a JSON array of numbers.
std::vector<Length> length_list(const json& p, const char* key, std::vector<Length> fallback) {
  if (!p.contains(key) || p.at(key).is_null()) return fallback;
  const json& v = p.at(key);
  std::vector<Length> out;
  try {
    if (v.is_array()) {
      for (const auto& e : v) out.push_back(e.get<Length>());
      return out;
    }
    std::stringstream ss(v.get<std::string>());
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) out.push_back(std::stoull(tok));
    }
  } catch (const std::exception&) {
    throw ParameterError(std::string("parameter '") + key + "' must be a list of integers");
  }
  return out;
}

std::vector<std::string> string_list(const json& p, const char* key, std::vector<std::string> fallback) {
  if (!p.contains(key) || p.at(key).is_null()) return fallback;
  const json& v = p.at(key);
  std::vector<std::string> out;
  if (v.is_array()) {
    for (const auto& e : v) out.push_back(e.get<std::string>());
    return out;
  }
  if (!v.is_string()) throw ParameterError(std::string("parameter '") + key + "' must be a list");
  std::stringstream ss(v.get<std::string>());
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

Report start(std::string_view name, json params) {
  Report r;
  r.check = std::string(name);
  r.params = std::move(params);
  return r;
}

PointView truncate_point(const PointView& p, Length horizon) {
  if (horizon > p.horizon()) {
    throw HorizonExhausted("need " + std::to_string(horizon) + " symbols, point has " +
                           std::to_string(p.horizon()));
  }
  PointView q = p;
  q.prefix = subword_at(p.prefix, 1, horizon);
  return q;
}

/// Shift sigma^t x with the given horizon.
PointView shift_of(const PointView& x, Length t, Length horizon) {
  if (t + horizon > x.horizon()) {
    throw HorizonExhausted("sigma^" + std::to_string(t) + " x needs " + std::to_string(t + horizon) +
                           " known symbols, have " + std::to_string(x.horizon()));
  }
  return make_point(subword_at(x.prefix, t + 1, horizon), Provenance::transitive_shift, t);
}

struct PrefixMax {
  long double worst = 0;
  std::vector<double> sampled;
};

/// max over n of (1/n) sum_{i<n} (d_i + correction_i).
PrefixMax max_prefix_average(const DistanceSequence& seq, Length stride) {
  PrefixMax out;
  long double sum = 0;
  for (Length i = 0; i < seq.size(); ++i) {
    sum += static_cast<long double>(seq.value(i)) + static_cast<long double>(seq.correction(i));
    const long double avg = sum / static_cast<long double>(i + 1);
    out.worst = std::max(out.worst, avg);
    if (stride != 0 && i % stride == 0) out.sampled.push_back(static_cast<double>(avg));
  }
  return out;
}

// ---------------------------------------------------------------- S3 checks

Report lemma_3_1(CheckContext& ctx, const json& p) {
  const unsigned n = param_level(p, "n", 1);
  const unsigned m = param_level(p, "m", 3);
  if (m < n) throw ParameterError("need m >= n");
  const unsigned depth = std::max(m, param_level(p, "depth", m));
  auto fam = ctx.s3(depth);
  Report r = start("lemma-3.1", {{"n", n}, {"m", m}, {"depth", depth}});
  r.schedule_hash = schedule_hash(fam->schedule());

  const LevelRecord& lv = fam->schedule().level(n);
  const Length window = lv.t;
  const Length bound = lv.len_a + lv.len_b;
  json rows = json::array();
  bool ok = true;
  std::size_t checked = 0;
  auto scan = [&](const std::string& name, const Word& w) {
    if (w.size() < window) {
      r.caveats.push_back(name + " is shorter than t_n; no window fits");
      return;
    }
    const OccurrenceIndex idx(w);
    const WindowMax wm = idx.max_window(window);
    ++checked;
    ok = ok && wm.max_count <= bound;
    rows.push_back({{"word", name},
                    {"length", w.size()},
                    {"runs", w.run_count()},
                    {"max_count", wm.max_count},
                    {"witness_position", wm.witness_position},
                    {"bound", bound},
                    {"holds", wm.max_count <= bound}});
  };
  scan("A_" + std::to_string(m), fam->a(m));
  if (fam->has_b(m)) {
    scan("B_" + std::to_string(m), fam->b(m));
  } else {
    r.caveats.push_back("B_" + std::to_string(m) + " exceeds the run budget and was not scanned");
  }
  r.values = {{"window", window}, {"bound", bound}, {"words", rows}};
  r.verdict = checked == 0 ? Verdict::inconclusive : (ok ? Verdict::pass : Verdict::fail);
  return r;
}

Report lemma_3_2_density(CheckContext& ctx, const json& p) {
  const unsigned depth = param_level(p, "depth", 4);
  const auto levels = length_list(p, "levels", {1, 2, 3});
  const Length rr = param_length(p, "r", 1);
  if (rr == 0) throw ParameterError("r must be positive");
  if (levels.empty()) throw ParameterError("levels must be non-empty");
  auto fam = ctx.s3(depth);
  const Length h = horizon_of(ctx, p, fam->a(depth).size());
  Report r = start("lemma-3.2-density", {{"depth", depth}, {"levels", levels}, {"r", rr}, {"horizon", h}});
  r.schedule_hash = schedule_hash(fam->schedule());

  const PointView x = transitive_prefix(*fam, h);
  const IndexSet e = indicator_set_E(x);
  std::vector<Length> windows;
  for (Length n : levels) {
    if (n == 0 || n > depth) throw ParameterError("level " + std::to_string(n) + " outside the schedule");
    const Length t = fam->schedule().level(static_cast<unsigned>(n)).t;
    if (t > h) throw HorizonExhausted("t_" + std::to_string(n) + " exceeds the horizon");
    windows.push_back(t);
  }
  const auto pts = window_densities(e, windows);

  json rows = json::array();
  bool decreasing = true;
  Series s{"window_density", {}, levels.front()};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    rows.push_back({{"level", levels[i]},
                    {"window", pts[i].length},
                    {"max_count", pts[i].count},
                    {"witness", pts[i].witness},
                    {"density", pts[i].value()}});
    s.values.push_back(pts[i].value());
    if (i > 0) {
      // count_i / L_i < count_{i-1} / L_{i-1}
      decreasing = decreasing && static_cast<u128>(pts[i].count) * pts[i - 1].length <
                                     static_cast<u128>(pts[i - 1].count) * pts[i].length;
    }
  }
  const unsigned last = static_cast<unsigned>(levels.back());
  const LevelRecord& lv = fam->schedule().level(last);
  // count / t <= (r+1)(|A|+|B|) / (r t)  <=>  r count <= (r+1)(|A|+|B|)
  const u128 lhs = static_cast<u128>(rr) * pts.back().count;
  const u128 rhs = static_cast<u128>(rr + 1) * (lv.len_a + lv.len_b);
  const bool bounded = lhs <= rhs;
  const double bound_value = static_cast<double>(rr + 1) * static_cast<double>(lv.len_a + lv.len_b) /
                             (static_cast<double>(rr) * static_cast<double>(lv.t));
  r.values = {{"points", rows},
              {"decreasing", decreasing},
              {"bound_level", last},
              {"bound", bound_value},
              {"bound_holds", bounded}};
  r.series.push_back(std::move(s));
  r.caveats.push_back("window maxima are exact over the finite horizon");
  r.verdict = decreasing && bounded ? Verdict::pass : Verdict::fail;
  return r;
}

Report thm_1_3_cofinite(CheckContext& ctx, const json& p) {
  const unsigned depth = param_level(p, "depth", 4);
  const Length m = param_length(p, "m", 5);
  Length s = param_length(p, "s", 0);
  const Length h = horizon_of(ctx, p, 100000);
  const Length slack = param_length(p, "slack", 0);
  const double delta = param<double>(p, "delta", 0.5);
  const auto max_members = param<std::size_t>(p, "members", 64);
  auto fam = ctx.s3(depth);

  unsigned level = 0;
  if (s == 0) {
    const SuffixAlignment al = find_suffix_alignment(*fam, m, 1);
    s = al.s;
    level = al.level;
  }
  if (h <= m + s + slack) throw ParameterError("horizon must exceed m + s + slack");
  Report r = start("thm-1.3-cofinite", {{"depth", depth}, {"m", m}, {"s", s}, {"horizon", h},
                                        {"slack", slack}, {"delta", delta}, {"members", max_members}});
  r.schedule_hash = schedule_hash(fam->schedule());

  const Length steps = h + 1;
  const PointView x = transitive_prefix(*fam, fam->a(depth).size());
  LanguageApprox la{x, {}};
  const Word w = subword_at(x.prefix, m + 1, s);

  std::vector<PointView> members = cylinder_members(la, w, max_members, steps);
  const Length sampled = members.size();
  for (Length j = 0; s + j < steps; ++j) members.push_back(witness_zj_s3(*fam, m, s, j, steps));
  Word tail = w;
  tail.append(0, steps - s);
  members.push_back(make_point(std::move(tail), Provenance::explicit_limit, 0, "w 0^inf"));

  const IndexSet times = sensitivity_times(members, delta, steps);
  Length missing = 0;
  json first_missing = json::array();
  for (Length i = m + s + 1; i <= h - slack; ++i) {
    if (!times.contains(i)) {
      ++missing;
      if (first_missing.size() < 16) first_missing.push_back(i);
    }
  }
  json outside = json::array();
  for (Length i = 0; i <= m + s && i < steps; ++i) {
    if (times.contains(i)) outside.push_back(i);
  }
  r.values = {{"cylinder", w.symbols()},
              {"alignment_level", level},
              {"cylinder_members", sampled},
              {"z_family", members.size() - sampled},
              {"steps", steps},
              {"expected_from", m + s + 1},
              {"expected_to", h - slack},
              {"sensitivity_times", times.size()},
              {"missing", missing},
              {"times_at_or_below_m_plus_s", outside}};
  r.witnesses = first_missing;
  r.caveats.push_back("members: sampled shifts of x in the cylinder plus the z_j witnesses and w 0^inf");
  r.verdict = missing == 0 ? Verdict::pass : Verdict::fail;
  return r;
}

Report thm_1_3_banach_equi(CheckContext& ctx, const json& p) {
  const unsigned depth = param_level(p, "depth", 4);
  auto fam = ctx.s3(depth);
  const Schedule& sch = fam->schedule();
  if (depth < 3) throw ParameterError("depth must be at least 3");
  const Length window = param_length(p, "window", sch.level(2).t);
  const Length cmp = param_length(p, "comparison_depth", 4096);
  const auto cylinders = param<std::size_t>(p, "cylinders", 10);
  const auto pairs = param<std::size_t>(p, "pairs", 100);
  const auto per_cyl = param<std::size_t>(p, "members", 200);
  const Length cyl_len = param_length(p, "cylinder_length", sch.level(2).len_a);
  const double eps = param<double>(p, "epsilon", 0.05);
  const std::uint64_t seed = seed_of(ctx, p);
  if (window == 0 || cyl_len == 0 || cylinders == 0) throw ParameterError("window, cylinders and cylinder length must be positive");
  Report r = start("thm-1.3-banach-equi",
                   {{"depth", depth}, {"window", window}, {"comparison_depth", cmp},
                    {"cylinders", cylinders}, {"pairs", pairs}, {"members", per_cyl},
                    {"cylinder_length", cyl_len}, {"epsilon", eps}, {"seed", seed}});
  r.schedule_hash = schedule_hash(sch);

  const PointView x = transitive_prefix(*fam, fam->a(depth).size());
  const LanguageApprox la{x, {}};
  const IndexSet e = indicator_set_E(x);
  if (e.empty()) throw WitnessUnavailable("the prefix has no 1s");
  const Length member_h = 3 * window + cmp;

  std::mt19937_64 rng(seed);
  json rows = json::array();
  double worst = 0;
  Length failing = 0;
  Length evaluated = 0;
  for (std::size_t c = 0; c < cylinders; ++c) {
    // cylinder words read at evenly spaced 1s of x
    const std::size_t rank = cylinders == 1 ? 0 : (e.size() - 1) * c / (cylinders - 1);
    Length a = e.members()[rank];
    if (a + cyl_len > x.horizon()) a = x.horizon() - cyl_len;
    const Word u = subword_at(x.prefix, a + 1, cyl_len);
    const auto mem = cylinder_members(la, u, per_cyl, member_h);
    json row = {{"cylinder_start", a}, {"members", mem.size()}};
    if (mem.size() < 2) {
      row["note"] = "fewer than two members";
      rows.push_back(row);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, mem.size() - 1);
    double cw = 0;
    Length cw_a = 0, cw_b = 0, cfail = 0;
    for (std::size_t k = 0; k < pairs; ++k) {
      std::size_t i = pick(rng), j = pick(rng);
      while (j == i) j = pick(rng);
      const AverageReport av = banach_avg_distance(mem[i], mem[j], window, cmp);
      ++evaluated;
      if (av.upper() >= eps) ++cfail;
      if (av.upper() > cw) {
        cw = av.upper();
        cw_a = mem[i].offset;
        cw_b = mem[j].offset;
      }
    }
    failing += cfail;
    worst = std::max(worst, cw);
    row.update({{"worst_upper", cw}, {"worst_pair", {cw_a, cw_b}}, {"pairs_at_or_above_epsilon", cfail}});
    rows.push_back(row);
    if (cfail != 0) r.witnesses.push_back({{"cylinder_start", a}, {"offsets", {cw_a, cw_b}}, {"upper", cw}});
  }
  r.values = {{"per_cylinder", rows},
              {"pairs_evaluated", evaluated},
              {"pairs_failing", failing},
              {"worst_upper", worst},
              {"member_horizon", member_h}};
  r.caveats.push_back("cylinders are read at evenly spaced 1s of x; members are evenly spaced occurrences");
  r.caveats.push_back("the sup runs over every length-L window inside the member horizon");
  r.verdict = evaluated == 0 ? Verdict::inconclusive : (failing == 0 ? Verdict::pass : Verdict::fail);
  return r;
}

Report thm_1_8_witness(CheckContext& ctx, const json& p) {
  const unsigned depth = param_level(p, "depth", 4);
  if (depth < 4) throw ParameterError("depth must be at least 4");
  auto fam = ctx.s3(depth);
  const Schedule& sch = fam->schedule();
  const double eps = param<double>(p, "epsilon", 0.1);
  const Length steps = param_length(p, "steps", 10000);
  const auto count = param<std::size_t>(p, "members", 3);
  const double mean_target = param<double>(p, "mean_target", 0.9);
  const double base_eps = param<double>(p, "base_epsilon", 0.05);
  const Length window = param_length(p, "window", sch.level(2).t);
  const Length cmp = param_length(p, "comparison_depth", 4096);
  if (count == 0 || count > 3) throw ParameterError("members must lie in [1, 3]");
  Report r = start("thm-1.8-witness",
                   {{"depth", depth}, {"epsilon", eps}, {"steps", steps}, {"members", count},
                    {"mean_target", mean_target}, {"base_epsilon", base_eps}, {"window", window},
                    {"comparison_depth", cmp}});
  r.schedule_hash = schedule_hash(sch);

  const PointView x = transitive_prefix(*fam, fam->a(depth).size());
  LanguageApprox la{x, {}};
  const LevelRecord& l2 = sch.level(2);
  const LevelRecord& l3 = sch.level(3);
  const Length hyper_depth = 64;
  const Length hp = steps + hyper_depth;

  std::vector<PointView> pv;
  std::vector<PointView> base;
  json offsets = json::array();
  for (std::size_t c = 0; c < count; ++c) {
    // start of block c+1 of B_3 inside x
    const Length o = l3.len_a + l3.k + c * (l2.len_a + l3.len_a);
    pv.push_back(shift_of(x, o, hp));
    base.push_back(shift_of(x, o, 3 * window + cmp));
    offsets.push_back(o);
  }
  const FiniteSet ps(pv);
  HyperWitness hw = hyper_witness_s3(*fam, la, ps, eps, hp);
  const AverageReport mean = hyper_mean_avg(ps, hw.q, steps, hyper_depth);

  json pairs = json::array();
  bool base_ok = true;
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = a + 1; b < base.size(); ++b) {
      const AverageReport av = banach_avg_distance(base[a], base[b], window, cmp);
      base_ok = base_ok && av.upper() < base_eps;
      pairs.push_back({{"offsets", {base[a].offset, base[b].offset}}, {"banach_upper", av.upper()}});
    }
  }
  const bool dh_ok = hw.report.verdict == Verdict::pass;
  const bool mean_ok = mean.value >= mean_target;
  r.values = {{"offsets", offsets},
              {"witness", hw.report.values},
              {"hausdorff_below_epsilon", dh_ok},
              {"hyper_mean", mean.value},
              {"hyper_mean_upper", mean.upper()},
              {"hyper_mean_at_least_target", mean_ok},
              {"base_pairs", pairs},
              {"base_pairs_below_epsilon", base_ok}};
  r.witnesses = hw.report.witnesses;
  r.caveats = hw.report.caveats;
  r.caveats.push_back("hyper_mean is the lower bound: windows agreeing in full count as 0");
  r.verdict = dh_ok && mean_ok && base_ok ? Verdict::pass : Verdict::fail;
  return r;
}

// ---------------------------------------------------------------- S4 checks

struct OneRunEnds {
  std::vector<Length> ends;     // 1-based end position of each 1-run
  std::vector<Length> cum;      // ones in [1, end]
};

OneRunEnds one_run_ends(const Word& w) {
  OneRunEnds o;
  Length ones = 0;
  for (std::size_t r = 0; r < w.run_count(); ++r) {
    if (w.runs()[r].symbol != 1) continue;
    ones += w.runs()[r].length;
    o.ends.push_back(w.run_end(r));
    o.cum.push_back(ones);
  }
  return o;
}

Report lemma_count_3(CheckContext& ctx, const json& p) {
  const unsigned depth = param_level(p, "depth", 5);
  if (depth < 2) throw ParameterError("depth must be at least 2");
  auto fam = ctx.s4(depth);
  const Schedule& sch = fam->schedule();
  const Length y_h = param_length(p, "y_horizon", Length{1} << 16);
  const Length h = horizon_of(ctx, p, fam->a(depth).size());
  Report r = start("lemma-count-3", {{"depth", depth}, {"y_horizon", y_h}, {"horizon", h},
                                     {"base", sch.base->description()}});
  r.schedule_hash = schedule_hash(sch);

  // N: first level whose A_n is absent from the y prefix
  const Word y = minimal_generator(*sch.base, y_h);
  unsigned big_n = 0;
  for (unsigned n = 1; n <= depth; ++n) {
    if (find_occurrences(y, fam->a(n)).empty()) {
      big_n = n;
      break;
    }
  }
  if (big_n == 0) {
    r.verdict = Verdict::inconclusive;
    r.caveats.push_back("every built A_n occurs in the y prefix; N lies beyond the schedule");
    return r;
  }

  auto t_of = [&](unsigned n) { return sch.level(n).t; };
  auto c_of = [&](unsigned n) { return sch.level(n).len_a + sch.level(n).len_b; };
  bool ok = true;
  json violations = json::array();
  auto violate = [&](json v) {
    ok = false;
    if (violations.size() < 32) violations.push_back(std::move(v));
  };

  // Count-1: o((A_n 0^{k_m} B_m 0^{k_m})_[1,s]) <= max{1, s/T_n} (|A_n|+|B_n|)
  Length count1_cases = 0;
  for (unsigned n = 1; n <= depth; ++n) {
    for (unsigned m = n; m <= depth; ++m) {
      if (!fam->has_b(m)) continue;
      Word w(2);
      w.append(fam->a(n)).append(0, sch.level(m).k).append(fam->b(m)).append(0, sch.level(m).k);
      const OneRunEnds o = one_run_ends(w);
      const u128 tn = t_of(n), cn = c_of(n);
      for (std::size_t q = 0; q < o.ends.size(); ++q) {
        const u128 s = o.ends[q];
        if (static_cast<u128>(o.cum[q]) * tn > std::max(tn, s) * cn) {
          violate({{"lemma", "count-1"}, {"n", n}, {"m", m}, {"s", o.ends[q]}, {"count", o.cum[q]}});
        }
      }
      ++count1_cases;
    }
  }

  // o(A_m) <= (|A_m| / T_n + 1)(|A_n|+|B_n|) for m > n
  Length ame2_cases = 0;
  for (unsigned n = 1; n < depth; ++n) {
    for (unsigned m = n + 1; m <= depth; ++m) {
      const u128 lhs = static_cast<u128>(count_ones(fam->a(m))) * t_of(n);
      const u128 rhs = (static_cast<u128>(fam->a(m).size()) + t_of(n)) * c_of(n);
      if (lhs > rhs) violate({{"lemma", "almost-mean-equi-2(1)"}, {"n", n}, {"m", m}});
      ++ame2_cases;
    }
  }

  // Count-3 on the x prefix: for each occurrence i of A_n and every j with
  // j - i > |A_n|:  o(x_[i,j-1]) T <= (j - i + 2T) c.
  // With f(e) = C(e) T - e c this reads f(j-1) <= f(i-1) + 2Tc; the worst e
  // is either j-1 = i+|A_n| or the end of a later 1-run.
  const PointView x = transitive_prefix(*fam, h);
  const OccurrenceIndex idx(x.prefix);
  const OneRunEnds o = one_run_ends(x.prefix);
  json per_level = json::array();
  Length count3_cases = 0;
  for (unsigned n = big_n; n <= depth; ++n) {
    const Word& an = fam->a(n);
    if (an.size() + 1 > h) break;
    const i128 tn = t_of(n), cn = c_of(n);
    auto f = [&](Length e, Length cum) { return static_cast<i128>(cum) * tn - static_cast<i128>(e) * cn; };
    std::vector<i128> suffix_max(o.ends.size() + 1, kI128Low);
    for (std::size_t q = o.ends.size(); q-- > 0;) {
      suffix_max[q] = std::max(suffix_max[q + 1], f(o.ends[q], o.cum[q]));
    }
    const auto occ = find_occurrences(x.prefix, an);
    Length starts = 0;
    i128 tightest = kI128High;
    for (const Interval& iv : occ) {
      for (Length i = iv.first; i <= iv.last; ++i) {
        const Length e0 = i + an.size();  // smallest j-1
        if (e0 > h) break;
        ++starts;
        const i128 base = f(i - 1, idx.count_prefix(i - 1)) + 2 * tn * cn;
        i128 worst = f(e0, idx.count_prefix(e0));
        const auto it = std::lower_bound(o.ends.begin(), o.ends.end(), e0);
        worst = std::max(worst, suffix_max[static_cast<std::size_t>(it - o.ends.begin())]);
        tightest = std::min(tightest, base - worst);
        if (worst > base) violate({{"lemma", "count-3"}, {"n", n}, {"i", i}});
      }
    }
    count3_cases += starts;
    const double slack = starts == 0 ? 0.0
                                     : static_cast<double>(tightest) / static_cast<double>(tn);
    per_level.push_back({{"n", n}, {"occurrences", starts}, {"min_slack_in_ones", slack}});
  }

  r.values = {{"N", big_n},
              {"count_1_cases", count1_cases},
              {"almost_mean_equi_2_cases", ame2_cases},
              {"count_3_starts", count3_cases},
              {"count_3_levels", per_level},
              {"x_horizon", h}};
  r.witnesses = violations;
  r.caveats.push_back("Count-3 is checked for every occurrence start inside the x prefix; "
                      "j ranges up to the prefix end");
  r.caveats.push_back("all inequalities are compared as exact 128-bit integers");
  r.verdict = count3_cases == 0 ? Verdict::inconclusive : (ok ? Verdict::pass : Verdict::fail);
  return r;
}

Report prop_p_system(CheckContext& ctx, const json& p) {
  const unsigned depth = param_level(p, "depth", 5);
  auto fam = ctx.s4(depth);
  const Schedule& sch = fam->schedule();
  const Length h = horizon_of(ctx, p, Length{1} << 21);
  const Length cmp = param_length(p, "comparison_depth", 4096);
  const double eps = param<double>(p, "epsilon", 0.1);
  const auto max_members = param<std::size_t>(p, "members", 100);
  Report r = start("prop-p-system", {{"depth", depth}, {"horizon", h}, {"comparison_depth", cmp},
                                     {"epsilon", eps}, {"members", max_members},
                                     {"base", sch.base->description()}});
  r.schedule_hash = schedule_hash(sch);
  if (!(eps > 0.0)) throw ParameterError("epsilon must be positive");

  const Length mh = h / 2;
  if (mh <= cmp + 1) throw ParameterError("horizon too short for the comparison depth");
  const PointView src = transitive_prefix(*fam, h);
  const PointView x = truncate_point(src, mh);
  const Length steps = mh - cmp;
  const Length stride = std::max<Length>(1, steps / 4096);

  // bound chain: K with 1/(K+1) < eps/5, then 2K(|A_m|+|B_m|)/t_m < eps/4
  const Length big_k = static_cast<Length>(std::floor(5.0 / eps));
  json chain = json::array();
  for (unsigned m = 1; m <= depth; ++m) {
    const LevelRecord& lv = sch.level(m);
    const double term = 2.0 * static_cast<double>(big_k) * static_cast<double>(lv.len_a + lv.len_b) /
                        static_cast<double>(lv.t);
    chain.push_back({{"m", m}, {"term", term}, {"below_eps_over_4", term < eps / 4.0}});
  }

  json rows = json::array();
  unsigned found = 0;
  for (unsigned m = 1; m < depth && found == 0; ++m) {
    if (fam->a(m).size() >= mh) break;
    LanguageApprox la{src, {}};
    la.register_special(periodic_point_s4(*fam, m, 0, mh));
    const auto mem = cylinder_members(la, fam->a(m), max_members, mh);
    long double worst = 0;
    Length worst_offset = 0;
    std::string worst_kind;
    std::vector<double> worst_series;
    for (const PointView& z : mem) {
      const DistanceSequence seq = distance_sequence(x, z, steps, cmp);
      PrefixMax pm = max_prefix_average(seq, stride);
      if (pm.worst >= worst) {
        worst = pm.worst;
        worst_offset = z.offset;
        worst_kind = std::string(to_string(z.provenance));
        worst_series = std::move(pm.sampled);
      }
    }
    const bool pass = !mem.empty() && worst < eps;
    rows.push_back({{"m", m},
                    {"members", mem.size()},
                    {"worst_max_prefix_average", static_cast<double>(worst)},
                    {"worst_member", {{"offset", worst_offset}, {"provenance", worst_kind}}},
                    {"below_epsilon", pass}});
    if (pass) {
      found = m;
      Series s{"prefix_average_worst", std::move(worst_series), 1};
      r.series.push_back(std::move(s));
    }
  }
  r.values = {{"m", found == 0 ? json(nullptr) : json(found)},
              {"steps", steps},
              {"series_stride", stride},
              {"per_m", rows},
              {"K", big_k},
              {"bound_chain", chain}};
  r.caveats.push_back("averages include the truncation correction 1/(D+1) for every step without a "
                      "difference inside the comparison depth");
  r.caveats.push_back("the bound chain is informational: its 2K(|A_m|+|B_m|)/t_m term needs levels "
                      "beyond 64-bit lengths");
  r.verdict = found != 0 ? Verdict::pass : Verdict::fail;
  return r;
}

Report prop_devaney(CheckContext& ctx, const json& p) {
  const unsigned depth = param_level(p, "depth", 5);
  const Length n = param_length(p, "n", 4);
  auto fam = ctx.s4(depth);
  const Length h = horizon_of(ctx, p, fam->a(depth).size());
  Report r = start("prop-devaney", {{"depth", depth}, {"n", n}, {"horizon", h},
                                    {"base", fam->schedule().base->description()}});
  r.schedule_hash = schedule_hash(fam->schedule());
  const LanguageApprox la{transitive_prefix(*fam, h), {}};
  const Report tr = check_transitive_desk(la, n);
  const Report dp = check_dense_periodic_desk(*fam, la, n);
  r.values = {{"transitive", {{"verdict", std::string(to_string(tr.verdict))}, {"values", tr.values}}},
              {"dense_periodic",
               {{"verdict", std::string(to_string(dp.verdict))}, {"values", dp.values}}}};
  for (const auto& w : tr.witnesses) r.witnesses.push_back({{"transitive", w}});
  for (const auto& w : dp.witnesses) r.witnesses.push_back({{"periodic", w}});
  r.caveats = tr.caveats;
  r.caveats.insert(r.caveats.end(), dp.caveats.begin(), dp.caveats.end());
  r.verdict = combine(tr.verdict, dp.verdict);
  return r;
}

// ------------------------------------------------------------ patched system

Report thm_unpos(CheckContext& ctx, const json& p) {
  const Length y_len = param_length(p, "y_horizon", 512);
  const Length steps = param_length(p, "steps", 64);
  const auto count = param<std::size_t>(p, "members", 64);
  const std::uint64_t seed = seed_of(ctx, p);
  if (steps + 1 >= y_len) throw ParameterError("y_horizon must exceed steps + 1");
  if (count < 2) throw ParameterError("need at least two members");
  Report r = start("thm-unpos", {{"y_horizon", y_len}, {"steps", steps}, {"members", count},
                                 {"seed", seed}, {"y", "thue-morse"}});
  r.schedule_hash = "none";

  const Word y = minimal_generator(GeneratorDescriptor::thue_morse(), y_len);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> lead(2, 3), sym(0, 3);
  std::vector<PointView> members;
  for (std::size_t k = 0; k < count; ++k) {
    Word w(4);
    w.append(static_cast<Symbol>(lead(rng)), 1);
    for (Length i = 1; i < y_len; ++i) w.append(static_cast<Symbol>(sym(rng)), 1);
    members.push_back(make_point(std::move(w), Provenance::patched_system, k));
  }
  const auto step = [&y](const PointView& q) { return patched_step(q, y); };
  const DiamSequence d = orbit_diam_sequence(members, steps, step);

  std::vector<PointView> after;
  for (const PointView& q : members) after.push_back(step(q));
  bool identical = true;
  for (const PointView& q : after) identical = identical && q.prefix == after.front().prefix;

  Length nonzero = 0;
  json bad = json::array();
  for (Length i = 1; i < d.size(); ++i) {
    if (d.gaps[i] != 0) {
      ++nonzero;
      if (bad.size() < 16) bad.push_back(i);
    }
  }
  r.values = {{"diam_step_0", d.value(0)},
              {"identical_after_one_step", identical},
              {"nonzero_diam_steps", nonzero}};
  r.witnesses = bad;
  r.series.push_back({"diam", d.values(), 0});
  r.caveats.push_back("members are random four-symbol prefixes starting with 2 or 3");
  r.verdict = identical && nonzero == 0 ? Verdict::pass : Verdict::fail;
  return r;
}

// ----------------------------------------------------------- property suites

/// Binary prefixes of one horizon drawn near a small pool of base words, so
/// that first differences fall at many depths.
PointView random_point(std::mt19937_64& rng, const std::vector<Word>& pool, Length horizon) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::string s = pool[pick(rng)].symbols();
  std::uniform_int_distribution<Length> pos(0, horizon);
  const Length flip = pos(rng);
  if (flip < horizon) s[flip] = s[flip] == '0' ? '1' : '0';
  return make_point(Word::from_symbols(s));
}

std::vector<Word> random_pool(std::mt19937_64& rng, Length horizon, std::size_t size) {
  std::bernoulli_distribution bit(0.5);
  std::vector<Word> pool;
  std::string first;
  for (Length i = 0; i < horizon; ++i) first.push_back(bit(rng) ? '1' : '0');
  pool.push_back(Word::from_symbols(first));
  std::uniform_int_distribution<Length> cut(0, horizon - 1);
  while (pool.size() < size) {
    std::string s = first;
    for (Length i = cut(rng); i < horizon; ++i) s[i] = bit(rng) ? '1' : '0';
    pool.push_back(Word::from_symbols(s));
  }
  return pool;
}

FiniteSet random_set(std::mt19937_64& rng, const std::vector<Word>& pool, Length horizon,
                     std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> sz(1, max_size);
  std::vector<PointView> m;
  const std::size_t k = sz(rng);
  for (std::size_t i = 0; i < k; ++i) m.push_back(random_point(rng, pool, horizon));
  return FiniteSet(std::move(m));
}

/// Distances in first-difference form, ordered by value: 0 (no difference)
/// is the smallest distance, otherwise larger g means smaller distance.
/// key() maps them to an order where a larger key is a smaller distance.
Length key(Length g) { return g == 0 ? std::numeric_limits<Length>::max() : g; }

/// 1/a <= 1/b + 1/c in first-difference form (0 meaning distance 0).
bool triangle(Length a, Length b, Length c) {
  if (a == 0) return true;
  if (b == 0 && c == 0) return false;
  if (b == 0) return a >= c;
  if (c == 0) return a >= b;
  return static_cast<u128>(b) * c <= static_cast<u128>(a) * (b + c);
}

Report hausdorff_axioms(CheckContext& ctx, const json& p) {
  const auto trials = param<std::size_t>(p, "trials", 1000);
  const Length horizon = param_length(p, "horizon", 16);
  const auto max_size = param<std::size_t>(p, "max_size", 6);
  const std::uint64_t seed = seed_of(ctx, p);
  if (horizon == 0 || max_size == 0) throw ParameterError("horizon and max_size must be positive");
  Report r = start("hausdorff-axioms",
                   {{"trials", trials}, {"horizon", horizon}, {"max_size", max_size}, {"seed", seed}});
  r.schedule_hash = "none";

  std::mt19937_64 rng(seed);
  Length formula = 0, identity = 0, symmetry = 0, tri = 0;
  json bad = json::array();
  auto note = [&](const char* what, std::size_t t) {
    if (bad.size() < 16) bad.push_back({{"trial", t}, {"axiom", what}});
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const auto pool = random_pool(rng, horizon, 4);
    const FiniteSet a = random_set(rng, pool, horizon, max_size);
    const FiniteSet b = random_set(rng, pool, horizon, max_size);
    const FiniteSet c = random_set(rng, pool, horizon, max_size);
    const HausdorffValue ab = hausdorff_distance(a, b);
    const HausdorffValue ba = hausdorff_distance(b, a);
    const HausdorffValue bc = hausdorff_distance(b, c);
    const HausdorffValue ac = hausdorff_distance(a, c);
    if (!(ab == hausdorff_distance_by_balls(a, b))) ++formula, note("max-min vs balls", t);
    if (hausdorff_distance(a, a).first_difference != 0 || ((ab.first_difference == 0) != (a == b))) {
      ++identity, note("identity", t);
    }
    if (ab.first_difference != ba.first_difference) ++symmetry, note("symmetry", t);
    if (!triangle(ac.first_difference, ab.first_difference, bc.first_difference)) {
      ++tri, note("triangle", t);
    }
  }
  r.values = {{"formula_mismatches", formula},
              {"identity_violations", identity},
              {"symmetry_violations", symmetry},
              {"triangle_violations", tri}};
  r.witnesses = bad;
  r.caveats.push_back("distances compared exactly in first-difference form");
  r.verdict = formula + identity + symmetry + tri == 0 ? Verdict::pass : Verdict::fail;
  return r;
}

Report semi_open(CheckContext& ctx, const json& p) {
  const auto trials = param<std::size_t>(p, "trials", 1000);
  const Length horizon = param_length(p, "horizon", 16);
  const std::uint64_t seed = seed_of(ctx, p);
  if (horizon < 2) throw ParameterError("horizon must be at least 2");
  Report r = start("semi-open", {{"trials", trials}, {"horizon", horizon}, {"seed", seed}});
  r.schedule_hash = "none";

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> fam_size(1, 4);
  Length commute = 0, lipschitz = 0;
  json bad = json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto pool = random_pool(rng, horizon, 4);
    std::vector<FiniteSet> f, g;
    for (std::size_t i = fam_size(rng); i-- > 0;) f.push_back(random_set(rng, pool, horizon, 4));
    for (std::size_t i = fam_size(rng); i-- > 0;) g.push_back(random_set(rng, pool, horizon, 4));

    std::vector<FiniteSet> tf;
    for (const FiniteSet& a : f) tf.push_back(tk_step(a));
    if (!(tk_step(union_factor(f)) == union_factor(tf))) {
      ++commute;
      if (bad.size() < 16) bad.push_back({{"trial", t}, {"identity", "T_K o phi = phi o T_K"}});
    }

    // Hausdorff distance on K(K(X)) over d_H, in key form
    auto directed = [](const std::vector<FiniteSet>& u, const std::vector<FiniteSet>& v) {
      Length worst = std::numeric_limits<Length>::max();
      for (const FiniteSet& a : u) {
        Length best = 0;
        for (const FiniteSet& b : v) best = std::max(best, key(hausdorff_distance(a, b).first_difference));
        worst = std::min(worst, best);
      }
      return worst;
    };
    const Length hh = std::min(directed(f, g), directed(g, f));
    const Length h1 = key(hausdorff_distance(union_factor(f), union_factor(g)).first_difference);
    if (h1 < hh) {
      ++lipschitz;
      if (bad.size() < 16) bad.push_back({{"trial", t}, {"identity", "1-Lipschitz"}});
    }
  }
  r.values = {{"commutation_failures", commute}, {"lipschitz_failures", lipschitz}};
  r.witnesses = bad;
  r.verdict = commute + lipschitz == 0 ? Verdict::pass : Verdict::fail;
  return r;
}

Report remark_2_1_3(CheckContext& ctx, const json& p) {
  const auto trials = param<std::size_t>(p, "trials", 1000);
  const auto max_len = param<std::size_t>(p, "max_length", 300);
  const std::uint64_t seed = seed_of(ctx, p);
  if (max_len == 0) throw ParameterError("max_length must be positive");
  Report r = start("remark-2.1.3", {{"trials", trials}, {"max_length", max_len}, {"seed", seed}});
  r.schedule_hash = "none";

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double bounds[] = {0.5, 1.0, 2.0, 4.0};
  std::uniform_int_distribution<int> which(0, 3);
  Length counter = 0, ante1 = 0, ante2 = 0;
  json bad = json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const double m = bounds[which(rng)];
    const double delta = 0.001 + 0.6 * unit(rng);
    const double sparsity = unit(rng) < 0.5 ? 0.25 * unit(rng) : 1.0;
    std::vector<double> a(len(rng));
    for (double& v : a) v = unit(rng) < sparsity ? m * unit(rng) : (unit(rng) < 0.5 ? 0.0 : std::min(delta, m) * unit(rng));
    const Report one = mean_to_density_check(a, delta, m);
    ante1 += one.values["mean_implies_density"]["antecedent"].get<bool>();
    ante2 += one.values["density_implies_mean"]["antecedent"].get<bool>();
    if (!one.passed()) {
      ++counter;
      if (bad.size() < 16) bad.push_back({{"trial", t}, {"values", one.values}});
    }
  }
  r.values = {{"counterexamples", counter},
              {"mean_antecedent_held", ante1},
              {"density_antecedent_held", ante2}};
  r.witnesses = bad;
  r.caveats.push_back("limsup proxies: maxima over all prefixes of each finite sequence");
  r.verdict = counter == 0 ? Verdict::pass : Verdict::fail;
  return r;
}

Report independence(CheckContext& ctx, const json& p) {
  const unsigned depth = param_level(p, "depth", 3);
  const auto cyl = string_list(p, "cylinders", {"0", "1"});
  const auto times = length_list(p, "times", {0, 1, 2});
  IndependenceOptions opt;
  opt.exhaust_cap = param<std::uint64_t>(p, "cap", opt.exhaust_cap);
  opt.scan_limit = param_length(p, "scan_limit", opt.scan_limit);
  auto fam = ctx.s3(depth);
  const Length h = horizon_of(ctx, p, fam->a(depth).size());
  CylinderTuple tuple;
  for (const std::string& c : cyl) tuple.cylinders.push_back(Word::from_symbols(c));
  if (times.empty()) throw ParameterError("times must be non-empty");
  const Length jh = *std::max_element(times.begin(), times.end()) + 1;
  const LanguageApprox la{transitive_prefix(*fam, h), {}};
  Report r = independence_check(tuple, IndexSet(times, jh), la, opt);
  r.check = "independence";
  r.params["depth"] = depth;
  r.params["horizon"] = h;
  r.schedule_hash = schedule_hash(fam->schedule());
  return r;
}

constexpr CheckInfo kChecks[] = {
    {"lemma-3.1", "S3", "every t_n-window of A_m and B_m has at most |A_n|+|B_n| ones", &lemma_3_1},
    {"lemma-3.2-density", "S3",
     "window densities of E_x decrease along t_1, t_2, t_3 and respect the (r+1)/r bound",
     &lemma_3_2_density},
    {"thm-1.3-cofinite", "S3", "N_T(U, 1/2) contains every time in (m+s, horizon - slack]",
     &thm_1_3_cofinite},
    {"thm-1.3-banach-equi", "S3", "sampled cylinder pairs have Banach mean distance below epsilon",
     &thm_1_3_banach_equi},
    {"lemma-count-3", "S4", "the Count-1, almost-mean-equi-2(1) and Count-3 one-count bounds hold",
     &lemma_count_3},
    {"prop-p-system", "S4", "some [A_m] keeps every sampled Cesaro mean distance to x below epsilon",
     &prop_p_system},
    {"prop-devaney", "S4", "transitivity and dense periodic points hold on length-n words",
     &prop_devaney},
    {"thm-unpos", "patched", "the set of points starting with 2 or 3 collapses after one step",
     &thm_unpos},
    {"thm-1.8-witness", "S3",
     "Q is epsilon-close to P, its hyperspace mean distance stays high, base pairs stay close",
     &thm_1_8_witness},
    {"remark-2.1.3", "-", "mean and density conditions imply each other on random sequences",
     &remark_2_1_3},
    {"hausdorff-axioms", "-", "both Hausdorff formulas agree and the metric axioms hold",
     &hausdorff_axioms},
    {"independence", "S3", "every pattern of cylinders over the times J is realised",
     &independence},
    {"semi-open", "-", "T_K commutes with the union map and the union map is 1-Lipschitz",
     &semi_open},
};

}  // namespace

std::span<const CheckInfo> check_registry() { return kChecks; }

const CheckInfo& find_check(std::string_view name) {
  for (const CheckInfo& c : kChecks) {
    if (c.name == name) return c;
  }
  std::string known;
  for (const CheckInfo& c : kChecks) known += (known.empty() ? "" : ", ") + std::string(c.name);
  throw ParameterError("unknown check '" + std::string(name) + "' (known: " + known + ")");
}

Report run_check(CheckContext& ctx, const CheckRequest& request) {
  const CheckInfo& info = find_check(request.name);
  const json params = request.params.is_null() ? json::object() : request.params;
  if (!params.is_object()) throw ParameterError("check parameters must be an object");
  Report r = info.run(ctx, params);
  r.check = std::string(info.name);
  r.config_hash = ctx.config().hash();
  if (r.schedule_hash.empty()) r.schedule_hash = "none";
  return r;
}

}  // namespace meansense
