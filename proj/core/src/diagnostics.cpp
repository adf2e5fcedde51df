#include "meansense/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meansense/error.hpp"
#include "meansense/occurrence.hpp"

namespace meansense {

IndexSet indicator_set_E(const PointView& y) { return IndexSet::from_indicator(y.prefix, 1); }

std::vector<DensityPoint> prefix_densities(const IndexSet& f, std::span<const Length> lengths) {
  std::vector<DensityPoint> out;
  for (Length n : lengths) {
    if (n == 0 || n > f.horizon()) {
      throw ParameterError("prefix length " + std::to_string(n) + " outside [1, " +
                           std::to_string(f.horizon()) + "]");
    }
    out.push_back({n, f.count_below(n), 0});
  }
  return out;
}

std::vector<DensityPoint> window_densities(const IndexSet& f, std::span<const Length> windows) {
  const OccurrenceIndex idx(f.indicator(), 1);
  std::vector<DensityPoint> out;
  for (Length l : windows) {
    const WindowMax w = idx.max_window(l);
    out.push_back({l, w.max_count, w.witness_position - 1});
  }
  return out;
}

namespace {

nlohmann::json density_rows(const std::vector<DensityPoint>& pts) {
  nlohmann::json rows = nlohmann::json::array();
  for (const DensityPoint& p : pts) {
    rows.push_back({{"length", p.length}, {"count", p.count}, {"value", p.value()},
                    {"witness", p.witness}});
  }
  return rows;
}

}  // namespace

Report upper_density(const IndexSet& f, std::span<const Length> prefix_lengths) {
  Report r;
  r.check = "upper-density";
  r.params = {{"horizon", f.horizon()}, {"prefix_lengths", prefix_lengths}};
  const auto pts = prefix_densities(f, prefix_lengths);
  double head = 0.0;
  Series s{"prefix-density", {}, 0};
  for (const DensityPoint& p : pts) {
    head = std::max(head, p.value());
    s.values.push_back(p.value());
  }
  r.values = {{"headline", head}, {"points", density_rows(pts)}};
  r.series.push_back(std::move(s));
  r.caveats.push_back("limsup proxy: max over the requested prefix lengths");
  return r;
}

Report upper_banach_density(const IndexSet& f, std::span<const Length> window_lengths) {
  Report r;
  r.check = "upper-banach-density";
  r.params = {{"horizon", f.horizon()}, {"window_lengths", window_lengths}};
  const auto pts = window_densities(f, window_lengths);
  double head = 0.0;
  Length largest = 0;
  Series s{"window-density", {}, 0};
  for (const DensityPoint& p : pts) {
    if (p.length >= largest) {
      largest = p.length;
      head = p.value();
    }
    s.values.push_back(p.value());
  }
  r.values = {{"headline", head}, {"points", density_rows(pts)}};
  r.series.push_back(std::move(s));
  r.caveats.push_back("exact window maxima inside the horizon; limsup proxy: largest window");
  return r;
}

AverageReport cesaro_average(const DistanceSequence& seq, Length n) {
  if (n == 0) throw ParameterError("need at least one step");
  if (n > seq.size()) throw HorizonExhausted("distance sequence shorter than " + std::to_string(n));
  long double sum = 0;
  Length truncated = 0;
  for (Length i = 0; i < n; ++i) {
    sum += seq.value(i);
    if (seq.truncated(i)) ++truncated;
  }
  AverageReport a;
  a.value = static_cast<double>(sum / static_cast<long double>(n));
  a.window_begin = 0;
  a.window_end = n;
  a.truncation_correction =
      static_cast<double>(truncated) / static_cast<double>(seq.depth() + 1) / static_cast<double>(n);
  a.samples = n;
  return a;
}

AverageReport cesaro_avg_distance(const PointView& x, const PointView& y, Length n, Length depth) {
  return cesaro_average(distance_sequence(x, y, n, depth), n);
}

AverageReport banach_average(const DistanceSequence& seq, Length window) {
  const Length n = seq.size();
  if (window == 0) throw ParameterError("window length must be positive");
  if (window > n) {
    throw HorizonExhausted("window " + std::to_string(window) + " exceeds the " +
                           std::to_string(n) + " usable steps");
  }
  std::vector<long double> prefix(n + 1, 0);
  std::vector<Length> trunc(n + 1, 0);
  for (Length i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i] + seq.value(i);
    trunc[i + 1] = trunc[i] + (seq.truncated(i) ? 1 : 0);
  }
  long double best = -1;
  Length best_m = 0;
  Length worst_trunc = 0;
  for (Length m = 0; m + window <= n; ++m) {
    long double s = prefix[m + window] - prefix[m];
    if (s > best) {
      best = s;
      best_m = m;
    }
    worst_trunc = std::max(worst_trunc, trunc[m + window] - trunc[m]);
  }
  AverageReport a;
  a.value = static_cast<double>(best / static_cast<long double>(window));
  a.window_begin = best_m;
  a.window_end = best_m + window;
  a.truncation_correction = static_cast<double>(worst_trunc) /
                            static_cast<double>(seq.depth() + 1) / static_cast<double>(window);
  a.samples = n - window + 1;
  return a;
}

AverageReport banach_avg_distance(const PointView& x, const PointView& y, Length window,
                                  Length depth) {
  const Length steps = usable_steps(x, y, depth);
  return banach_average(distance_sequence(x, y, steps, depth), window);
}

std::vector<double> DiamSequence::values() const {
  std::vector<double> out(gaps.size());
  for (std::size_t i = 0; i < gaps.size(); ++i) out[i] = value(i);
  return out;
}

DiamSequence diam_sequence(std::span<const PointView> members, Length steps) {
  DiamSequence d;
  if (members.size() < 2) {
    d.gaps.assign(static_cast<std::size_t>(steps), 0);
    d.degenerate = true;
    return d;
  }
  Length h = std::numeric_limits<Length>::max();
  for (const PointView& m : members) h = std::min(h, m.horizon());
  if (steps > h) {
    throw HorizonExhausted(std::to_string(steps) + " steps exceed the shortest member horizon " +
                           std::to_string(h));
  }
  std::vector<Interval> cols;
  for (std::size_t k = 1; k < members.size(); ++k) {
    if (members[k].prefix.alphabet_size() != members[0].prefix.alphabet_size()) {
      throw AlphabetMismatch("members use different alphabets");
    }
    auto iv = difference_intervals(members[0].prefix, members[k].prefix, h);
    cols.insert(cols.end(), iv.begin(), iv.end());
  }
  std::sort(cols.begin(), cols.end(),
            [](const Interval& a, const Interval& b) { return a.first < b.first; });
  std::vector<Interval> merged;
  for (const Interval& iv : cols) {
    if (!merged.empty() && iv.first <= merged.back().last + 1) {
      merged.back().last = std::max(merged.back().last, iv.last);
    } else {
      merged.push_back(iv);
    }
  }
  d.gaps = next_gaps(merged, steps);
  return d;
}

DiamSequence orbit_diam_sequence(std::vector<PointView> members, Length steps,
                                 const std::function<PointView(const PointView&)>& step) {
  DiamSequence d;
  d.degenerate = members.size() < 2;
  for (Length i = 0; i < steps; ++i) {
    Length best = 0;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const MetricValue mv = point_metric(members[a], members[b]);
        if (mv.first_difference != 0 && (best == 0 || mv.first_difference < best)) {
          best = mv.first_difference;
        }
      }
    }
    d.gaps.push_back(best);
    if (i + 1 < steps) {
      for (PointView& m : members) m = step(m);
    }
  }
  return d;
}

IndexSet sensitivity_times(const DiamSequence& diam, double delta) {
  std::vector<Length> times;
  for (Length i = 0; i < diam.size(); ++i) {
    if (diam.value(i) > delta) times.push_back(i);
  }
  return IndexSet(std::move(times), diam.size());
}

IndexSet sensitivity_times(std::span<const PointView> members, double delta, Length steps) {
  return sensitivity_times(diam_sequence(members, steps), delta);
}

AverageReport diam_mean_avg(std::span<const PointView> members, Length steps) {
  if (steps == 0) throw ParameterError("need at least one step");
  const DiamSequence d = diam_sequence(members, steps);
  Length h = std::numeric_limits<Length>::max();
  for (const PointView& m : members) h = std::min(h, m.horizon());
  long double sum = 0;
  long double corr = 0;
  for (Length i = 0; i < steps; ++i) {
    sum += d.value(i);
    if (d.gaps[i] == 0 && !d.degenerate) corr += 1.0L / static_cast<long double>(h - i + 1);
  }
  AverageReport a;
  a.value = static_cast<double>(sum / steps);
  a.window_end = steps;
  a.truncation_correction = static_cast<double>(corr / steps);
  a.samples = steps;
  return a;
}

Report mean_to_density_check(std::span<const double> a, double delta, double bound) {
  if (!(delta > 0.0)) throw ParameterError("delta must be positive");
  if (!(bound >= 0.0)) throw ParameterError("bound must be non-negative");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] >= 0.0 && a[i] <= bound)) {
      throw InputError("term " + std::to_string(i) + " = " + format_real(a[i]) +
                       " outside [0, " + format_real(bound) + "]");
    }
  }
  const long double d = delta;
  const long double root = std::sqrt(d);
  long double sum = 0;
  long double max_avg = 0;
  long double dens_root = 0;
  long double dens_delta = 0;
  Length cnt_root = 0, cnt_delta = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double v = a[i];
    sum += v;
    if (v >= root) ++cnt_root;
    if (v >= d) ++cnt_delta;
    const long double n = static_cast<long double>(i + 1);
    max_avg = std::max(max_avg, sum / n);
    dens_root = std::max(dens_root, cnt_root / n);
    dens_delta = std::max(dens_delta, cnt_delta / n);
  }
  const bool ante1 = max_avg <= d;
  const bool cons1 = dens_root <= root;
  const long double bound2 = (static_cast<long double>(bound) + 1) * d;
  const bool ante2 = dens_delta <= d;
  const bool cons2 = max_avg <= bound2;

  Report r;
  r.check = "mean-to-density";
  r.params = {{"delta", delta}, {"bound", bound}, {"length", a.size()}};
  r.values["mean_implies_density"] = {
      {"max_prefix_average", static_cast<double>(max_avg)},
      {"antecedent", ante1},
      {"density_at_sqrt_delta", static_cast<double>(dens_root)},
      {"bound", static_cast<double>(root)},
      {"holds", !ante1 || cons1},
      {"margin", static_cast<double>(root - dens_root)}};
  r.values["density_implies_mean"] = {
      {"density_at_delta", static_cast<double>(dens_delta)},
      {"antecedent", ante2},
      {"max_prefix_average", static_cast<double>(max_avg)},
      {"bound", static_cast<double>(bound2)},
      {"holds", !ante2 || cons2},
      {"margin", static_cast<double>(bound2 - max_avg)}};
  r.caveats.push_back("limsup proxies: maxima over all prefixes of the finite sequence");
  r.verdict = ((!ante1 || cons1) && (!ante2 || cons2)) ? Verdict::pass : Verdict::fail;
  return r;
}

Report classify_point(const LanguageApprox& la, const PointView& p, const ClassifyOptions& opt) {
  Report r;
  r.check = "classify-point";
  const bool cesaro = opt.mode == AverageMode::cesaro;
  r.params = {{"epsilon", opt.epsilon},
              {"steps", opt.steps},
              {"mode", cesaro ? "cesaro" : "banach"},
              {"sample_budget", opt.sample_budget},
              {"comparison_depth", opt.comparison_depth}};
  r.caveats.push_back("empirical: sampled cylinder co-members only");

  std::vector<Length> depths = opt.depths;
  if (depths.empty()) {
    for (Length k = 1; k <= p.horizon() / 2 && k <= 1024; k *= 2) depths.push_back(k);
  }
  std::sort(depths.rbegin(), depths.rend());

  const Length member_horizon = cesaro ? opt.steps + opt.comparison_depth : p.horizon();
  if (p.horizon() < member_horizon) {
    throw HorizonExhausted("point horizon " + std::to_string(p.horizon()) + " below the " +
                           std::to_string(member_horizon) + " the averages need");
  }
  const PointView base = cesaro ? make_point(subword_at(p.prefix, 1, member_horizon),
                                             p.provenance, p.offset, p.truncation_note)
                                : p;

  bool sampled = false;
  double worst_upper = -1.0;
  nlohmann::json worst;
  nlohmann::json tried = nlohmann::json::array();
  for (Length k : depths) {
    if (k == 0 || k > member_horizon) continue;
    const Word u = subword_at(p.prefix, 1, k);
    const auto members = cylinder_members(la, u, opt.sample_budget, member_horizon);
    if (members.empty()) {
      tried.push_back({{"depth", k}, {"members", 0}});
      continue;
    }
    sampled = true;
    double depth_worst = -1.0;
    nlohmann::json depth_pair;
    for (const PointView& q : members) {
      const AverageReport a = cesaro ? cesaro_avg_distance(base, q, opt.steps, opt.comparison_depth)
                                     : banach_avg_distance(base, q, opt.steps, opt.comparison_depth);
      if (a.upper() > depth_worst) {
        depth_worst = a.upper();
        depth_pair = {{"depth", k}, {"member_offset", q.offset},
                      {"member_provenance", std::string(to_string(q.provenance))},
                      {"value", a.value}, {"correction", a.truncation_correction}};
      }
    }
    tried.push_back({{"depth", k}, {"members", members.size()}, {"worst", depth_worst}});
    if (depth_worst > worst_upper) {
      worst_upper = depth_worst;
      worst = depth_pair;
    }
    if (depth_worst < opt.epsilon) {
      r.verdict = Verdict::pass;
      r.values = {{"witness_depth", k}, {"worst_upper", depth_worst}, {"tried", tried}};
      r.witnesses.push_back(depth_pair);
      return r;
    }
  }
  r.values = {{"tried", tried}, {"worst_upper", worst_upper}};
  if (!sampled) {
    r.verdict = Verdict::inconclusive;
    r.caveats.push_back("no cylinder co-members were found");
    return r;
  }
  r.verdict = Verdict::fail;
  r.witnesses.push_back(worst);
  return r;
}

}  // namespace meansense
