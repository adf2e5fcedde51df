#include "meansense/hyperspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>

#include "meansense/checked.hpp"
#include "meansense/error.hpp"
#include "meansense/rle_text.hpp"

namespace meansense {

namespace {

constexpr Length kNone = std::numeric_limits<Length>::max();

// First-difference matrix g[a][b], kNone where the prefixes agree.
struct PairTable {
  std::vector<std::vector<Length>> g;
  bool any_truncated = false;
};

PairTable pair_table(const FiniteSet& a, const FiniteSet& b) {
  if (a.alphabet_size() != b.alphabet_size()) throw AlphabetMismatch("sets over different alphabets");
  PairTable t;
  t.g.assign(a.size(), std::vector<Length>(b.size(), kNone));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const MetricValue mv = point_metric(a.members()[i], b.members()[j]);
      if (mv.truncated) {
        t.any_truncated = true;
      } else {
        t.g[i][j] = mv.first_difference;
      }
    }
  }
  return t;
}

HausdorffValue from_gap(Length g, bool truncated) {
  return {g == kNone ? 0 : g, truncated};
}

}  // namespace

FiniteSet::FiniteSet(std::vector<PointView> members) : members_(std::move(members)) {
  if (members_.empty()) throw ParameterError("a finite set needs at least one member");
  const unsigned k = members_.front().prefix.alphabet_size();
  for (const PointView& m : members_) {
    if (m.prefix.alphabet_size() != k) throw AlphabetMismatch("members over different alphabets");
  }
  std::stable_sort(members_.begin(), members_.end(),
                   [](const PointView& x, const PointView& y) { return x.prefix < y.prefix; });
  members_.erase(std::unique(members_.begin(), members_.end(),
                             [](const PointView& x, const PointView& y) {
                               return x.prefix == y.prefix;
                             }),
                 members_.end());
  horizon_ = members_.front().horizon();
  for (const PointView& m : members_) horizon_ = std::min(horizon_, m.horizon());
}

bool operator==(const FiniteSet& a, const FiniteSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.members_[i].prefix == b.members_[i].prefix)) return false;
  }
  return true;
}

HausdorffValue hausdorff_distance(const FiniteSet& a, const FiniteSet& b) {
  const PairTable t = pair_table(a, b);
  // In gap form d = 1/g: max-min of distances is min-max of gaps.
  Length best = kNone;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Length far = 0;
    for (std::size_t j = 0; j < b.size(); ++j) far = std::max(far, t.g[i][j]);
    best = std::min(best, far);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    Length far = 0;
    for (std::size_t i = 0; i < a.size(); ++i) far = std::max(far, t.g[i][j]);
    best = std::min(best, far);
  }
  return from_gap(best, t.any_truncated);
}

HausdorffValue hausdorff_distance_by_balls(const FiniteSet& a, const FiniteSet& b) {
  const PairTable t = pair_table(a, b);
  std::vector<Length> radii;
  for (const auto& row : t.g) radii.insert(radii.end(), row.begin(), row.end());
  std::sort(radii.begin(), radii.end(), std::greater<>());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  // Every eps > 1/c works iff each point of one set is within 1/c of the other.
  auto covers = [&](Length c) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      bool hit = false;
      for (std::size_t i = 0; i < a.size() && !hit; ++i) hit = t.g[i][j] >= c;
      if (!hit) return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      bool hit = false;
      for (std::size_t j = 0; j < b.size() && !hit; ++j) hit = t.g[i][j] >= c;
      if (!hit) return false;
    }
    return true;
  };
  for (Length c : radii) {
    if (covers(c)) return from_gap(c, t.any_truncated);
  }
  return from_gap(1, t.any_truncated);
}

FiniteSet tk_step(const FiniteSet& a) {
  if (a.horizon() < 2) throw HorizonExhausted("finite set horizon below 2");
  std::vector<PointView> next;
  next.reserve(a.size());
  for (const PointView& m : a.members()) next.push_back(m.shifted(1));
  return FiniteSet(std::move(next));
}

bool vietoris_member(const FiniteSet& a, std::span<const Word> opens) {
  std::vector<bool> claimed(opens.size(), false);
  for (const PointView& m : a.members()) {
    bool inside = false;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (m.starts_with(opens[i])) {
        inside = true;
        claimed[i] = true;
      }
    }
    if (!inside) return false;
  }
  return std::all_of(claimed.begin(), claimed.end(), [](bool c) { return c; });
}

FiniteSet union_factor(std::span<const FiniteSet> family) {
  if (family.empty()) throw ParameterError("union of an empty family");
  std::vector<PointView> all;
  for (const FiniteSet& s : family) all.insert(all.end(), s.members().begin(), s.members().end());
  return FiniteSet(std::move(all));
}

nlohmann::json to_json(const FiniteSet& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const PointView& m : a.members()) {
    out.push_back({{"rle", to_rle_text(m.prefix)},
                   {"provenance", std::string(to_string(m.provenance))},
                   {"offset", m.offset}});
  }
  return out;
}

FiniteSet finite_set_from_json(const nlohmann::json& j) {
  std::vector<PointView> members;
  try {
    for (const auto& e : j) {
      members.push_back(make_point(parse_rle_text(e.at("rle").get<std::string>()),
                                   provenance_from_string(e.at("provenance").get<std::string>()),
                                   e.value("offset", Length{0})));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed finite set: ") + e.what());
  }
  return FiniteSet(std::move(members));
}

HyperWitness hyper_witness_s3(const WordFamily& family, LanguageApprox& la, const FiniteSet& p,
                              double epsilon, Length horizon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ParameterError("epsilon must lie in (0, 1]");
  const Length n_min = static_cast<Length>(std::floor(1.0 / epsilon)) + 1;  // N > 1/eps

  Report r;
  r.check = "hyper-witness";
  r.params = {{"epsilon", epsilon}, {"horizon", horizon}, {"members", p.size()}};
  r.caveats.push_back(
      "each '...' continuation is realised as the 0^inf tail after the shown block; every Q "
      "member is an explicit limit of words in B_n and is registered in the language");

  std::vector<PointView> q;
  std::vector<Length> s_of;
  nlohmann::json per_member = nlohmann::json::array();
  for (const PointView& pk : p.members()) {
    if (pk.provenance != Provenance::transitive_shift) {
      throw WitnessUnavailable("member at offset " + std::to_string(pk.offset) +
                               " is not a shift of the transitive point");
    }
    const Length m = pk.offset;
    SuffixAlignment al;
    try {
      al = find_suffix_alignment(family, m, n_min + 1);
    } catch (const WitnessUnavailable& e) {
      throw WitnessUnavailable("member sigma^" + std::to_string(m) + " x: " + e.what());
    }
    const Length s = al.s;
    if (pk.horizon() < s) {
      throw WitnessUnavailable("member sigma^" + std::to_string(m) + " x has horizon " +
                               std::to_string(pk.horizon()) + " < s = " + std::to_string(s));
    }
    if (horizon < s + 1) throw ParameterError("horizon too short for the chosen N_k");
    const PointView first = witness_zj_s3(family, m, s, 0, horizon);
    const Word w = subword_at(first.prefix, 1, s);
    if (!pk.starts_with(w)) {
      throw WitnessUnavailable("member sigma^" + std::to_string(m) +
                               " x does not start with its aligned block");
    }
    q.push_back(first);
    for (Length j = 1; s + j + 1 <= horizon; ++j) {
      Word z = w;
      z.append(0, j).append(1, 1).append(0, horizon - s - j - 1);
      q.push_back(make_point(std::move(z), Provenance::explicit_limit, j,
                             "w 0^j 1 0^inf, w a suffix of A_" + std::to_string(al.level)));
    }
    Word tail = w;
    tail.append(0, horizon - s);
    q.push_back(make_point(std::move(tail), Provenance::explicit_limit, 0, "w 0^inf"));
    s_of.push_back(s);
    per_member.push_back({{"offset", m}, {"N_k", s - 1}, {"s", s}, {"level", al.level},
                          {"inv_N_k", 1.0 / static_cast<double>(s - 1)}});
  }
  for (const PointView& z : q) la.register_special(z);
  FiniteSet qs(std::move(q));

  const HausdorffValue dh = hausdorff_distance(p, qs);
  const double dh_bound = dh.value() + (dh.truncated ? 1.0 / static_cast<double>(p.horizon() + 1) : 0.0);

  // Good set G: steps where every p_k reads 0; past max s some q' reads 1.
  const Length s_max = *std::max_element(s_of.begin(), s_of.end());
  const Length g_horizon = std::min(p.horizon(), horizon);
  std::vector<Length> good;
  {
    std::vector<IndexSet> ones;
    for (const PointView& pk : p.members()) ones.push_back(indicator_set_E(pk));
    for (Length i = 0; i < g_horizon; ++i) {
      bool zero = true;
      for (const IndexSet& e : ones) zero = zero && !e.contains(i);
      if (zero) good.push_back(i);
    }
  }
  const IndexSet g(good, g_horizon);
  nlohmann::json forced = nlohmann::json::array();
  Length forced_count = 0;
  for (Length i : good) {
    if (i < s_max || i + 1 > horizon) continue;
    ++forced_count;
    if (forced.size() < 32) {
      forced.push_back({{"step", i}, {"q_offset_j", i - s_of.front()}, {"reason", "q'_{i+1} = 1"}});
    }
  }
  r.witnesses = forced;
  r.values = {{"per_member", per_member},
              {"hausdorff_P_Q", dh.value()},
              {"hausdorff_P_Q_upper", dh_bound},
              {"hausdorff_first_difference", dh.first_difference},
              {"q_size", qs.size()},
              {"good_set_size", g.size()},
              {"good_set_density", static_cast<double>(g.size()) / static_cast<double>(g_horizon)},
              {"forced_steps", forced_count}};
  r.verdict = dh_bound < epsilon ? Verdict::pass : Verdict::fail;
  return {std::move(qs), std::move(r)};
}

namespace {

// Streams the symbols of a word front to back.
class SymbolCursor {
 public:
  explicit SymbolCursor(const Word& w) : w_(&w) {}
  Symbol next() {
    ++pos_;
    while (w_->run_end(r_) < pos_) ++r_;
    return w_->runs()[r_].symbol;
  }

 private:
  const Word* w_;
  std::size_t r_ = 0;
  Length pos_ = 0;
};

}  // namespace

HyperSequence hausdorff_sequence(const FiniteSet& p, const FiniteSet& q, Length steps,
                                 Length depth) {
  if (p.alphabet_size() != q.alphabet_size()) throw AlphabetMismatch("sets over different alphabets");
  const unsigned bits = p.alphabet_size() == 2 ? 1 : 2;
  depth = std::min<Length>(depth, 64 / bits);
  if (depth == 0) throw ParameterError("comparison depth must be positive");
  const Length h = std::min(p.horizon(), q.horizon());
  if (steps > h || depth > h - steps) {
    throw HorizonExhausted(std::to_string(steps) + " steps at depth " + std::to_string(depth) +
                           " need horizon " + std::to_string(steps + depth) + ", have " +
                           std::to_string(h));
  }
  const unsigned width = static_cast<unsigned>(depth) * bits;
  const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);

  auto start = [&](const FiniteSet& s, std::vector<SymbolCursor>& cur, std::vector<std::uint64_t>& key) {
    for (const PointView& m : s.members()) {
      cur.emplace_back(m.prefix);
      std::uint64_t k = 0;
      for (Length t = 0; t < depth; ++t) k = (k << bits) | cur.back().next();
      key.push_back(k);
    }
  };
  std::vector<SymbolCursor> pc, qc;
  std::vector<std::uint64_t> pk, qk;
  start(p, pc, pk);
  start(q, qc, qk);

  // Window symbol t (1-based) sits at bits [(depth-t)*bits, ...).
  auto gap = [&](std::uint64_t a, std::uint64_t b) -> Length {
    const std::uint64_t x = a ^ b;
    if (x == 0) return depth + 1;
    const unsigned top = 63u - static_cast<unsigned>(std::countl_zero(x));
    return depth - top / bits;
  };

  HyperSequence out;
  out.depth = depth;
  out.gaps.reserve(static_cast<std::size_t>(steps));
  std::vector<Length> p_far(pk.size());
  for (Length i = 0; i < steps; ++i) {
    Length best = depth + 1;
    std::fill(p_far.begin(), p_far.end(), 0);
    for (std::size_t b = 0; b < qk.size(); ++b) {
      Length q_far = 0;
      for (std::size_t a = 0; a < pk.size(); ++a) {
        const Length g = gap(pk[a], qk[b]);
        q_far = std::max(q_far, g);
        p_far[a] = std::max(p_far[a], g);
      }
      best = std::min(best, q_far);
    }
    for (Length f : p_far) best = std::min(best, f);
    out.gaps.push_back(best);
    if (i + 1 < steps) {
      for (std::size_t a = 0; a < pk.size(); ++a) pk[a] = ((pk[a] << bits) | pc[a].next()) & mask;
      for (std::size_t b = 0; b < qk.size(); ++b) qk[b] = ((qk[b] << bits) | qc[b].next()) & mask;
    }
  }
  return out;
}

AverageReport hyper_mean_avg(const FiniteSet& p, const FiniteSet& q, Length steps, Length depth) {
  if (steps == 0) throw ParameterError("need at least one step");
  const HyperSequence seq = hausdorff_sequence(p, q, steps, depth);
  long double lo = 0, hi = 0;
  for (Length i = 0; i < steps; ++i) {
    lo += seq.lower(i);
    hi += seq.upper(i);
  }
  AverageReport a;
  a.value = static_cast<double>(lo / steps);
  a.truncation_correction = static_cast<double>((hi - lo) / steps);
  a.window_end = steps;
  a.samples = steps;
  return a;
}

Report independence_check(const CylinderTuple& t, const IndexSet& j, const LanguageApprox& la,
                          const IndependenceOptions& opt) {
  const std::size_t k = t.arity();
  if (k == 0) throw ParameterError("cylinder tuple is empty");
  for (const Word& c : t.cylinders) {
    if (c.empty()) throw ParameterError("cylinder words must be non-empty");
  }
  const auto& times = j.members();
  std::uint64_t patterns = 1;
  for (std::size_t i = 0; i < times.size(); ++i) {
    auto next = checked_mul(patterns, k);
    if (!next || *next > opt.exhaust_cap) {
      throw CapExceeded(std::to_string(k) + "^" + std::to_string(times.size()) +
                            " patterns exceed the cap of " + std::to_string(opt.exhaust_cap),
                        next ? *next : std::numeric_limits<std::uint64_t>::max());
    }
    patterns = *next;
  }

  Report r;
  r.check = "independence";
  nlohmann::json cyl = nlohmann::json::array();
  for (const Word& c : t.cylinders) cyl.push_back(c.symbols());
  r.params = {{"cylinders", cyl}, {"J", times}, {"exhaust_cap", opt.exhaust_cap},
              {"scan_limit", opt.scan_limit}};
  r.caveats.push_back("approximation-relative: FAIL means no witness among the scanned points");

  struct Hit {
    std::size_t source;  // 0 = source prefix, i = special i-1
    Length shift;
  };
  std::vector<std::optional<Hit>> found(static_cast<std::size_t>(patterns));
  std::uint64_t remaining = patterns;

  Length max_len = 0;
  for (const Word& c : t.cylinders) max_len = std::max(max_len, c.size());
  const Length span_needed = (times.empty() ? 0 : times.back()) + max_len;
  std::vector<std::vector<Symbol>> cyl_syms;
  for (const Word& c : t.cylinders) cyl_syms.push_back(c.expand());

  std::vector<const PointView*> sources{&la.source};
  for (const PointView& s : la.specials) sources.push_back(&s);

  for (std::size_t src = 0; src < sources.size() && remaining > 0; ++src) {
    const Word& w = sources[src]->prefix;
    if (w.size() < span_needed || w.alphabet_size() != t.cylinders.front().alphabet_size()) continue;
    const Length shifts = std::min<Length>(w.size() - span_needed + 1, opt.scan_limit);
    const Length seg_len = shifts + span_needed - 1;
    const std::vector<Symbol> seg = subword_at(w, 1, seg_len).expand();
    // match[c][p]: cylinder c occurs at 0-based position p of the segment.
    std::vector<std::vector<char>> match(k, std::vector<char>(static_cast<std::size_t>(seg_len), 0));
    for (std::size_t c = 0; c < k; ++c) {
      const auto& pat = cyl_syms[c];
      for (Length pos = 0; pos + pat.size() <= seg_len; ++pos) {
        match[c][pos] = std::equal(pat.begin(), pat.end(), seg.begin() + static_cast<std::ptrdiff_t>(pos));
      }
    }
    std::vector<std::vector<std::size_t>> options(times.size());
    for (Length sh = 0; sh < shifts && remaining > 0; ++sh) {
      bool ok = true;
      for (std::size_t a = 0; a < times.size() && ok; ++a) {
        options[a].clear();
        for (std::size_t c = 0; c < k; ++c) {
          if (match[c][sh + times[a]]) options[a].push_back(c);
        }
        ok = !options[a].empty();
      }
      if (!ok) continue;
      // Enumerate the product of per-time options (an odometer).
      std::vector<std::size_t> idx(times.size(), 0);
      while (true) {
        std::uint64_t code = 0;
        for (std::size_t a = 0; a < times.size(); ++a) code = code * k + options[a][idx[a]];
        if (!found[code]) {
          found[code] = Hit{src, sh};
          --remaining;
        }
        bool done = true;
        for (std::size_t a = times.size(); a > 0; --a) {
          if (++idx[a - 1] < options[a - 1].size()) {
            done = false;
            break;
          }
          idx[a - 1] = 0;
        }
        if (done) break;
      }
    }
  }

  std::uint64_t missing = 0;
  for (std::uint64_t code = 0; code < patterns; ++code) {
    std::string label;
    std::uint64_t rest = code;
    std::vector<std::size_t> digits(times.size());
    for (std::size_t a = times.size(); a > 0; --a) {
      digits[a - 1] = static_cast<std::size_t>(rest % k);
      rest /= k;
    }
    for (std::size_t a = 0; a < digits.size(); ++a) {
      if (a) label += ',';
      label += std::to_string(digits[a] + 1);
    }
    nlohmann::json row = {{"pattern", label}};
    if (found[code]) {
      row["source"] = found[code]->source == 0 ? std::string("source")
                                               : "special " + std::to_string(found[code]->source - 1);
      row["shift"] = found[code]->shift;
    } else {
      ++missing;
      row["source"] = nullptr;
    }
    r.witnesses.push_back(std::move(row));
  }
  r.values = {{"patterns", patterns}, {"realised", patterns - missing}, {"missing", missing}};
  r.verdict = missing == 0 ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace meansense
