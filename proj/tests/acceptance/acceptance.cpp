// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "meansense/checks.hpp"
#include "meansense/constructions.hpp"
#include "meansense/distance.hpp"
#include "meansense/error.hpp"
#include "meansense/occurrence.hpp"
#include "meansense/schedule.hpp"

namespace ms = meansense;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ms::Report check(ms::CheckContext& ctx, const char* name, json params = json::object()) {
  return ms::run_check(ctx, {name, std::move(params)});
}

std::string brief(const ms::Report& r) {
  std::string s = std::string(ms::to_string(r.verdict));
  const std::string v = r.values.dump();
  return s + " " + (v.size() > 220 ? v.substr(0, 220) + "..." : v);
}

Outcome verdict_is_pass(const ms::Report& r) { return {r.verdict == ms::Verdict::pass, brief(r)}; }

// 1. schedule values, lengths and one-counts
Outcome schedules() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;
  auto expect = [&](bool c, const std::string& what) {
    if (!c && ok) why = what;
    ok = ok && c;
  };

  struct Row {
    ms::Length k, a, b, t;
  };
  const Row s3_rows[] = {{9, 3, 3, 24},
                         {1788, 27, 840, 4443},
                         {60345081, 4470, 20106087, 140800719},
                         {79306924283762352ull, 140805189, 19826730789330210ull, 0}};
  const ms::Schedule s3 = ms::build_schedule_s3(4);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto& l = s3.level(n);
    const Row& w = s3_rows[n - 1];
    expect(l.k == w.k && l.len_a == w.a && l.len_b == w.b, "S3 level " + std::to_string(n));
    if (n < 4) expect(l.t == w.t, "S3 t_" + std::to_string(n));
  }
  try {
    ms::build_schedule_s3(5);
    expect(false, "S3 depth 5 did not overflow");
  } catch (const ms::OverflowError& e) {
    expect(e.level() == 5, "overflow level");
  }

  const Row s4_rows[] = {{7, 3, 1, 0}, {469, 21, 26, 0}, {40840, 1006, 1078, 0},
                         {6830574, 84770, 87906, 0}, {2231216441ull, 13918594, 14178098, 0}};
  const ms::Schedule s4 = ms::build_schedule_s4(5, ms::GeneratorDescriptor::constant_zero());
  for (unsigned n = 1; n <= 5; ++n) {
    const auto& l = s4.level(n);
    const Row& w = s4_rows[n - 1];
    expect(l.k == w.k && l.len_a == w.a && l.len_b == w.b, "S4 level " + std::to_string(n));
  }

  // one-counts against the closed-form recursion
  const ms::WordFamily f(s3);
  ms::Length oa = 3, ob = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    if (n > 1) {
      const ms::Length prev = oa;
      oa = 2 * oa + ob;
      ob = (s3.level(n).len_a + 1) * prev + s3.level(n).len_a;
    }
    expect(f.a(n).size() == s3.level(n).len_a && ms::count_ones(f.a(n)) == oa,
           "o(A_" + std::to_string(n) + ")");
    if (f.has_b(n)) {
      expect(f.b(n).size() == s3.level(n).len_b && ms::count_ones(f.b(n)) == ob,
             "o(B_" + std::to_string(n) + ")");
    }
  }
  const ms::WordFamily g(s4);
  for (unsigned n = 1; n <= 5; ++n) {
    expect(g.a(n).size() == s4.level(n).len_a && g.b(n).size() == s4.level(n).len_b,
           "S4 word lengths " + std::to_string(n));
  }
  const double secs = seconds_since(t0);
  expect(secs < 1.0, "took longer than 1 s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "S3 depth 4, S4 depth 5, overflow at 5, %.3f s", secs);
  return {ok, ok ? buf : why + "; " + buf};
}

// 2. max window counts, two parameter pairs, under two minutes
Outcome max_windows(ms::CheckContext& ctx) {
  const auto t0 = Clock::now();
  const ms::Report a = check(ctx, "lemma-3.1", {{"n", 1}, {"m", 3}});
  const ms::Report b = check(ctx, "lemma-3.1", {{"n", 2}, {"m", 4}});
  const double secs = seconds_since(t0);
  const bool ok = a.passed() && b.passed() && secs < 120.0;
  return {ok, "(1,3) " + brief(a) + " | (2,4) " + brief(b) + " | " + std::to_string(secs) + " s"};
}

// 13. RLE algorithms against expanded-string oracles
Outcome oracles() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(1, 10000);
  auto random_word = [&](std::size_t n) {
    std::bernoulli_distribution keep(0.9);
    std::bernoulli_distribution bit(0.5);
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(!s.empty() && keep(rng) ? s.back() : (bit(rng) ? '1' : '0'));
    return s;
  };
  std::size_t bad_count = 0, bad_window = 0, bad_dist = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const std::string s = random_word(len(rng));
    const ms::OccurrenceIndex idx(ms::Word::from_symbols(s));
    std::vector<ms::Length> pre(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) pre[i + 1] = pre[i] + (s[i] == '1');

    std::uniform_int_distribution<std::size_t> pos(1, s.size());
    std::size_t i = pos(rng), j = pos(rng);
    if (i > j) std::swap(i, j);
    if (idx.count(i, j) != pre[j] - pre[i - 1]) ++bad_count;

    const std::size_t L = pos(rng);
    ms::Length best = 0, first = 1;
    for (std::size_t m = 1; m + L - 1 <= s.size(); ++m) {
      const ms::Length c = pre[m + L - 1] - pre[m - 1];
      if (c > best || m == 1) {
        if (m == 1 || c > best) first = m;
        best = std::max(best, c);
      }
    }
    const ms::WindowMax w = idx.max_window(L);
    if (w.max_count != best || w.witness_position != first) ++bad_window;

    std::string y = s;
    std::uniform_int_distribution<std::size_t> flip(0, s.size() - 1);
    for (int k = 0; k < 3; ++k) {
      char& c = y[flip(rng)];
      c = c == '0' ? '1' : '0';
    }
    const ms::Length depth = std::min<ms::Length>(64, s.size());
    const ms::Length steps = s.size() - depth;
    const ms::DistanceSequence seq = ms::distance_sequence(
        ms::make_point(ms::Word::from_symbols(s)), ms::make_point(ms::Word::from_symbols(y)), steps, depth);
    for (ms::Length st = 0; st < steps; ++st) {
      ms::Length g = 0;
      for (ms::Length k = 0; k < depth; ++k) {
        if (s[st + k] != y[st + k]) {
          g = k + 1;
          break;
        }
      }
      if (seq.gap(st) != g) {
        ++bad_dist;
        break;
      }
    }
  }
  const bool ok = bad_count == 0 && bad_window == 0 && bad_dist == 0;
  return {ok, std::to_string(trials) + " trials each; mismatches: counts " + std::to_string(bad_count) +
                  ", window maxima " + std::to_string(bad_window) + ", per-step distances " +
                  std::to_string(bad_dist)};
}

}  // namespace

int main() {
  ms::RunConfig cfg;
  cfg.seed = 1;
  ms::CheckContext ctx(cfg);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"schedules and word lengths", [] { return schedules(); }},
      {"lemma-3.1 max windows", [&] { return max_windows(ctx); }},
      {"lemma-3.2-density", [&] { return verdict_is_pass(check(ctx, "lemma-3.2-density")); }},
      {"thm-1.3-cofinite H=1e5", [&] { return verdict_is_pass(check(ctx, "thm-1.3-cofinite", {{"horizon", 100000}})); }},
      {"thm-1.3-banach-equi", [&] { return verdict_is_pass(check(ctx, "thm-1.3-banach-equi")); }},
      {"prop-p-system", [&] { return verdict_is_pass(check(ctx, "prop-p-system")); }},
      {"prop-devaney", [&] { return verdict_is_pass(check(ctx, "prop-devaney")); }},
      {"thm-unpos", [&] { return verdict_is_pass(check(ctx, "thm-unpos")); }},
      {"thm-1.8-witness", [&] { return verdict_is_pass(check(ctx, "thm-1.8-witness")); }},
      {"hausdorff-axioms 1000 trials", [&] { return verdict_is_pass(check(ctx, "hausdorff-axioms", {{"trials", 1000}})); }},
      {"semi-open 1000 trials", [&] { return verdict_is_pass(check(ctx, "semi-open", {{"trials", 1000}})); }},
      {"remark-2.1.3 1000 trials", [&] { return verdict_is_pass(check(ctx, "remark-2.1.3", {{"trials", 1000}})); }},
      {"oracle equivalences", [] { return oracles(); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %2zu %-30s %s  [%.1f s]  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
