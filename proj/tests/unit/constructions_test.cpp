#include <gtest/gtest.h>

#include "meansense/constructions.hpp"
#include "meansense/error.hpp"
#include "meansense/occurrence.hpp"
#include "naive.hpp"

using namespace meansense;

namespace {

std::string zeros(Length n) { return std::string(static_cast<std::size_t>(n), '0'); }

// String-level S3 recursion, only for small levels.
void s3_strings(const Schedule& s, unsigned depth, std::vector<std::string>& a, std::vector<std::string>& b) {
  a = {"111"};
  b = {"000"};
  for (unsigned n = 2; n <= depth; ++n) {
    const Length k = s.level(n - 1).k;
    a.push_back(a.back() + zeros(k) + b.back() + zeros(k) + a.back());
    const std::size_t la = a.back().size();
    std::string bn;
    for (std::size_t i = 1; i <= la; ++i) bn += a[n - 2] + zeros(i - 1) + "1" + zeros(la - i);
    bn += a[n - 2] + zeros(la);
    b.push_back(bn);
  }
}

void s4_strings(const Schedule& s, unsigned depth, const std::string& y, std::vector<std::string>& a,
                std::vector<std::string>& b) {
  a = {"101"};
  b = {y.substr(0, 1)};
  for (unsigned n = 2; n <= depth; ++n) {
    const Length k = s.level(n - 1).k;
    a.push_back(a.back() + zeros(k) + b.back() + zeros(k) + a.back());
    std::string bn = y.substr(0, n);
    for (unsigned i = 1; i < n; ++i) {
      for (unsigned r = 0; r < n - i; ++r) bn += a[i - 1] + zeros(s.level(i + 1).len_a);
    }
    b.push_back(bn);
  }
}

}  // namespace

TEST(ConstructionsS3, WordsMatchStringRecursion) {
  const WordFamily f(build_schedule_s3(3));
  std::vector<std::string> a, b;
  s3_strings(f.schedule(), 3, a, b);
  EXPECT_EQ(f.a(1).symbols(), "111");
  EXPECT_EQ(f.b(1).symbols(), "000");
  EXPECT_EQ(f.a(2).symbols(), a[1]);
  EXPECT_EQ(f.b(2).symbols(), b[1]);
  EXPECT_EQ(f.a(3).symbols(), a[2]);
  EXPECT_EQ(f.a(2).symbols(), "111" + zeros(9) + "000" + zeros(9) + "111");
}

TEST(ConstructionsS3, LengthsAndOneCountsMatchClosedForms) {
  const WordFamily f(build_schedule_s3(4));
  const Schedule& s = f.schedule();
  Length oa = 3, ob = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    if (n > 1) {
      const Length la = s.level(n).len_a;
      const Length oa_prev = oa;
      oa = 2 * oa + ob;
      ob = (la + 1) * oa_prev + la;
    }
    EXPECT_EQ(f.a(n).size(), s.level(n).len_a) << n;
    EXPECT_EQ(count_ones(f.a(n)), oa) << n;
    if (f.has_b(n)) {
      EXPECT_EQ(f.b(n).size(), s.level(n).len_b) << n;
      EXPECT_EQ(count_ones(f.b(n)), ob) << n;
    }
  }
  EXPECT_TRUE(f.has_b(3));
  EXPECT_FALSE(f.has_b(4));
  EXPECT_THROW(f.b(4), ResourceError);
}

TEST(ConstructionsS3, EachANStartsAndEndsWithEarlierLevels) {
  const WordFamily f(build_schedule_s3(4));
  for (unsigned j = 2; j <= 4; ++j) {
    for (unsigned i = 1; i < j; ++i) {
      EXPECT_TRUE(starts_with(f.a(j), f.a(i)));
      EXPECT_TRUE(ends_with(f.a(j), f.a(i)));
    }
  }
}

TEST(ConstructionsS3, TransitivePrefixLimits) {
  const WordFamily f(build_schedule_s3(3));
  const Length limit = transitive_horizon_limit(f);
  EXPECT_EQ(limit, f.a(3).size() + f.schedule().level(3).k);
  const PointView x = transitive_prefix(f, limit);
  EXPECT_TRUE(x.starts_with(f.a(3)));
  EXPECT_EQ(x.horizon(), limit);
  EXPECT_EQ(x.prefix.back(), 0);
  EXPECT_THROW(transitive_prefix(f, limit + 1), DepthError);
  EXPECT_EQ(transitive_prefix(f, 100).prefix, subword_at(f.a(3), 1, 100));
}

TEST(ConstructionsS3, SuffixAlignmentAndWitnesses) {
  const WordFamily f(build_schedule_s3(4));
  const PointView x = transitive_prefix(f, f.a(4).size());
  const SuffixAlignment al = find_suffix_alignment(f, 5, 1);
  EXPECT_EQ(al.s, 22u);
  const Word w = subword_at(x.prefix, 6, al.s);
  EXPECT_TRUE(ends_with(f.a(al.level), w));
  for (Length j : {0u, 1u, 17u}) {
    const PointView z = witness_zj_s3(f, 5, al.s, j, 200);
    const std::string want = w.symbols() + zeros(j) + "1" + zeros(200 - al.s - j - 1);
    EXPECT_EQ(z.prefix.symbols(), want);
  }
  // x_[6, 6] = 0 is no suffix of any A_i
  EXPECT_THROW(witness_zj_s3(f, 5, 1, 0, 50), WitnessUnavailable);
}

TEST(ConstructionsS3, EveryZjPrefixOccursInTheBuiltLanguage) {
  // z_j's block w 0^j 1 sits inside block j+1 of B_n for n above the alignment level.
  const WordFamily f(build_schedule_s3(3));
  const SuffixAlignment al = find_suffix_alignment(f, 5, 1);
  for (Length j = 0; j < 40; ++j) {
    const PointView z = witness_zj_s3(f, 5, al.s, j, al.s + j + 1);
    EXPECT_FALSE(find_occurrences(f.b(3), z.prefix).empty()) << j;
  }
}

TEST(ConstructionsS4, WordsMatchStringRecursion) {
  for (const auto& g : {GeneratorDescriptor::constant_zero(), GeneratorDescriptor::thue_morse()}) {
    const WordFamily f(build_schedule_s4(3, g));
    const std::string y = minimal_generator(g, 16).symbols();
    std::vector<std::string> a, b;
    s4_strings(f.schedule(), 3, y, a, b);
    for (unsigned n = 1; n <= 3; ++n) {
      EXPECT_EQ(f.a(n).symbols(), a[n - 1]) << g.description() << " n=" << n;
      EXPECT_EQ(f.b(n).symbols(), b[n - 1]) << g.description() << " n=" << n;
      EXPECT_EQ(f.b(n).size(), f.schedule().level(n).len_b);
    }
  }
}

TEST(ConstructionsS4, PeriodicPointsMatchStrings) {
  const WordFamily f(build_schedule_s4(3, GeneratorDescriptor::constant_zero()));
  for (unsigned n = 1; n <= 2; ++n) {
    const std::string period = f.a(n).symbols() + zeros(f.a(n + 1).size());
    std::string rep;
    while (rep.size() < 5000) rep += period;
    for (Length t : {Length{0}, Length{1}, Length{period.size() - 1}}) {
      const PointView p = periodic_point_s4(f, n, t, 3000);
      EXPECT_EQ(p.prefix.symbols(), rep.substr(t, 3000)) << n << " " << t;
      EXPECT_EQ(p.provenance, Provenance::periodic);
    }
    EXPECT_THROW(periodic_point_s4(f, n, period.size(), 10), ParameterError);
  }
}

TEST(Patched, StepBranches) {
  const Word y = Word::from_symbols("0110100110010110");
  const PointView in_y = make_point(Word::from_symbols("0103", 4), Provenance::patched_system);
  EXPECT_EQ(patched_step(in_y, y).prefix.symbols(), "103");
  const PointView out_y = make_point(Word::from_symbols("2013", 4), Provenance::patched_system);
  const PointView r = patched_step(out_y, y);
  EXPECT_EQ(r.prefix.symbols(), "0110100110010110");
  EXPECT_EQ(r.prefix.alphabet_size(), 4u);
  EXPECT_THROW(patched_step(make_point(Word(4)), y), HorizonExhausted);
}
