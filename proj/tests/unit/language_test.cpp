#include <gtest/gtest.h>

#include "meansense/constructions.hpp"
#include "meansense/error.hpp"
#include "meansense/language.hpp"
#include "naive.hpp"

using namespace meansense;

TEST(Language, DistinctSubwordsMatchNaive) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const int alpha = trial % 4 == 0 ? 4 : 2;
    const std::string s = naive::random_word(rng, 1 + trial % 150, alpha, 0.7);
    const std::size_t n = 1 + trial % 9;
    const SubwordSet got = distinct_subwords(Word::from_symbols(s, alpha), n, 1u << 20);
    ASSERT_FALSE(got.truncated);
    std::vector<std::string> g;
    for (const Word& w : got.words) g.push_back(w.symbols());
    const auto want = naive::subwords(s, n);
    ASSERT_EQ(g, std::vector<std::string>(want.begin(), want.end())) << s << " n=" << n;
  }
}

TEST(Language, SubwordCapTruncates) {
  const SubwordSet s = distinct_subwords(Word::from_symbols("0110100110010110"), 4, 3);
  EXPECT_TRUE(s.truncated);
  EXPECT_LE(s.words.size(), 3u);
}

TEST(Language, SpecialsContributePrefixes) {
  LanguageApprox la{make_point(Word::from_symbols("000000"))};
  la.register_special(make_point(Word::from_symbols("1110")));
  std::vector<std::string> g;
  for (const Word& w : subwords(la, 3).words) g.push_back(w.symbols());
  EXPECT_EQ(g, (std::vector<std::string>{"000", "111"}));
}

TEST(Language, CylinderMembersStartWithTheWord) {
  const WordFamily f(build_schedule_s3(3));
  LanguageApprox la{transitive_prefix(f, 20000)};
  const Word u = Word::from_symbols("0001");
  const auto members = cylinder_members(la, u, 50, 500);
  ASSERT_FALSE(members.empty());
  EXPECT_LE(members.size(), 50u);
  for (const PointView& p : members) {
    EXPECT_TRUE(p.starts_with(u));
    EXPECT_GE(p.horizon(), 500u);
    EXPECT_EQ(p.prefix, subword_at(la.source.prefix, p.offset + 1, p.horizon()));
  }
}

TEST(Language, TransitiveDesk) {
  const WordFamily f(build_schedule_s3(4));
  LanguageApprox la{transitive_prefix(f, f.a(4).size())};
  EXPECT_EQ(check_transitive_desk(la, 4).verdict, Verdict::pass);
  EXPECT_EQ(check_transitive_desk(la, la.horizon()).verdict, Verdict::inconclusive);

  // a prefix whose first half holds a word the second half lacks
  LanguageApprox bad{make_point(Word::from_symbols("1111000000000000"))};
  EXPECT_EQ(check_transitive_desk(bad, 2).verdict, Verdict::fail);
}

TEST(Language, DensePeriodicDesk) {
  const WordFamily f(build_schedule_s4(4, GeneratorDescriptor::constant_zero()));
  LanguageApprox la{transitive_prefix(f, f.a(4).size())};
  EXPECT_EQ(check_dense_periodic_desk(f, la, 4).verdict, Verdict::pass);
  const WordFamily s3(build_schedule_s3(2));
  EXPECT_THROW(check_dense_periodic_desk(s3, la, 4), ParameterError);
}
