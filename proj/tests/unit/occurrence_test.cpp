#include <gtest/gtest.h>

#include "meansense/index_set.hpp"
#include "meansense/error.hpp"
#include "meansense/occurrence.hpp"
#include "naive.hpp"

using namespace meansense;

TEST(Occurrence, SmallExample) {
  const OccurrenceIndex idx(Word::from_symbols("1101000111"));
  EXPECT_EQ(idx.total(), 6u);
  EXPECT_EQ(idx.count_prefix(0), 0u);
  EXPECT_EQ(idx.count_prefix(4), 3u);
  EXPECT_EQ(idx.count(5, 7), 0u);
  const WindowMax w = idx.max_window(3);
  EXPECT_EQ(w.max_count, 3u);
  EXPECT_EQ(w.witness_position, 8u);
}

TEST(OccurrenceProperty, CountsAndWindowMaximaMatchNaive) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> len(1, 300);
  for (int trial = 0; trial < 1000; ++trial) {
    const int alpha = trial % 4 == 0 ? 4 : 2;
    const std::string s = naive::random_word(rng, len(rng), alpha, 0.7);
    const Symbol d = static_cast<Symbol>(trial % alpha);
    const char dc = static_cast<char>('0' + d);
    const OccurrenceIndex idx(Word::from_symbols(s, alpha), d);
    std::uniform_int_distribution<std::size_t> pos(1, s.size());
    std::size_t i = pos(rng), j = pos(rng);
    if (i > j) std::swap(i, j);
    ASSERT_EQ(idx.count(i, j), naive::count(s, dc, i, j));
    ASSERT_EQ(idx.count_prefix(j), naive::count(s, dc, 1, j));
    const std::size_t L = pos(rng);
    const WindowMax got = idx.max_window(L);
    const naive::Window want = naive::max_window(s, dc, L);
    ASSERT_EQ(got.max_count, want.max) << s << " L=" << L;
    ASSERT_EQ(got.witness_position, want.first) << s << " L=" << L;
  }
}

TEST(IndexSet, IndicatorRoundTrip) {
  const IndexSet f({5, 1, 3, 3}, 8);
  EXPECT_EQ(f.members(), (std::vector<Length>{1, 3, 5}));
  EXPECT_EQ(f.indicator().symbols(), "01010100");
  EXPECT_EQ(IndexSet::from_indicator(f.indicator()), f);
  EXPECT_EQ(f.count_below(4), 2u);
  EXPECT_TRUE(f.contains(3));
  EXPECT_FALSE(f.contains(4));
  EXPECT_TRUE(f.includes(IndexSet({1, 5}, 8)));
  EXPECT_THROW(IndexSet({9}, 8), Error);
}
