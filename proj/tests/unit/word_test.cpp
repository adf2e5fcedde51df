#include <gtest/gtest.h>

#include "meansense/error.hpp"
#include "meansense/rle_text.hpp"
#include "meansense/word.hpp"
#include "naive.hpp"

using namespace meansense;

TEST(Word, RunsAreCanonical) {
  const meansense::Run raw[] = {{1, 2}, {1, 1}, {0, 0}, {0, 4}, {1, 1}};
  const Word w = Word::from_runs(raw);
  ASSERT_EQ(w.run_count(), 3u);
  EXPECT_EQ(w.symbols(), "11100001");
  EXPECT_EQ(w.size(), 8u);
  EXPECT_EQ(w.run_start(1), 4u);
  EXPECT_EQ(w.run_end(1), 7u);
  EXPECT_EQ(w.at(4), 0);
  EXPECT_EQ(w.at(8), 1);
}

TEST(Word, RejectsSymbolsOutsideAlphabet) {
  EXPECT_THROW(Word::from_symbols("102"), Error);
  EXPECT_NO_THROW(Word::from_symbols("1023", 4));
}

TEST(Word, AppendMergesAndPowers) {
  Word w = Word::from_symbols("10");
  w.append(0, 3).append(Word::from_symbols("01"));
  EXPECT_EQ(w.symbols(), "1000001");
  EXPECT_EQ(w.run_count(), 3u);
  EXPECT_EQ(power(Word::from_symbols("101"), 3).symbols(), "101101101");
  EXPECT_EQ(power(Word::repeat(0, 5), 1000).size(), 5000u);
  EXPECT_EQ(power(Word::repeat(0, 5), 1000).run_count(), 1u);
}

TEST(Word, LongLengthsStayInRle) {
  Word w(2);
  w.append(1, 1).append(0, Length{1} << 40).append(1, 1);
  EXPECT_EQ(w.size(), (Length{1} << 40) + 2);
  EXPECT_EQ(w.at((Length{1} << 40) + 2), 1);
  EXPECT_EQ(w.at(Length{1} << 39), 0);
  const Word tail = subword_at(w, (Length{1} << 40), 3);
  EXPECT_EQ(tail.symbols(), "001");
}

TEST(Word, SubwordOutOfRangeThrows) {
  const Word w = Word::from_symbols("10110");
  EXPECT_THROW(subword_at(w, 0, 1), RangeError);
  EXPECT_THROW(subword_at(w, 4, 3), RangeError);
  EXPECT_EQ(subword_at(w, 6, 0).size(), 0u);
}

TEST(Word, LexicographicOrder) {
  EXPECT_LT(Word::from_symbols("0111"), Word::from_symbols("1"));
  EXPECT_LT(Word::from_symbols("10"), Word::from_symbols("100"));
  EXPECT_EQ(Word::from_symbols("10") <=> Word::from_symbols("10"), std::strong_ordering::equal);
}

TEST(WordProperty, OperationsMatchExpandedStrings) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(1, 120);
  for (int trial = 0; trial < 1000; ++trial) {
    const int alpha = trial % 3 == 0 ? 4 : 2;
    const std::string a = naive::random_word(rng, len(rng), alpha, 0.6);
    const std::string b = naive::random_word(rng, len(rng), alpha, 0.6);
    const Word wa = Word::from_symbols(a, alpha);
    const Word wb = Word::from_symbols(b, alpha);
    ASSERT_EQ(wa.symbols(), a);
    ASSERT_EQ(concat(wa, wb).symbols(), a + b);

    std::uniform_int_distribution<std::size_t> st(1, a.size());
    const std::size_t t = st(rng);
    std::uniform_int_distribution<std::size_t> ln(0, a.size() - t + 1);
    const std::size_t l = ln(rng);
    ASSERT_EQ(subword_at(wa, t, l).symbols(), a.substr(t - 1, l));
    ASSERT_EQ(starts_with(wa, wb), a.rfind(b, 0) == 0);
    ASSERT_EQ(ends_with(wa, subword_at(wa, t, a.size() - t + 1)), true);

    // first difference / common prefix with offsets
    std::uniform_int_distribution<std::size_t> off(0, std::min(a.size(), b.size()) - 1);
    const std::size_t ao = off(rng), bo = off(rng);
    const std::size_t lim = 64;
    const auto g = naive::first_difference(a, ao, b, bo, lim);
    const Length cp = common_prefix_length(wa, ao, wb, bo, lim);
    const std::size_t avail = std::min({lim, a.size() - ao, b.size() - bo});
    ASSERT_EQ(cp, g == 0 ? avail : g - 1);

    // difference intervals cover exactly the differing positions
    const std::size_t h = std::min(a.size(), b.size());
    std::vector<int> mark(h + 1, 0);
    for (const Interval& iv : difference_intervals(wa, wb, h)) {
      for (Length p = iv.first; p <= iv.last; ++p) mark[p] = 1;
    }
    for (std::size_t p = 1; p <= h; ++p) ASSERT_EQ(mark[p] == 1, a[p - 1] != b[p - 1]);

    // occurrences of a short pattern taken from a
    std::uniform_int_distribution<std::size_t> pl(1, std::min<std::size_t>(6, a.size()));
    const std::size_t plen = pl(rng);
    std::uniform_int_distribution<std::size_t> ps(0, a.size() - plen);
    const std::string pat = a.substr(ps(rng), plen);
    std::vector<std::size_t> got;
    for (const Interval& iv : find_occurrences(wa, Word::from_symbols(pat, alpha))) {
      for (Length p = iv.first; p <= iv.last; ++p) got.push_back(p);
    }
    ASSERT_EQ(got, naive::occurrences(a, pat)) << a << " / " << pat;
  }
}

TEST(RleText, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int alpha = trial % 2 == 0 ? 2 : 4;
    const Word w = Word::from_symbols(naive::random_word(rng, 1 + trial % 90, alpha), alpha);
    const std::string text = to_rle_text(w);
    ASSERT_EQ(parse_rle_text(text), w) << text;
  }
}

TEST(RleText, RejectsMalformedLines) {
  EXPECT_THROW(parse_rle_text("garbage"), Error);
}
