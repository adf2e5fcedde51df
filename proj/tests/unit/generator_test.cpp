#include <gtest/gtest.h>

#include "meansense/error.hpp"
#include "meansense/generator.hpp"
#include "naive.hpp"

using namespace meansense;

TEST(Generator, ThueMorsePrefix) {
  EXPECT_EQ(minimal_generator(GeneratorDescriptor::thue_morse(), 16).symbols(), "0110100110010110");
}

TEST(Generator, ThueMorseIsParityOfBits) {
  const std::string s = minimal_generator(GeneratorDescriptor::thue_morse(), 4096).symbols();
  for (std::size_t i = 0; i < s.size(); ++i) {
    ASSERT_EQ(s[i] - '0', __builtin_popcountll(i) & 1) << i;
  }
}

TEST(Generator, ConstantZero) {
  const Word w = minimal_generator(GeneratorDescriptor::constant_zero(), 1000);
  EXPECT_EQ(w.run_count(), 1u);
  EXPECT_EQ(w.front(), 0);
}

TEST(Generator, SturmianIsBalancedWithComplexityNPlusOne) {
  for (const auto& g : {GeneratorDescriptor::sturmian_golden(), GeneratorDescriptor::sturmian({2, 3, 1, 4})}) {
    const std::string s = minimal_generator(g, 3000).symbols();
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto words = naive::subwords(s, n);
      EXPECT_EQ(words.size(), n + 1) << g.description() << " n=" << n;
      std::size_t lo = n, hi = 0;
      for (const auto& w : words) {
        const auto c = static_cast<std::size_t>(std::count(w.begin(), w.end(), '1'));
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      EXPECT_LE(hi - lo, 1u);
    }
  }
}

TEST(Generator, ParseDescriptions) {
  EXPECT_EQ(GeneratorDescriptor::parse("zero"), GeneratorDescriptor::constant_zero());
  EXPECT_EQ(GeneratorDescriptor::parse("thue-morse"), GeneratorDescriptor::thue_morse());
  EXPECT_EQ(GeneratorDescriptor::parse("sturmian:2,3"), GeneratorDescriptor::sturmian({2, 3}));
  const auto g = GeneratorDescriptor::sturmian({1, 2});
  EXPECT_EQ(GeneratorDescriptor::parse(g.description()), g);
  EXPECT_THROW(GeneratorDescriptor::parse("nope"), ParseError);
}
