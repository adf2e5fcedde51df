#include <gtest/gtest.h>

#include "meansense/constructions.hpp"
#include "meansense/error.hpp"
#include "meansense/hyperspace.hpp"
#include "naive.hpp"

using namespace meansense;

namespace {

FiniteSet make_set(const std::vector<std::string>& ws) {
  std::vector<PointView> pts;
  for (const auto& w : ws) pts.push_back(make_point(Word::from_symbols(w)));
  return FiniteSet(pts);
}

std::vector<std::string> random_set(std::mt19937_64& rng, std::size_t horizon, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> sz(1, max_size);
  const std::string base = naive::random_word(rng, horizon, 2, 0.5);
  std::vector<std::string> out;
  std::uniform_int_distribution<std::size_t> pos(0, horizon - 1);
  for (std::size_t i = sz(rng); i > 0; --i) {
    std::string m = base;
    m[pos(rng)] ^= 1;
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(Hyperspace, FiniteSetDeduplicatesAndSorts) {
  const FiniteSet a = make_set({"110", "010", "110"});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a.members()[0].prefix.symbols(), "010");
  EXPECT_EQ(a, make_set({"010", "110"}));
}

TEST(Hyperspace, HausdorffMatchesNaiveAndBallForm) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_set(rng, 16, 6);
    const auto b = random_set(rng, 16, 6);
    const FiniteSet fa = make_set(a), fb = make_set(b);
    const HausdorffValue h = hausdorff_distance(fa, fb);
    ASSERT_DOUBLE_EQ(h.value(), naive::hausdorff(a, b));
    ASSERT_DOUBLE_EQ(hausdorff_distance_by_balls(fa, fb).value(), h.value());
    ASSERT_EQ(hausdorff_distance(fb, fa), h);
  }
}

TEST(Hyperspace, TkStepMergesMembers) {
  const FiniteSet a = make_set({"0110", "1110", "0101"});
  const FiniteSet s = tk_step(a);
  EXPECT_EQ(s, make_set({"110", "101"}));
}

TEST(Hyperspace, VietorisAndUnion) {
  const FiniteSet a = make_set({"0110", "1110"});
  const Word opens01[] = {Word::from_symbols("0"), Word::from_symbols("1")};
  const Word opens0[] = {Word::from_symbols("0")};
  const Word opens011[] = {Word::from_symbols("01"), Word::from_symbols("1"), Word::from_symbols("00")};
  EXPECT_TRUE(vietoris_member(a, opens01));
  EXPECT_FALSE(vietoris_member(a, opens0));
  EXPECT_FALSE(vietoris_member(a, opens011));
  const FiniteSet fam[] = {a, make_set({"0000", "0110"})};
  EXPECT_EQ(union_factor(fam), make_set({"0000", "0110", "1110"}));
}

TEST(Hyperspace, JsonRoundTrip) {
  const FiniteSet a = make_set({"0110", "1110"});
  EXPECT_EQ(finite_set_from_json(to_json(a)), a);
}

TEST(Hyperspace, SequenceMatchesNaive) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_set(rng, 120, 4);
    const auto b = random_set(rng, 120, 4);
    const Length depth = 4 + trial % 40;
    const Length steps = 120 - depth;
    const HyperSequence seq = hausdorff_sequence(make_set(a), make_set(b), steps, depth);
    for (Length i = 0; i < steps; ++i) {
      std::vector<std::string> wa, wb;
      for (const auto& s : a) wa.push_back(s.substr(i, depth));
      for (const auto& s : b) wb.push_back(s.substr(i, depth));
      const double h = naive::hausdorff(wa, wb);
      ASSERT_DOUBLE_EQ(seq.lower(i), h) << trial << " " << i;
      if (h == 0) ASSERT_EQ(seq.gaps[i], depth + 1);
    }
  }
}

TEST(Hyperspace, IndependenceAndCap) {
  const WordFamily f(build_schedule_s3(3));
  const LanguageApprox la{transitive_prefix(f, f.a(3).size())};
  const CylinderTuple t{{Word::from_symbols("0"), Word::from_symbols("1")}};
  const IndexSet j({0, 1, 2}, 3);
  EXPECT_EQ(independence_check(t, j, la).verdict, Verdict::pass);
  IndependenceOptions tight;
  tight.exhaust_cap = 4;
  EXPECT_THROW(independence_check(t, j, la, tight), CapExceeded);

  // the constant language cannot realise 1 at time 0
  const LanguageApprox flat{make_point(Word::repeat(0, 100))};
  EXPECT_EQ(independence_check(t, j, flat).verdict, Verdict::fail);
}

TEST(Hyperspace, HyperWitnessMembersStartWithTheirBlocks) {
  const WordFamily f(build_schedule_s3(4));
  LanguageApprox la{transitive_prefix(f, f.a(4).size())};
  const Length m = f.a(3).size() + f.schedule().level(3).k;
  const FiniteSet p({la.source.shifted(m), la.source.shifted(m + f.a(2).size() + f.a(3).size())});
  const std::size_t before = la.specials.size();
  const HyperWitness w = hyper_witness_s3(f, la, p, 0.1, 2000);
  EXPECT_GT(w.q.size(), 2u);
  EXPECT_GE(la.specials.size(), before + w.q.size());
  for (const PointView& pk : p.members()) {
    bool near = false;
    for (const PointView& q : w.q.members()) {
      near = near || common_prefix_length(pk.prefix, 0, q.prefix, 0, 11) == 11;
    }
    EXPECT_TRUE(near);
  }
}
