#include <gtest/gtest.h>

#include "meansense/error.hpp"
#include "meansense/schedule.hpp"

using namespace meansense;

namespace {

// k_n = n(2|A_n| + |B_n|), |A_{n+1}| = 2|A_n| + 2k_n + |B_n|,
// |B_n| = (|A_n| + 1)(|A_{n-1}| + |A_n|): a direct recomputation.
struct S3Row {
  Length k, a, b, t;
};

std::vector<S3Row> s3_oracle(unsigned depth) {
  std::vector<S3Row> rows;
  Length a = 3, b = 3, a_prev = 0;
  for (unsigned n = 1; n <= depth; ++n) {
    if (n > 1) b = (a + 1) * (a_prev + a);
    const Length k = n * (2 * a + b);
    rows.push_back({k, a, b, a + 2 * k + b});
    a_prev = a;
    a = 2 * a + 2 * k + b;
  }
  return rows;
}

}  // namespace

TEST(Schedule, S3MatchesRecursion) {
  const Schedule s = build_schedule_s3(4);
  const auto want = s3_oracle(4);
  for (unsigned n = 1; n <= 4; ++n) {
    EXPECT_EQ(s.level(n).k, want[n - 1].k) << n;
    EXPECT_EQ(s.level(n).len_a, want[n - 1].a) << n;
    EXPECT_EQ(s.level(n).len_b, want[n - 1].b) << n;
    EXPECT_EQ(s.level(n).t, want[n - 1].t) << n;
  }
}

TEST(Schedule, S3KnownValues) {
  const Schedule s = build_schedule_s3(3);
  EXPECT_EQ(s.level(1).k, 9u);
  EXPECT_EQ(s.level(2).len_a, 27u);
  EXPECT_EQ(s.level(2).len_b, 840u);
  EXPECT_EQ(s.level(2).k, 1788u);
  EXPECT_EQ(s.level(3).len_a, 4470u);
  EXPECT_EQ(s.level(1).t, 24u);
}

TEST(Schedule, S3OverflowNamesLevel) {
  try {
    build_schedule_s3(5);
    FAIL() << "expected overflow";
  } catch (const OverflowError& e) {
    EXPECT_EQ(e.level(), 5u);
  }
}

TEST(Schedule, S4GreedyConstantZero) {
  const Schedule s = build_schedule_s4(5, GeneratorDescriptor::constant_zero());
  const Length k[] = {7, 469, 40840, 6830574, 2231216441};
  const Length a[] = {3, 21, 1006, 84770, 13918594};
  const Length b[] = {1, 26, 1078, 87906, 14178098};
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(s.level(n).k, k[n - 1]) << n;
    EXPECT_EQ(s.level(n).len_a, a[n - 1]) << n;
    EXPECT_EQ(s.level(n).len_b, b[n - 1]) << n;
  }
}

TEST(Schedule, S4ConditionsHoldAndAreMinimal) {
  const Schedule s = build_schedule_s4(5, GeneratorDescriptor::constant_zero());
  for (unsigned m = 1; m <= 5; ++m) {
    const LevelRecord& lm = s.level(m);
    auto ok = [&](Length k) {
      if (k < m * (2 * lm.len_a + lm.len_b)) return false;
      for (unsigned n = 1; n < m; ++n) {
        const LevelRecord& ln = s.level(n);
        if (!(static_cast<unsigned __int128>(k) * ln.len_b >
              static_cast<unsigned __int128>(ln.t) * lm.len_b)) {
          return false;
        }
      }
      return true;
    };
    EXPECT_TRUE(ok(lm.k)) << m;
    EXPECT_FALSE(ok(lm.k - 1)) << m;
  }
}

TEST(Schedule, JsonRoundTripAndTamperDetection) {
  const Schedule s = build_schedule_s4(3, GeneratorDescriptor::thue_morse());
  const auto j = to_json(s);
  EXPECT_EQ(schedule_from_json(j), s);
  auto bad = j;
  bad["levels"][1]["k_n"] = bad["levels"][1]["k_n"].get<Length>() - 1;
  EXPECT_THROW(schedule_from_json(bad), Error);
}

TEST(Schedule, VerifyRejectsBrokenRecursion) {
  Schedule s = build_schedule_s3(3);
  s.levels[2].len_a += 1;
  EXPECT_THROW(verify_schedule(s), ParameterError);
}
