#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "meansense/check_runner.hpp"
#include "meansense/checks.hpp"
#include "meansense/error.hpp"
#include "meansense/run_config.hpp"

using namespace meansense;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("meansense_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST(RunConfig, JsonRoundTripAndHash) {
  RunConfig c;
  c.construction = SystemKind::s4;
  c.depth = 4;
  c.base = GeneratorDescriptor::thue_morse();
  c.seed = 9;
  c.checks = {{"prop-devaney", {{"n", 3}}}};
  const RunConfig back = RunConfig::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_EQ(back.hash(), c.hash());
  c.seed = 10;
  EXPECT_NE(back.hash(), c.hash());
}

TEST(RunConfig, Validation) {
  EXPECT_THROW(RunConfig::from_json(nlohmann::json::parse(R"({"depth": 0})")), ParameterError);
  EXPECT_THROW(RunConfig::from_json(nlohmann::json::parse("[1]")), ParseError);
  RunConfig c;
  c.depth = 2;
  c.horizon = 1u << 30;
  EXPECT_THROW(c.validate(), DepthError);
  c.construction = SystemKind::patched;
  EXPECT_THROW(c.schedule(), ParameterError);
}

TEST(Registry, NamesAreUniqueAndFindable) {
  std::set<std::string> names;
  for (const CheckInfo& c : check_registry()) {
    EXPECT_TRUE(names.insert(std::string(c.name)).second) << c.name;
    EXPECT_EQ(&find_check(c.name), &c);
  }
  for (const char* want : {"lemma-3.1", "lemma-3.2-density", "thm-1.3-cofinite", "thm-1.3-banach-equi",
                           "thm-1.8-witness", "lemma-count-3", "prop-p-system", "prop-devaney",
                           "thm-unpos", "hausdorff-axioms", "semi-open", "remark-2.1.3", "independence"}) {
    EXPECT_TRUE(names.count(want)) << want;
  }
  EXPECT_THROW(find_check("nope"), ParameterError);
}

TEST(Artifacts, BuildIsIdempotentAndVerified) {
  const fs::path a = scratch("a"), b = scratch("b");
  RunConfig cfg;
  cfg.depth = 2;
  build_artifacts(cfg, a);
  build_artifacts(cfg, b);
  for (const char* f : {"schedule.json", "A_1.rle", "B_1.rle", "A_2.rle", "B_2.rle"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  EXPECT_NO_THROW(verify_artifacts(cfg, a));
  RunConfig other = cfg;
  other.construction = SystemKind::s4;
  EXPECT_THROW(verify_artifacts(other, a), InputError);
  fs::remove(a / "B_2.rle");
  EXPECT_THROW(verify_artifacts(cfg, a), InputError);
  EXPECT_NO_THROW(verify_artifacts(cfg, scratch("absent")));
}

TEST(Runner, KeepsRequestOrderAndSummarises) {
  setenv("MEANSENSE_THREADS", "3", 1);
  EXPECT_EQ(worker_threads(10), 3u);
  EXPECT_EQ(worker_threads(2), 2u);
  CheckContext ctx(RunConfig{});
  const std::vector<CheckRequest> reqs = {
      {"hausdorff-axioms", {{"trials", 50}}},
      {"lemma-3.1", {{"n", 1}, {"m", 3}}},
      {"semi-open", {{"trials", 50}}},
  };
  const fs::path dir = scratch("run");
  const auto reports = run_checks(ctx, reqs, [&](const Report& r) { write_report(r, dir); });
  ASSERT_EQ(reports.size(), 3u);
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    EXPECT_EQ(reports[i].check, reqs[i].name);
    EXPECT_EQ(reports[i].config_hash, RunConfig{}.hash());
  }
  const Summary s = summarize(dir);
  EXPECT_EQ(s.exit_code, 0);
  EXPECT_EQ(s.json["checks"].size(), 3u);
  EXPECT_TRUE(fs::exists(dir / "summary.txt"));

  Report bad = reports[0];
  bad.check = "forced";
  bad.verdict = Verdict::fail;
  write_report(bad, dir);
  EXPECT_EQ(summarize(dir).exit_code, 1);
  const fs::path empty = scratch("empty");
  fs::create_directories(empty);
  EXPECT_EQ(summarize(empty).exit_code, 2);
}

TEST(Runner, ErrorsSurfaceAfterOtherReports) {
  CheckContext ctx(RunConfig{});
  std::vector<std::string> seen;
  const std::vector<CheckRequest> reqs = {{"lemma-3.1", {{"n", 0}}}, {"hausdorff-axioms", {{"trials", 10}}}};
  EXPECT_THROW(run_checks(ctx, reqs, [&](const Report& r) { seen.push_back(r.check); }), ParameterError);
  EXPECT_EQ(seen, std::vector<std::string>{"hausdorff-axioms"});
}
