#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "meansense/checks.hpp"
#include "meansense/report.hpp"
#include "meansense/run_config.hpp"

namespace meansense {

/// Worker count: MEANSENSE_THREADS when set to a positive integer, else the
/// hardware concurrency, never more than `jobs`.
unsigned worker_threads(std::size_t jobs);

/// Runs the requests on a worker pool. Reports come back in request order.
/// When a check throws, the remaining checks still run and the first error
/// is rethrown after every finished report has been handed to `sink`.
std::vector<Report> run_checks(CheckContext& ctx, const std::vector<CheckRequest>& requests,
                               const std::function<void(const Report&)>& sink = {});

/// Writes <dir>/<check>.json and one <dir>/<check>.<series>.csv per series.
void write_report(const Report& r, const std::filesystem::path& dir);

/// schedule.json plus A_n.rle / B_n.rle for every level. Re-running with the
/// same config rewrites byte-identical files. Returns the schedule JSON as
/// written (B_n over the run budget are listed under "omitted").
nlohmann::json build_artifacts(const RunConfig& cfg, const std::filesystem::path& dir);

/// When <dir>/schedule.json exists it must agree with the config's schedule
/// on every shared level; InputError otherwise.
void verify_artifacts(const RunConfig& cfg, const std::filesystem::path& dir);

struct Summary {
  nlohmann::json json;
  std::string table;
  int exit_code = 0;  // 0 all pass, 1 any FAIL, 2 no reports
};

/// Reads every report in `dir`, writes summary.json and summary.txt.
Summary summarize(const std::filesystem::path& dir);

}  // namespace meansense
