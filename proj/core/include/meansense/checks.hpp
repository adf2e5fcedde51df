#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <tuple>

#include <nlohmann/json.hpp>

#include "meansense/constructions.hpp"
#include "meansense/report.hpp"
#include "meansense/run_config.hpp"

namespace meansense {

/// Shared state for a batch of checks: the run configuration and a cache of
/// built word families, safe to use from several worker threads.
class CheckContext {
 public:
  explicit CheckContext(RunConfig config) : config_(std::move(config)) {}

  const RunConfig& config() const noexcept { return config_; }

  /// S3 family of the given depth (built once).
  std::shared_ptr<const WordFamily> s3(unsigned depth);
  /// S4 family of the given depth over the configured base.
  std::shared_ptr<const WordFamily> s4(unsigned depth);

 private:
  using Key = std::tuple<int, unsigned, std::string>;
  std::shared_ptr<const WordFamily> get(Key key, const std::function<Schedule()>& make);

  RunConfig config_;
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const WordFamily>> families_;
};

using CheckFn = Report (*)(CheckContext& ctx, const nlohmann::json& params);

struct CheckInfo {
  std::string_view name;
  std::string_view system;     // "S3", "S4", "patched" or "-"
  std::string_view statement;  // what a PASS establishes
  CheckFn run;
};

std::span<const CheckInfo> check_registry();
/// ParameterError listing the known names when `name` is not registered.
const CheckInfo& find_check(std::string_view name);

/// Runs one named check and stamps the config and schedule hashes. Params
/// given in the request override the config's horizon and seed.
Report run_check(CheckContext& ctx, const CheckRequest& request);

/// FNV-1a of the schedule's canonical JSON.
std::string schedule_hash(const Schedule& s);

}  // namespace meansense
