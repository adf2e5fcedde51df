#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "meansense/generator.hpp"
#include "meansense/schedule.hpp"

namespace meansense {

enum class SystemKind { s3, s4, patched };

std::string_view to_string(SystemKind k);
SystemKind system_kind_from_string(std::string_view s);

struct CheckRequest {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
};

struct RunConfig {
  SystemKind construction = SystemKind::s3;
  unsigned depth = 3;
  GeneratorDescriptor base = GeneratorDescriptor::constant_zero();
  std::uint64_t horizon = 0;  // 0: each check picks its own
  std::uint64_t seed = 1;
  std::string output_dir = "out";
  std::vector<CheckRequest> checks;

  /// depth >= 1 and, when a horizon is given for S3/S4, horizon <=
  /// |A_depth| + k_depth. Only schedule lengths are computed.
  void validate() const;

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
  /// FNV-1a of the canonical JSON dump.
  std::string hash() const;

  /// Schedule for S3/S4; ParameterError for the patched system.
  Schedule schedule() const;
};

RunConfig load_run_config(const std::string& path);

}  // namespace meansense
