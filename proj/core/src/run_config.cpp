#include "meansense/run_config.hpp"

#include <fstream>
#include <sstream>

#include "meansense/error.hpp"
#include "meansense/report.hpp"

namespace meansense {

std::string_view to_string(SystemKind k) {
  switch (k) {
    case SystemKind::s3: return "S3";
    case SystemKind::s4: return "S4";
    case SystemKind::patched: return "patched";
  }
  return "S3";
}

SystemKind system_kind_from_string(std::string_view s) {
  if (s == "S3" || s == "s3") return SystemKind::s3;
  if (s == "S4" || s == "s4") return SystemKind::s4;
  if (s == "patched") return SystemKind::patched;
  throw ParameterError("unknown construction '" + std::string(s) + "' (expected S3, S4 or patched)");
}

Schedule RunConfig::schedule() const {
  switch (construction) {
    case SystemKind::s3: return build_schedule_s3(depth);
    case SystemKind::s4: return build_schedule_s4(depth, base);
    case SystemKind::patched: break;
  }
  throw ParameterError("the patched system has no schedule");
}

void RunConfig::validate() const {
  if (depth == 0) throw ParameterError("depth must be at least 1");
  if (construction == SystemKind::patched || horizon == 0) return;
  const Schedule s = schedule();
  const LevelRecord& top = s.level(depth);
  if (horizon > top.len_a + top.k) {
    throw DepthError("horizon " + std::to_string(horizon) + " exceeds |A_" + std::to_string(depth) +
                     "| + k_" + std::to_string(depth) + " = " +
                     std::to_string(top.len_a + top.k) + "; raise --depth");
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const CheckRequest& c : checks) checks_json.push_back({{"name", c.name}, {"params", c.params}});
  return {{"construction", std::string(to_string(construction))},
          {"depth", depth},
          {"base", base.description()},
          {"horizon", horizon},
          {"seed", seed},
          {"output_dir", output_dir},
          {"checks", checks_json}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    if (j.contains("construction")) {
      c.construction = system_kind_from_string(j.at("construction").get<std::string>());
    }
    if (j.contains("depth")) {
      const auto d = j.at("depth").get<long long>();
      if (d < 1) throw ParameterError("depth must be at least 1");
      c.depth = static_cast<unsigned>(d);
    }
    if (j.contains("base")) c.base = GeneratorDescriptor::parse(j.at("base").get<std::string>());
    c.horizon = j.value("horizon", std::uint64_t{0});
    c.seed = j.value("seed", std::uint64_t{1});
    c.output_dir = j.value("output_dir", std::string("out"));
    if (j.contains("checks")) {
      for (const auto& e : j.at("checks")) {
        if (e.is_string()) {
          c.checks.push_back({e.get<std::string>(), nlohmann::json::object()});
        } else {
          c.checks.push_back({e.at("name").get<std::string>(),
                              e.value("params", nlohmann::json::object())});
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  return c;
}

std::string RunConfig::hash() const { return fnv1a_hex(to_json().dump()); }

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return RunConfig::from_json(j);
}

}  // namespace meansense
