#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meansense/check_runner.hpp"
#include "meansense/checks.hpp"
#include "meansense/error.hpp"
#include "meansense/run_config.hpp"

namespace ms = meansense;
using nlohmann::json;

namespace {

struct Common {
  std::string config;
  std::string construction;
  std::optional<unsigned> depth;
  std::string base;
  std::optional<std::uint64_t> horizon;
  std::optional<std::uint64_t> seed;
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "JSON run configuration");
  app->add_option("--construction", c.construction, "S3, S4 or patched");
  app->add_option("--depth", c.depth, "schedule depth (levels)");
  app->add_option("--base", c.base, "S4 base generator: zero, thue-morse, sturmian[:...]");
  app->add_option("--horizon", c.horizon, "symbols of each point to use");
  app->add_option("--seed", c.seed, "sampling seed");
  app->add_option("--out", c.out, "output directory");
}

ms::RunConfig make_config(const Common& c) {
  ms::RunConfig cfg = c.config.empty() ? ms::RunConfig{} : ms::load_run_config(c.config);
  if (!c.construction.empty()) cfg.construction = ms::system_kind_from_string(c.construction);
  if (c.depth) {
    if (*c.depth == 0) throw ms::ParameterError("depth must be at least 1");
    cfg.depth = *c.depth;
  }
  if (!c.base.empty()) cfg.base = ms::GeneratorDescriptor::parse(c.base);
  if (c.horizon) cfg.horizon = *c.horizon;
  if (c.seed) cfg.seed = *c.seed;
  if (!c.out.empty()) cfg.output_dir = c.out;
  cfg.validate();
  return cfg;
}

int exit_for(ms::Verdict v) { return v == ms::Verdict::pass || v == ms::Verdict::info ? 0 : 1; }

void print_report(const ms::Report& r) {
  std::cout << r.check << ": " << ms::to_string(r.verdict) << "\n";
  std::cout << r.values.dump(2) << "\n";
  for (const std::string& c : r.caveats) std::cout << "  caveat: " << c << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"meansense: symbolic-dynamics checks for mean sensitivity and equicontinuity"};
  app.require_subcommand(1);

  Common build_opts;
  CLI::App* build = app.add_subcommand("build", "write the schedule and RLE word files");
  add_common(build, build_opts);

  Common check_opts;
  std::string check_name;
  std::map<std::string, std::string> flag_values;
  std::vector<std::string> extra;
  CLI::App* check = app.add_subcommand("check", "run one named check");
  add_common(check, check_opts);
  check->add_option("name", check_name, "check name (see `list`)")->required();
  const char* param_flags[] = {"n",       "m",        "s",      "trials",  "epsilon", "delta",
                               "steps",   "members",  "window", "levels",  "cylinders", "times",
                               "r",       "slack",    "pairs",  "comparison-depth"};
  for (const char* f : param_flags) {
    check->add_option(std::string("--") + f, flag_values[f], std::string("check parameter ") + f);
  }
  check->add_option("--param", extra, "extra parameter key=value (repeatable)");

  Common run_opts;
  CLI::App* run = app.add_subcommand("run", "run every check listed in the config on a worker pool");
  add_common(run, run_opts);

  std::string report_dir = "out";
  CLI::App* report = app.add_subcommand("report", "summarise the reports in a directory");
  report->add_option("--out", report_dir, "directory holding check reports");

  app.add_subcommand("list", "list the named checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) {
      const ms::RunConfig cfg = make_config(build_opts);
      const json j = ms::build_artifacts(cfg, cfg.output_dir);
      std::cout << "wrote " << j["files"].size() << " word files and schedule.json to "
                << cfg.output_dir << "\n";
      for (const auto& o : j["omitted"]) std::cout << "  omitted " << o.get<std::string>() << " (run budget)\n";
      return 0;
    }
    if (app.got_subcommand("list")) {
      for (const ms::CheckInfo& c : ms::check_registry()) {
        std::printf("%-20s %-8s %s\n", std::string(c.name).c_str(), std::string(c.system).c_str(),
                    std::string(c.statement).c_str());
      }
      return 0;
    }
    if (check->parsed()) {
      const ms::RunConfig cfg = make_config(check_opts);
      ms::find_check(check_name);
      ms::verify_artifacts(cfg, cfg.output_dir);
      json params = json::object();
      for (const auto& [key, value] : flag_values) {
        if (value.empty()) continue;
        std::string k = key;
        for (char& ch : k) ch = ch == '-' ? '_' : ch;
        const json parsed = json::parse(value, nullptr, false);
        params[k] = parsed.is_discarded() ? json(value) : parsed;
      }
      for (const std::string& kv : extra) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw ms::ParameterError("--param expects key=value");
        const json parsed = json::parse(kv.substr(eq + 1), nullptr, false);
        params[kv.substr(0, eq)] = parsed.is_discarded() ? json(kv.substr(eq + 1)) : parsed;
      }
      if (check_opts.depth) params["depth"] = *check_opts.depth;
      for (const ms::CheckRequest& req : cfg.checks) {
        if (req.name != check_name) continue;
        for (const auto& [k, v] : req.params.items()) {
          if (!params.contains(k)) params[k] = v;
        }
      }
      ms::CheckContext ctx(cfg);
      const ms::Report r = ms::run_check(ctx, {check_name, params});
      ms::write_report(r, cfg.output_dir);
      print_report(r);
      return exit_for(r.verdict);
    }
    if (run->parsed()) {
      const ms::RunConfig cfg = make_config(run_opts);
      if (cfg.checks.empty()) throw ms::ParameterError("the config lists no checks");
      for (const ms::CheckRequest& req : cfg.checks) ms::find_check(req.name);
      ms::verify_artifacts(cfg, cfg.output_dir);
      ms::CheckContext ctx(cfg);
      ms::run_checks(ctx, cfg.checks, [&](const ms::Report& r) { ms::write_report(r, cfg.output_dir); });
      const ms::Summary s = ms::summarize(cfg.output_dir);
      std::cout << s.table;
      return s.exit_code;
    }
    if (report->parsed()) {
      const ms::Summary s = ms::summarize(report_dir);
      std::cout << s.table;
      return s.exit_code;
    }
  } catch (const ms::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
