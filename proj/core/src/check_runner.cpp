#include "meansense/check_runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "meansense/constructions.hpp"
#include "meansense/error.hpp"
#include "meansense/rle_text.hpp"
#include "meansense/schedule.hpp"

namespace meansense {

namespace fs = std::filesystem;

unsigned worker_threads(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MEANSENSE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, jobs)));
}

std::vector<Report> run_checks(CheckContext& ctx, const std::vector<CheckRequest>& requests,
                               const std::function<void(const Report&)>& sink) {
  std::vector<std::optional<Report>> out(requests.size());
  std::vector<std::exception_ptr> errors(requests.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < requests.size(); i = next++) {
      try {
        out[i] = run_check(ctx, requests[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = worker_threads(requests.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  std::vector<Report> reports;
  for (auto& r : out) {
    if (!r) continue;
    if (sink) sink(*r);
    reports.push_back(std::move(*r));
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw InputError("write to '" + path.string() + "' failed");
}

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create directory '" + dir.string() + "': " + ec.message());
}

}  // namespace

void write_report(const Report& r, const fs::path& dir) {
  ensure_dir(dir);
  write_file(dir / (r.check + ".json"), r.to_json().dump(2) + "\n");
  for (const Series& s : r.series) write_file(dir / (r.check + "." + s.name + ".csv"), series_csv(s));
}

nlohmann::json build_artifacts(const RunConfig& cfg, const fs::path& dir) {
  cfg.validate();
  const Schedule s = cfg.schedule();
  const WordFamily family(s);
  ensure_dir(dir);
  nlohmann::json j = to_json(s);
  nlohmann::json omitted = nlohmann::json::array();
  nlohmann::json files = nlohmann::json::array();
  for (unsigned n = 1; n <= family.depth(); ++n) {
    const std::string a = "A_" + std::to_string(n) + ".rle";
    write_file(dir / a, to_rle_text(family.a(n)) + "\n");
    files.push_back(a);
    const std::string b = "B_" + std::to_string(n) + ".rle";
    if (family.has_b(n)) {
      write_file(dir / b, to_rle_text(family.b(n)) + "\n");
      files.push_back(b);
    } else {
      omitted.push_back("B_" + std::to_string(n));
    }
  }
  j["files"] = files;
  j["omitted"] = omitted;
  write_file(dir / "schedule.json", j.dump(2) + "\n");
  return j;
}

void verify_artifacts(const RunConfig& cfg, const fs::path& dir) {
  const fs::path path = dir / "schedule.json";
  if (!fs::exists(path) || cfg.construction == SystemKind::patched) return;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  const Schedule on_disk = schedule_from_json(j);
  const Schedule want = cfg.schedule();
  if (on_disk.construction != want.construction || on_disk.base != want.base) {
    throw InputError("artifacts in '" + dir.string() + "' were built for another construction; rerun build");
  }
  const unsigned shared = std::min(on_disk.depth(), want.depth());
  for (unsigned n = 1; n <= shared; ++n) {
    if (!(on_disk.level(n) == want.level(n))) {
      throw InputError("artifacts in '" + dir.string() + "' disagree with the config at level " +
                       std::to_string(n) + "; rerun build");
    }
  }
  if (j.contains("files")) {
    for (const auto& f : j.at("files")) {
      if (!fs::exists(dir / f.get<std::string>())) {
        throw InputError("missing artifact '" + (dir / f.get<std::string>()).string() + "'; rerun build");
      }
    }
  }
}

Summary summarize(const fs::path& dir) {
  Summary s;
  std::vector<Report> reports;
  std::error_code ec;
  if (fs::is_directory(dir, ec)) {
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(dir)) {
      const fs::path& p = e.path();
      if (p.extension() != ".json") continue;
      const std::string stem = p.stem().string();
      if (stem == "summary" || stem == "schedule") continue;
      paths.push_back(p);
    }
    std::sort(paths.begin(), paths.end());
    for (const fs::path& p : paths) {
      try {
        reports.push_back(report_from_json(nlohmann::json::parse(read_file(p))));
      } catch (const nlohmann::json::exception&) {
      } catch (const ParseError&) {
      }
    }
  }
  if (reports.empty()) {
    s.exit_code = 2;
    s.table = "no check reports in '" + dir.string() + "'\n";
    s.json = {{"checks", nlohmann::json::array()}, {"failing", nlohmann::json::array()}};
    return s;
  }

  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json failing = nlohmann::json::array();
  std::size_t width = 5;
  for (const Report& r : reports) width = std::max(width, r.check.size());
  std::string table = "check" + std::string(width - 5 + 2, ' ') + "verdict\n";
  for (const Report& r : reports) {
    rows.push_back({{"check", r.check},
                    {"verdict", std::string(to_string(r.verdict))},
                    {"caveats", r.caveats},
                    {"config_hash", r.config_hash},
                    {"schedule_hash", r.schedule_hash}});
    if (r.verdict == Verdict::fail) failing.push_back(r.check);
    table += r.check + std::string(width - r.check.size() + 2, ' ') + std::string(to_string(r.verdict)) + "\n";
    for (const std::string& c : r.caveats) table += "    - " + c + "\n";
  }
  if (!failing.empty()) {
    table += "failing:";
    for (const auto& f : failing) table += " " + f.get<std::string>();
    table += "\n";
  }
  s.json = {{"checks", rows}, {"failing", failing}};
  s.table = table;
  s.exit_code = failing.empty() ? 0 : 1;
  write_file(dir / "summary.json", s.json.dump(2) + "\n");
  write_file(dir / "summary.txt", s.table);
  return s;
}

}  // namespace meansense
