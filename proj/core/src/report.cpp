#include "meansense/report.hpp"

#include <cstdio>

#include "meansense/error.hpp"

namespace meansense {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    case Verdict::info: return "INFO";
  }
  return "INFO";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "PASS") return Verdict::pass;
  if (s == "FAIL") return Verdict::fail;
  if (s == "INCONCLUSIVE") return Verdict::inconclusive;
  if (s == "INFO") return Verdict::info;
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["params"] = params;
  j["verdict"] = std::string(to_string(verdict));
  j["values"] = values;
  j["witnesses"] = witnesses;
  j["caveats"] = caveats;
  j["config_hash"] = config_hash;
  j["schedule_hash"] = schedule_hash;
  nlohmann::json names = nlohmann::json::array();
  for (const Series& s : series) names.push_back(s.name);
  j["series"] = std::move(names);
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  try {
    r.check = j.at("check").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.params = j.value("params", nlohmann::json::object());
    r.values = j.value("values", nlohmann::json::object());
    r.witnesses = j.value("witnesses", nlohmann::json::array());
    r.caveats = j.value("caveats", std::vector<std::string>{});
    r.config_hash = j.value("config_hash", std::string{});
    r.schedule_hash = j.value("schedule_hash", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string series_csv(const Series& s) {
  std::string out = "step,value\n";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    out += std::to_string(s.first_step + i);
    out += ',';
    out += format_real(s.values[i]);
    out += '\n';
  }
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  if (a == Verdict::pass || b == Verdict::pass) return Verdict::pass;
  return Verdict::info;
}

}  // namespace meansense
