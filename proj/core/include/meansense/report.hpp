#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace meansense {

enum class Verdict { pass, fail, inconclusive, info };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// A per-step sequence, written as a `step,value` CSV.
struct Series {
  std::string name;
  std::vector<double> values;
  std::uint64_t first_step = 0;
};

/// Result of a check or diagnostic. Serialises to
/// {check, params, verdict, values, witnesses[], caveats[], config_hash, schedule_hash}.
struct Report {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::info;
  nlohmann::json values = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::array();
  std::vector<std::string> caveats;
  std::vector<Series> series;
  std::string config_hash;
  std::string schedule_hash;

  bool passed() const noexcept { return verdict == Verdict::pass; }
  nlohmann::json to_json() const;
};

Report report_from_json(const nlohmann::json& j);

/// Real formatting used in every CSV: 17 significant digits, '.' decimal.
std::string format_real(double v);
std::string series_csv(const Series& s);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Combines two verdicts: any FAIL wins, then INCONCLUSIVE, then PASS.
Verdict combine(Verdict a, Verdict b);

}  // namespace meansense
