#include "meansense/schedule.hpp"

#include <algorithm>
#include <string>

#include "meansense/checked.hpp"
#include "meansense/error.hpp"

namespace meansense {

namespace {


Length add(Length a, Length b, unsigned level) {
  auto r = checked_add(a, b);
  if (!r) throw OverflowError("schedule lengths overflow 64 bits at level " + std::to_string(level), level);
  return *r;
}

Length mul(Length a, Length b, unsigned level) {
  auto r = checked_mul(a, b);
  if (!r) throw OverflowError("schedule lengths overflow 64 bits at level " + std::to_string(level), level);
  return *r;
}

// t_n |B_m| / |B_n|, floored; the quotient itself must fit 64 bits.
Length ratio_floor(Length t_n, Length b_m, Length b_n, unsigned level) {
  u128 q = u128(t_n) * u128(b_m) / u128(b_n);
  if (q >= u128(~Length{0})) {
    throw OverflowError("schedule lengths overflow 64 bits at level " + std::to_string(level), level);
  }
  return static_cast<Length>(q);
}

LevelRecord finish_level(unsigned n, Length k, Length len_a, Length len_b) {
  Length t = add(add(len_a, mul(2, k, n), n), len_b, n);
  return {n, k, len_a, len_b, t};
}

Length minimal_k(unsigned n, Length len_a, Length len_b) {
  return mul(n, add(mul(2, len_a, n), len_b, n), n);
}

}  // namespace

std::string_view to_string(Construction c) { return c == Construction::s3 ? "S3" : "S4"; }

Construction construction_from_string(std::string_view s) {
  if (s == "S3" || s == "s3") return Construction::s3;
  if (s == "S4" || s == "s4") return Construction::s4;
  throw ParseError("unknown construction '" + std::string(s) + "'");
}

const LevelRecord& Schedule::level(unsigned n) const {
  if (n == 0 || n > levels.size()) {
    throw ParameterError("level " + std::to_string(n) + " outside schedule of depth " +
                         std::to_string(levels.size()));
  }
  return levels[n - 1];
}

Length Schedule::next_a_length(unsigned n) const {
  const LevelRecord& l = level(n);
  return add(add(mul(2, l.len_a, n + 1), mul(2, l.k, n + 1), n + 1), l.len_b, n + 1);
}

Length s3_b_length(Length len_a_prev, Length len_a) {
  // |A_n| + 1 blocks, each A_{n-1} followed by |A_n| symbols.
  auto blocks = checked_add(len_a, 1);
  auto block_len = checked_add(len_a_prev, len_a);
  if (!blocks || !block_len) throw OverflowError("|B_n| overflows 64 bits", 0);
  auto total = checked_mul(*blocks, *block_len);
  if (!total) throw OverflowError("|B_n| overflows 64 bits", 0);
  return *total;
}

Length s4_b_length(const std::vector<Length>& a_lengths, unsigned n) {
  if (a_lengths.size() < n) throw ParameterError("s4_b_length needs |A_1| .. |A_n|");
  Length total = n;  // |C_n|
  for (unsigned i = 1; i < n; ++i) {
    Length block = add(a_lengths[i - 1], a_lengths[i], n);
    total = add(total, mul(n - i, block, n), n);
  }
  return total;
}

Schedule build_schedule_s3(unsigned depth) {
  if (depth == 0) throw ParameterError("schedule depth must be at least 1");
  Schedule s;
  s.construction = Construction::s3;
  Length len_a = 3, len_b = 3;
  for (unsigned n = 1; n <= depth; ++n) {
    if (n > 1) {
      const LevelRecord& prev = s.levels.back();
      len_a = add(add(mul(2, prev.len_a, n), mul(2, prev.k, n), n), prev.len_b, n);
      try {
        len_b = s3_b_length(prev.len_a, len_a);
      } catch (const OverflowError&) {
        throw OverflowError("schedule lengths overflow 64 bits at level " + std::to_string(n), n);
      }
    }
    s.levels.push_back(finish_level(n, minimal_k(n, len_a, len_b), len_a, len_b));
  }
  return s;
}

Schedule build_schedule_s4(unsigned depth, const GeneratorDescriptor& base) {
  if (depth == 0) throw ParameterError("schedule depth must be at least 1");
  Schedule s;
  s.construction = Construction::s4;
  s.base = base;
  std::vector<Length> a_lengths{3};
  for (unsigned m = 1; m <= depth; ++m) {
    if (m > 1) {
      const LevelRecord& prev = s.levels.back();
      a_lengths.push_back(add(add(mul(2, prev.len_a, m), mul(2, prev.k, m), m), prev.len_b, m));
    }
    Length len_a = a_lengths[m - 1];
    Length len_b = s4_b_length(a_lengths, m);
    Length k = minimal_k(m, len_a, len_b);
    for (const LevelRecord& lower : s.levels) {
      Length strict = add(ratio_floor(lower.t, len_b, lower.len_b, m), 1, m);
      k = std::max(k, strict);
    }
    s.levels.push_back(finish_level(m, k, len_a, len_b));
  }
  return s;
}

void verify_schedule(const Schedule& s) {
  auto fail = [](unsigned n, const std::string& why) {
    throw ParameterError("schedule rejected at level " + std::to_string(n) + ": " + why);
  };
  if (s.levels.empty()) throw ParameterError("schedule has no levels");
  if (s.construction == Construction::s4 && !s.base) {
    throw ParameterError("S4 schedule requires a base generator");
  }
  std::vector<Length> a_lengths;
  for (unsigned n = 1; n <= s.depth(); ++n) {
    const LevelRecord& l = s.levels[n - 1];
    if (l.n != n) fail(n, "levels must be numbered 1..depth");
    Length expect_a = 3;
    if (n > 1) expect_a = s.next_a_length(n - 1);
    if (l.len_a != expect_a) fail(n, "|A_n| does not follow the recursion");
    a_lengths.push_back(l.len_a);
    Length expect_b = 0;
    if (s.construction == Construction::s3) {
      expect_b = n == 1 ? 3 : s3_b_length(a_lengths[n - 2], l.len_a);
    } else {
      expect_b = s4_b_length(a_lengths, n);
    }
    if (l.len_b != expect_b) fail(n, "|B_n| does not follow the recursion");
    if (l.t != add(add(l.len_a, mul(2, l.k, n), n), l.len_b, n)) fail(n, "t_n != |A_n|+2k_n+|B_n|");
    if (l.k < minimal_k(n, l.len_a, l.len_b)) fail(n, "k_n < n(2|A_n|+|B_n|)");
    if (s.construction == Construction::s4) {
      for (unsigned lower = 1; lower < n; ++lower) {
        const LevelRecord& ln = s.levels[lower - 1];
        // k_m / t_n > |B_m| / |B_n|  <=>  k_m |B_n| > t_n |B_m|
        if (!(u128(l.k) * ln.len_b > u128(ln.t) * l.len_b)) {
          fail(n, "k_m/t_n > |B_m|/|B_n| fails against level " + std::to_string(lower));
        }
      }
    }
  }
}

nlohmann::json to_json(const Schedule& s) {
  nlohmann::json levels = nlohmann::json::array();
  for (const LevelRecord& l : s.levels) {
    levels.push_back({{"n", l.n}, {"k_n", l.k}, {"len_A", l.len_a}, {"len_B", l.len_b}, {"t_n", l.t}});
  }
  nlohmann::json j;
  j["construction"] = std::string(to_string(s.construction));
  j["base"] = s.base ? nlohmann::json(s.base->description()) : nlohmann::json(nullptr);
  j["levels"] = std::move(levels);
  return j;
}

Schedule schedule_from_json(const nlohmann::json& j) {
  Schedule s;
  try {
    s.construction = construction_from_string(j.at("construction").get<std::string>());
    if (j.contains("base") && !j.at("base").is_null()) {
      s.base = GeneratorDescriptor::parse(j.at("base").get<std::string>());
    }
    for (const auto& l : j.at("levels")) {
      s.levels.push_back({l.at("n").get<unsigned>(), l.at("k_n").get<Length>(),
                          l.at("len_A").get<Length>(), l.at("len_B").get<Length>(),
                          l.at("t_n").get<Length>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed schedule JSON: ") + e.what());
  }
  verify_schedule(s);
  return s;
}

}  // namespace meansense
