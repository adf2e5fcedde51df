#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "meansense/generator.hpp"
#include "meansense/word.hpp"

namespace meansense {

/// Which recursive family a schedule drives.
///  - s3: A_1 = 111, B_1 = 000, B_n made of |A_n|+1 marked copies of A_{n-1}.
///  - s4: A_1 = 101, B_1 = C_1, B_n = C_n followed by (A_i 0^{|A_{i+1}|})^{n-i} blocks.
enum class Construction { s3, s4 };

std::string_view to_string(Construction c);
Construction construction_from_string(std::string_view s);

struct LevelRecord {
  unsigned n = 0;
  Length k = 0;      // zero-padding length k_n
  Length len_a = 0;  // |A_n|
  Length len_b = 0;  // |B_n|
  Length t = 0;      // |A_n| + 2 k_n + |B_n|

  friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

struct Schedule {
  Construction construction = Construction::s3;
  std::vector<LevelRecord> levels;  // levels[i].n == i + 1
  std::optional<GeneratorDescriptor> base;

  unsigned depth() const noexcept { return static_cast<unsigned>(levels.size()); }
  const LevelRecord& level(unsigned n) const;
  /// |A_{n+1}| = 2|A_n| + 2k_n + |B_n|; defined for n <= depth.
  Length next_a_length(unsigned n) const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Minimal schedule k_n = n(2|A_n| + |B_n|). Throws OverflowError naming
/// the first level whose lengths leave 64 bits.
Schedule build_schedule_s3(unsigned depth);

/// Greedy minimal schedule satisfying, at every level m,
///   k_m >= m(2|A_m| + |B_m|)  and  k_m |B_n| > t_n |B_m| for all n < m.
/// |B_m| only depends on k_1..k_{m-1}, which fixes the evaluation order.
Schedule build_schedule_s4(unsigned depth, const GeneratorDescriptor& base);

/// Re-verifies the length recursions and the k_n conditions. Throws
/// ParameterError describing the first violation.
void verify_schedule(const Schedule& s);

/// Length recursion for |B_n| given the already-known lower levels.
Length s3_b_length(Length len_a_prev, Length len_a);
Length s4_b_length(const std::vector<Length>& a_lengths, unsigned n);

nlohmann::json to_json(const Schedule& s);
/// Parses and verifies a (possibly user-supplied) schedule.
Schedule schedule_from_json(const nlohmann::json& j);

}  // namespace meansense
