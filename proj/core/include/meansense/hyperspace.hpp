#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "meansense/constructions.hpp"
#include "meansense/diagnostics.hpp"
#include "meansense/index_set.hpp"
#include "meansense/language.hpp"
#include "meansense/report.hpp"

namespace meansense {

/// A non-empty finite set of points, i.e. an element of K_inf(X). Members
/// are deduplicated by exact prefix equality and kept in lexicographic
/// prefix order, so two sets are equal iff their prefix lists are.
class FiniteSet {
 public:
  explicit FiniteSet(std::vector<PointView> members);

  const std::vector<PointView>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  Length horizon() const noexcept { return horizon_; }
  unsigned alphabet_size() const noexcept { return members_.front().prefix.alphabet_size(); }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b);

 private:
  std::vector<PointView> members_;
  Length horizon_ = 0;
};

/// A Hausdorff distance 1/g in first-difference form; g = 0 means no
/// difference was seen within the compared prefixes (value 0).
struct HausdorffValue {
  Length first_difference = 0;
  bool truncated = false;
  double value() const noexcept {
    return first_difference == 0 ? 0.0 : 1.0 / static_cast<double>(first_difference);
  }
  friend bool operator==(const HausdorffValue&, const HausdorffValue&) = default;
};

/// max{ max_a min_b d(a,b), max_b min_a d(a,b) }.
HausdorffValue hausdorff_distance(const FiniteSet& a, const FiniteSet& b);
/// inf{ eps > 0 : B(A, eps) ⊃ B and B(B, eps) ⊃ A }, by scanning the
/// distinct pairwise distances as candidate radii.
HausdorffValue hausdorff_distance_by_balls(const FiniteSet& a, const FiniteSet& b);

/// Elementwise shift; members that coincide afterwards merge.
FiniteSet tk_step(const FiniteSet& a);

/// A ∈ <U_1, ..., U_n> for cylinder opens U_i = [opens[i]].
bool vietoris_member(const FiniteSet& a, std::span<const Word> opens);

/// phi(family) = union of the member sets.
FiniteSet union_factor(std::span<const FiniteSet> family);

nlohmann::json to_json(const FiniteSet& a);
FiniteSet finite_set_from_json(const nlohmann::json& j);

struct HyperWitness {
  FiniteSet q;
  Report report;
};

/// For each p_k = sigma^{m_k} x in P: picks the smallest N_k > 1/epsilon with
/// w_k = x_[m_k+1, m_k+N_k+1] a suffix of some A_i, and builds
///   Q_k = { w_k 0^j 1 0^inf : s_k + j + 1 <= horizon } ∪ { w_k 0^inf }
/// truncated at `horizon`. Every Q member is registered in `la`.
HyperWitness hyper_witness_s3(const WordFamily& family, LanguageApprox& la, const FiniteSet& p,
                              double epsilon, Length horizon);

/// Per-step Hausdorff distances d_H(T_K^i P, T_K^i Q), i < steps, from
/// depth-D windows of every member. `value` counts windows that agree in
/// full as 0 (lower bound); the correction lifts them to 1/(D+1).
/// D is capped at 64 / bits-per-symbol.
struct HyperSequence {
  std::vector<Length> gaps;  // D+1 when no difference within the window
  Length depth = 0;
  double lower(Length i) const {
    return gaps[i] > depth ? 0.0 : 1.0 / static_cast<double>(gaps[i]);
  }
  double upper(Length i) const { return 1.0 / static_cast<double>(gaps[i]); }
};

HyperSequence hausdorff_sequence(const FiniteSet& p, const FiniteSet& q, Length steps,
                                 Length depth = kDefaultComparisonDepth);
AverageReport hyper_mean_avg(const FiniteSet& p, const FiniteSet& q, Length steps,
                             Length depth = kDefaultComparisonDepth);

struct CylinderTuple {
  std::vector<Word> cylinders;
  std::size_t arity() const noexcept { return cylinders.size(); }
};

struct IndependenceOptions {
  std::uint64_t exhaust_cap = std::uint64_t{1} << 16;
  Length scan_limit = 1'000'000;  // shifts examined per source point
};

/// Searches, for every s in {1..k}^J, a point of the language approximation
/// with sigma^i in A_{s(i)} for all i in J. PASS when every pattern has a
/// witness; FAIL is relative to the approximation. Throws CapExceeded when
/// k^|J| exceeds the cap.
Report independence_check(const CylinderTuple& t, const IndexSet& j, const LanguageApprox& la,
                          const IndependenceOptions& opt = {});

}  // namespace meansense
