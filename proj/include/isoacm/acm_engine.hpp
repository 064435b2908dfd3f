#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "isoacm/step_matrix.hpp"
#include "isoacm/types.hpp"

namespace isoacm {

/// Decision plus certificate. When ACM, witnesses maps every integer in
/// [1, M] to an entry position holding it; otherwise gaps lists the
/// uncovered integers and missing() is the smallest one.
struct AcmVerdict {
  bool is_acm = false;
  HalfInt M;
  Int twist_applied = 0;
  std::map<Int, EntryRef> witnesses;
  std::vector<Int> gaps;

  std::optional<Int> missing() const {
    if (gaps.empty()) return std::nullopt;
    return gaps.front();
  }
};

/// Zeroes the marked coefficient and reports it as the twist. ACM status is
/// invariant under twisting, so callers may hand in any a_k (negative too).
std::pair<WeightFW, Int> normalize_initialized(const FlagSpace& space, const WeightFW& lambda);

/// The step-matrix criterion: normalize, build, and check that every
/// integer in [1, M] occurs among the entries.
AcmVerdict is_acm(const FlagSpace& space, const WeightFW& lambda);

/// All initialized dominant weights with sum of coefficients <= sum_bound,
/// in lexicographic order.
std::vector<WeightFW> initialized_dominant_weights(const FlagSpace& space, Int sum_bound);

struct EquivalenceRecord {
  WeightFW lambda;
  bool acm_theorem = false;
  bool acm_oracle = false;
  HalfInt M;
  Int dim = 0;
};

struct EquivalenceReport {
  FlagSpace space;
  Int sum_bound = 0;
  std::vector<EquivalenceRecord> records;  // lexicographic in lambda
  std::vector<WeightFW> mismatches;

  std::vector<WeightFW> acm_weights() const;
  bool ok() const { return mismatches.empty(); }
};

/// Runs both deciders over every initialized dominant weight with
/// coefficient sum <= sum_bound and records any disagreement. Candidate
/// evaluation may fan out over jobs; the report order does not depend on it.
EquivalenceReport verify_equivalence(const FlagSpace& space, Int sum_bound, int jobs = 1);

}  // namespace isoacm
