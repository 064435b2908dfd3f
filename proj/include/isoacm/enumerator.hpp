#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isoacm/acm_engine.hpp"
#include "isoacm/types.hpp"

namespace isoacm {

struct EnumerationResult {
  FlagSpace space;
  std::vector<WeightFW> acm_weights;  // lexicographic, always contains 0
  Int candidates_scanned = 0;
  std::string bound_used;
};

/// Every initialized irreducible homogeneous ACM bundle on the space, up to
/// twist. The candidate set is the finite lattice polytope cut out by
/// M(lambda) <= dim G/P(alpha_k); M is affine in the coefficients with
/// positive weights, which bounds each coordinate.
EnumerationResult enumerate_acm(const FlagSpace& space, int jobs = 1);

struct FamilyCheck {
  std::string name;
  bool iff = false;  // both directions asserted; otherwise sufficiency only
  Int cases = 0;
  std::vector<WeightFW> violations;
};

struct CorollaryReport {
  FlagSpace space;
  std::vector<FamilyCheck> families;

  bool all_passed() const {
    for (const auto& f : families)
      if (!f.violations.empty()) return false;
    return true;
  }
};

/// Checks the closed-form coefficient-range criteria applicable to the
/// space against the decision engine. Two-sided ("iff") families are swept
/// over their box enlarged by margin in each coordinate so the failure
/// direction is exercised just outside; one-sided families are swept inside
/// the box only.
CorollaryReport validate_corollaries(const FlagSpace& space, Int margin = 2);

enum class AtlasFormat { Csv, JsonLines };

/// One record per (space, ACM weight): type,n,k,lambda,M_num,M_den,dim,acm.
/// Deterministic order, so re-emission is byte-identical.
void emit_atlas(const std::vector<FlagSpace>& spaces, std::ostream& out, AtlasFormat format,
                int jobs = 1);

}  // namespace isoacm
