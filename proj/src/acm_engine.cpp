#include "isoacm/acm_engine.hpp"

#include <algorithm>
#include <functional>

#include "isoacm/bbw_oracle.hpp"
#include "isoacm/detail/parallel.hpp"
#include "isoacm/errors.hpp"

namespace isoacm {

std::pair<WeightFW, Int> normalize_initialized(const FlagSpace& space, const WeightFW& lambda) {
  require_dominant_off_marked(space, lambda);
  WeightFW out = lambda;
  const Int twist = out[space.k() - 1];
  out[space.k() - 1] = 0;
  return {out, twist};
}

AcmVerdict is_acm(const FlagSpace& space, const WeightFW& lambda) {
  const auto [normalized, twist] = normalize_initialized(space, lambda);
  const StepMatrix sm = build_step_matrix(space, normalized);

  AcmVerdict v;
  v.twist_applied = twist;
  v.M = sm.M;
  const auto positions = integer_entry_positions(sm);
  const Int top = sm.M.integer_value();
  for (Int l = 1; l <= top; ++l) {
    const auto it = positions.find(l);
    if (it == positions.end())
      v.gaps.push_back(l);
    else
      v.witnesses.emplace(l, it->second.front());
  }
  v.is_acm = v.gaps.empty();
  return v;
}

std::vector<WeightFW> initialized_dominant_weights(const FlagSpace& space, Int sum_bound) {
  if (sum_bound < 0) throw validation_error("sum bound must be non-negative");
  const int n = space.rank();
  std::vector<WeightFW> out;
  WeightFW current = zero_weight(n);
  std::function<void(int, Int)> walk = [&](int u, Int budget) {
    if (u > n) {
      out.push_back(current);
      return;
    }
    if (u == space.k()) {
      walk(u + 1, budget);
      return;
    }
    for (Int v = 0; v <= budget; ++v) {
      current[u - 1] = v;
      walk(u + 1, budget - v);
    }
    current[u - 1] = 0;
  };
  walk(1, sum_bound);
  return out;
}

std::vector<WeightFW> EquivalenceReport::acm_weights() const {
  std::vector<WeightFW> out;
  for (const auto& r : records)
    if (r.acm_theorem) out.push_back(r.lambda);
  return out;
}

EquivalenceReport verify_equivalence(const FlagSpace& space, Int sum_bound, int jobs) {
  EquivalenceReport report{space, sum_bound, {}, {}};
  const auto candidates = initialized_dominant_weights(space, sum_bound);
  const Int dim = dim_flag(space);
  report.records = detail::map_indexed<EquivalenceRecord>(candidates, jobs, [&](const WeightFW& lambda) {
    EquivalenceRecord rec;
    rec.lambda = lambda;
    rec.acm_theorem = is_acm(space, lambda).is_acm;
    rec.acm_oracle = acm_by_oracle(space, lambda);
    rec.M = max_entry_closed_form(space, lambda);
    rec.dim = dim;
    return rec;
  });
  for (const auto& rec : report.records)
    if (rec.acm_theorem != rec.acm_oracle) report.mismatches.push_back(rec.lambda);
  return report;
}

}  // namespace isoacm
