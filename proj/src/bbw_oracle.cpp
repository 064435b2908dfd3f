#include "isoacm/bbw_oracle.hpp"

#include <algorithm>
#include <vector>

#include "isoacm/errors.hpp"

namespace isoacm {

Classification classify(const FlagSpace& space, const EpsilonWeight& mu) {
  if (mu.size() != space.rank()) throw validation_error("epsilon vector has wrong length");
  Int negatives = 0;
  for (const Root& alpha : positive_roots(space)) {
    const HalfInt p = pairing(mu, alpha);
    if (p == HalfInt(0)) return Classification::make_singular(alpha);
    if (p < HalfInt(0)) ++negatives;
  }
  return Classification::make_regular(negatives);
}

EpsilonWeight twisted_weight(const FlagSpace& space, const WeightFW& lambda, Int t) {
  require_dominant_off_marked(space, lambda);
  return to_epsilon(space, lambda) + rho(space) -
         HalfInt(t) * fundamental_weight(space, space.k());
}

DominantRep dominant_representative(const FlagSpace& space, const EpsilonWeight& mu) {
  const Classification cls = classify(space, mu);
  if (cls.singular)
    throw validation_error("dominant representative requested for a singular weight (" +
                           to_string(cls.witness) + " pairs to zero)");
  const int n = space.rank();

  // regularity makes the absolute values pairwise distinct (up to one zero
  // in type D), so the descending order is unique
  std::vector<HalfInt> vals(mu.data(), mu.data() + n);
  std::vector<HalfInt> sorted;
  sorted.reserve(n);
  for (const auto& v : vals) sorted.push_back(abs(v));
  std::sort(sorted.begin(), sorted.end(), [](const HalfInt& a, const HalfInt& b) { return b < a; });

  // the Weyl group of D flips evenly many signs; when the parity is odd and
  // no zero can absorb it, the smallest coordinate stays negative
  bool negate_last = false;
  if (space.type() == LieType::D) {
    Int negatives = 0;
    for (const auto& v : vals) negatives += v < HalfInt(0);
    if (negatives % 2 != 0 && !(sorted.back() == HalfInt(0))) negate_last = true;
  }

  EpsilonWeight out(n);
  for (int i = 0; i < n; ++i) out[i] = sorted[i];
  if (negate_last) out[n - 1] = -out[n - 1];

  Int flips = 0;
  for (const auto& v : vals) {
    if (v == HalfInt(0)) continue;
    const bool negative_out = negate_last && abs(v) == sorted.back();
    if ((v < HalfInt(0)) != negative_out) ++flips;
  }
  // an odd visible count means the group element also flipped the zero
  if (space.type() == LieType::D && flips % 2 != 0) ++flips;
  return {out, flips};
}

namespace {

using Wide = __int128;

constexpr Wide kWideMax = (static_cast<Wide>(1) << 126);

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

Wide gcd_wide(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    const Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// keeps (num, den) coprime throughout
void mul_reduced(Wide& num, Wide& den, Int num_factor, Int den_factor) {
  Wide nf = num_factor, df = den_factor;
  Wide g = gcd_wide(nf, df);
  nf /= g;
  df /= g;
  g = gcd_wide(nf, den);
  nf /= g;
  den /= g;
  g = gcd_wide(num, df);
  num /= g;
  df /= g;
  if (wide_abs(num) > kWideMax / wide_abs(nf) || wide_abs(den) > kWideMax / wide_abs(df))
    throw overflow_error("dimension product exceeds the exact range");
  num *= nf;
  den *= df;
}

}  // namespace

Int weyl_dimension(const FlagSpace& group, const WeightFW& lambda_g) {
  if (lambda_g.size() != group.rank()) throw validation_error("weight vector has wrong length");
  for (Eigen::Index i = 0; i < lambda_g.size(); ++i)
    if (lambda_g[i] < 0)
      throw validation_error("weight " + to_string(lambda_g) + " is not dominant for the group");

  const EpsilonWeight shifted = to_epsilon(group, lambda_g) + rho(group);
  const EpsilonWeight r = rho(group);
  Wide num = 1, den = 1;
  for (const Root& alpha : positive_roots(group))
    mul_reduced(num, den, pairing(shifted, alpha).doubled(), pairing(r, alpha).doubled());
  if (den != 1 && den != -1) throw invariant_error("Weyl dimension product is not integral");
  num /= den;
  if (num <= 0 || num > kWideMax || num > static_cast<Wide>(INT64_MAX))
    throw overflow_error("representation dimension exceeds 64 bits");
  return static_cast<Int>(num);
}

CohomologyResult cohomology(const FlagSpace& space, const WeightFW& lambda, Int t) {
  const EpsilonWeight mu = twisted_weight(space, lambda, t);
  const Classification cls = classify(space, mu);
  if (cls.singular) return {};
  const DominantRep rep = dominant_representative(space, mu);
  WeightFW weight = from_epsilon(space, rep.weight);
  for (Eigen::Index i = 0; i < weight.size(); ++i) weight[i] -= 1;  // subtract rho
  CohomologyResult out;
  out.zero = false;
  out.degree = cls.index;
  out.rep_weight = weight;
  out.dimension = weyl_dimension(space, weight);
  return out;
}

namespace {

Int ceil_div(Int a, Int b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

bool acm_by_oracle(const FlagSpace& space, const WeightFW& lambda) {
  require_dominant_off_marked(space, lambda);
  if (lambda[space.k() - 1] != 0)
    throw validation_error("weight " + to_string(lambda) + " is not initialized (a_" +
                           std::to_string(space.k()) + " != 0)");

  const Int dim = dim_flag(space);
  const EpsilonWeight start = twisted_weight(space, lambda, 0);  // lambda + rho
  const EpsilonWeight marked = fundamental_weight(space, space.k());

  // Pairings are affine in t and only decrease (strictly on the roots the
  // marked weight meets), so the regular index grows with t. Past t_top
  // every such pairing is negative and the index stays at dim.
  Int t_top = 1;
  for (const Root& alpha : positive_roots(space)) {
    const Int slope = pairing(marked, alpha).doubled();
    if (slope <= 0) continue;
    t_top = std::max(t_top, 1 + ceil_div(pairing(start, alpha).doubled(), slope));
  }

  bool top_reached = false;
  for (Int t = 1; t <= t_top; ++t) {
    const Classification cls = classify(space, twisted_weight(space, lambda, t));
    if (cls.singular) continue;
    if (cls.index > dim)
      throw invariant_error("regular index " + std::to_string(cls.index) + " exceeds dim " +
                            std::to_string(dim) + " on " + space.name());
    if (cls.index == dim) {
      top_reached = true;
      continue;
    }
    if (cls.index != 0) return false;
  }
  if (!top_reached)
    throw invariant_error("t-scan ended before reaching the top index on " + space.name());
  return true;
}

}  // namespace isoacm
