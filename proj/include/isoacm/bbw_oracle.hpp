#pragma once

#include <vector>

#include "isoacm/lie_core.hpp"
#include "isoacm/types.hpp"

namespace isoacm {

/// A weight is singular when some positive root pairs to zero with it,
/// otherwise regular of index p where p counts the strictly negative
/// pairings.
struct Classification {
  bool singular = false;
  Root witness;   // first zero pairing in canonical root order
  Int index = 0;  // valid when regular

  static Classification make_singular(const Root& r) { return {true, r, 0}; }
  static Classification make_regular(Int p) { return {false, {}, p}; }
};

Classification classify(const FlagSpace& space, const EpsilonWeight& mu);

/// lambda + rho - t * lambda_k in e_i coordinates.
EpsilonWeight twisted_weight(const FlagSpace& space, const WeightFW& lambda, Int t);

struct DominantRep {
  EpsilonWeight weight;
  Int sign_flips;  // sign changes applied by the chosen group element
};

/// The unique dominant weight in the orbit of mu under the signed
/// permutations (evenly-signed for D). Requires mu regular.
DominantRep dominant_representative(const FlagSpace& space, const EpsilonWeight& mu);

/// Dimension of the irreducible representation of the ambient group with
/// highest weight lambda_g (the marked node plays no role here). Exact; the
/// defining product is checked to be integral.
Int weyl_dimension(const FlagSpace& group, const WeightFW& lambda_g);

struct CohomologyResult {
  bool zero = true;
  Int degree = 0;        // valid when !zero
  WeightFW rep_weight;   // highest weight of the representation, when !zero
  Int dimension = 0;     // its dimension, when !zero
};

/// Sheaf cohomology of the irreducible bundle twisted by -t: zero when the
/// shifted weight is singular, otherwise concentrated in one degree.
CohomologyResult cohomology(const FlagSpace& space, const WeightFW& lambda, Int t);

/// Direct cohomological test: for every integer t the shifted weight must be
/// singular, regular of index 0, or regular of top index dim G/P(alpha_k).
/// The scan window is self-determined from the monotone growth of the index
/// in t. Requires lambda initialized (a_k = 0) and dominant off the node.
bool acm_by_oracle(const FlagSpace& space, const WeightFW& lambda);

}  // namespace isoacm
