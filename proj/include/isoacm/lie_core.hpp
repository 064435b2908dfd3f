#pragma once

#include <string>
#include <vector>

#include "isoacm/types.hpp"

namespace isoacm {

/// A positive root of B_n, C_n or D_n in e_i coordinates.
struct Root {
  enum class Kind : std::uint8_t {
    Difference,  // e_i - e_j, i < j
    Sum,         // e_i + e_j, i < j
    Short,       // e_i       (type B)
    Long,        // 2 e_i     (type C)
  };

  Kind kind = Kind::Short;
  int i = 1;
  int j = 1;  // == i for Short/Long

  friend bool operator==(const Root&, const Root&) = default;
};

std::string to_string(const Root& r);  // "e1-e2", "e1+e3", "e2", "2e1"

/// All positive roots in a fixed deterministic order: differences in
/// lexicographic (i, j) order, then sums, then the short (B) or long (C)
/// roots. Counts: n^2 for B and C, n^2 - n for D.
std::vector<Root> positive_roots(const FlagSpace& space);

/// The root as a dense coordinate vector of length n.
EpsilonWeight root_vector(int n, const Root& r);

EpsilonWeight fundamental_weight(const FlagSpace& space, int i);

/// rho = sum of all fundamental weights; coordinate i is n + e - i.
EpsilonWeight rho(const FlagSpace& space);

/// Euclidean pairing of mu with the root's coordinate vector. The underlying
/// invariant form differs from this one by a positive type-dependent scalar
/// only, so signs and vanishing are unaffected.
HalfInt pairing(const EpsilonWeight& mu, const Root& alpha);

/// Exact dot product in the e_i basis.
HalfInt dot(const EpsilonWeight& a, const EpsilonWeight& b);

EpsilonWeight to_epsilon(const FlagSpace& space, const WeightFW& w);

/// Inverse change of basis; throws validation_error when mu does not lie in
/// the weight lattice of the type.
WeightFW from_epsilon(const FlagSpace& space, const EpsilonWeight& mu);

/// dim G/P(alpha_k): k(4n+1-3k)/2 for B and C, k(4n-1-3k)/2 for D.
Int dim_flag(const FlagSpace& space);

/// a_u >= 0 for every u != k.
bool dominant_off_marked(const FlagSpace& space, const WeightFW& w);
void require_dominant_off_marked(const FlagSpace& space, const WeightFW& w);

}  // namespace isoacm
