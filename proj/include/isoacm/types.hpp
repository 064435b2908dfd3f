#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "isoacm/half_int.hpp"

namespace isoacm {

using Int = std::int64_t;

/// Weight written in the fundamental-weight basis (integer coefficients).
using WeightFW = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// Weight written in the orthogonal e_i basis (exact half-integers).
using EpsilonWeight = Eigen::Matrix<HalfInt, Eigen::Dynamic, 1>;

using HalfIntMatrix = Eigen::Matrix<HalfInt, Eigen::Dynamic, Eigen::Dynamic>;

enum class LieType : char { B = 'B', C = 'C', D = 'D' };

inline char letter(LieType t) { return static_cast<char>(t); }

LieType parse_lie_type(std::string_view s);

/// The isotropic Grassmannian G/P(alpha_k) for G of type B_n, C_n or D_n.
///
/// Low ranks that coincide with type A quotients are rejected (B, C need
/// n >= 2, D needs n >= 4). For D the node k = n-1 is transparently
/// remapped to k = n, exchanging the two spin coefficients; the remap is
/// recorded and exposed through spin_nodes_swapped().
class FlagSpace {
 public:
  FlagSpace(LieType type, int n, int k);

  LieType type() const { return type_; }
  int rank() const { return n_; }
  int k() const { return k_; }
  int requested_k() const { return requested_k_; }
  bool spin_nodes_swapped() const { return k_ != requested_k_; }

  /// e = 1/2 (B), 1 (C), 0 (D).
  HalfInt e() const { return HalfInt::from_doubled(two_e_); }
  Int two_e() const { return two_e_; }

  /// Coefficient vector as the library uses it: for a remapped D space the
  /// last two coefficients are exchanged, otherwise the input is returned.
  WeightFW internal_weight(const WeightFW& w) const;

  std::string name() const;  // e.g. "D_5/P(alpha_2)"

  friend bool operator==(const FlagSpace& a, const FlagSpace& b) {
    return a.type_ == b.type_ && a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  LieType type_;
  int n_;
  int k_;
  int requested_k_;
  Int two_e_;
};

WeightFW make_weight(std::initializer_list<Int> coeffs);
WeightFW zero_weight(int n);

/// Coefficient vector of the i-th fundamental weight (1-based).
WeightFW unit_weight(int n, int i);

bool lex_less(const WeightFW& a, const WeightFW& b);

std::string to_string(const WeightFW& w);  // "4,4,0,0,0"

}  // namespace isoacm
