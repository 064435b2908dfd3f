#pragma once

#include <cstdint>
#include <vector>

#include "isoacm/lie_core.hpp"
#include "isoacm/types.hpp"

namespace tst {

using namespace isoacm;

// value d/2
inline HalfInt hf(Int d) { return HalfInt::from_doubled(d); }

inline WeightFW wv(const std::vector<Int>& v) {
  WeightFW w(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) w[static_cast<Eigen::Index>(i)] = v[i];
  return w;
}

inline EpsilonWeight ev(const std::vector<HalfInt>& v) {
  EpsilonWeight e(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e[static_cast<Eigen::Index>(i)] = v[i];
  return e;
}

inline bool eq(const EpsilonWeight& a, const EpsilonWeight& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

inline bool eq(const WeightFW& a, const WeightFW& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// deterministic xorshift; tests must not depend on the platform's rand()
struct Rng {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;

  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }

  Int range(Int lo, Int hi) {  // inclusive
    return lo + static_cast<Int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline std::vector<FlagSpace> sweep_spaces(int max_rank) {
  std::vector<FlagSpace> spaces;
  for (int n = 2; n <= max_rank; ++n)
    for (int k = 1; k <= n; ++k) {
      spaces.emplace_back(LieType::B, n, k);
      spaces.emplace_back(LieType::C, n, k);
    }
  for (int n = 4; n <= max_rank; ++n)
    for (int k = 1; k <= n; ++k) {
      if (k == n - 1) continue;  // same space as k = n
      spaces.emplace_back(LieType::D, n, k);
    }
  return spaces;
}

}  // namespace tst
