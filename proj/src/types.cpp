#include "isoacm/types.hpp"

#include <sstream>

#include "isoacm/errors.hpp"

namespace isoacm {

LieType parse_lie_type(std::string_view s) {
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  if (s == "D" || s == "d") return LieType::D;
  throw validation_error("unknown Lie type '" + std::string(s) + "'; expected B, C or D");
}

namespace {

void check_rank(LieType type, int n) {
  switch (type) {
    case LieType::B:
      if (n < 2) throw validation_error("B_n with n<2 unsupported; B_1 = A_1");
      return;
    case LieType::C:
      if (n < 2) throw validation_error("C_n with n<2 unsupported; C_1 = A_1");
      return;
    case LieType::D:
      if (n >= 4) return;
      if (n == 3) throw validation_error("D_n with n<4 unsupported; D_3 = A_3");
      if (n == 2) throw validation_error("D_n with n<4 unsupported; D_2 = A_1 x A_1");
      throw validation_error("D_n with n<4 unsupported");
  }
  throw validation_error("invalid Lie type");
}

}  // namespace

FlagSpace::FlagSpace(LieType type, int n, int k) : type_(type), n_(n), k_(k), requested_k_(k) {
  check_rank(type, n);
  if (k < 1 || k > n) {
    throw validation_error("marked node k=" + std::to_string(k) + " outside [1," +
                           std::to_string(n) + "]");
  }
  // D_n/P(alpha_{n-1}) and D_n/P(alpha_n) are the same space; work on the
  // k = n model and exchange the two spin coefficients.
  if (type == LieType::D && k == n - 1) k_ = n;
  switch (type) {
    case LieType::B: two_e_ = 1; break;
    case LieType::C: two_e_ = 2; break;
    case LieType::D: two_e_ = 0; break;
  }
}

WeightFW FlagSpace::internal_weight(const WeightFW& w) const {
  if (w.size() != n_) {
    throw validation_error("weight vector has length " + std::to_string(w.size()) +
                           ", expected " + std::to_string(n_));
  }
  if (!spin_nodes_swapped()) return w;
  WeightFW out = w;
  std::swap(out[n_ - 2], out[n_ - 1]);
  return out;
}

std::string FlagSpace::name() const {
  std::ostringstream os;
  os << letter(type_) << "_" << n_ << "/P(alpha_" << k_ << ")";
  return os.str();
}

WeightFW make_weight(std::initializer_list<Int> coeffs) {
  WeightFW w(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (Int c : coeffs) w[i++] = c;
  return w;
}

WeightFW zero_weight(int n) { return WeightFW::Zero(n); }

WeightFW unit_weight(int n, int i) {
  WeightFW w = WeightFW::Zero(n);
  w[i - 1] = 1;
  return w;
}

bool lex_less(const WeightFW& a, const WeightFW& b) {
  const Eigen::Index m = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < m; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

std::string to_string(const WeightFW& w) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  return os.str();
}

}  // namespace isoacm
