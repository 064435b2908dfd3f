#include "isoacm/lie_core.hpp"

#include <sstream>

#include "isoacm/errors.hpp"

namespace isoacm {

std::string to_string(const Root& r) {
  std::ostringstream os;
  switch (r.kind) {
    case Root::Kind::Difference: os << "e" << r.i << "-e" << r.j; break;
    case Root::Kind::Sum: os << "e" << r.i << "+e" << r.j; break;
    case Root::Kind::Short: os << "e" << r.i; break;
    case Root::Kind::Long: os << "2e" << r.i; break;
  }
  return os.str();
}

std::vector<Root> positive_roots(const FlagSpace& space) {
  const int n = space.rank();
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back({Root::Kind::Difference, i, j});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back({Root::Kind::Sum, i, j});
  switch (space.type()) {
    case LieType::B:
      for (int i = 1; i <= n; ++i) roots.push_back({Root::Kind::Short, i, i});
      break;
    case LieType::C:
      for (int i = 1; i <= n; ++i) roots.push_back({Root::Kind::Long, i, i});
      break;
    case LieType::D:
      break;
  }
  return roots;
}

EpsilonWeight root_vector(int n, const Root& r) {
  EpsilonWeight v = EpsilonWeight::Constant(n, HalfInt(0));
  switch (r.kind) {
    case Root::Kind::Difference:
      v[r.i - 1] = HalfInt(1);
      v[r.j - 1] = HalfInt(-1);
      break;
    case Root::Kind::Sum:
      v[r.i - 1] = HalfInt(1);
      v[r.j - 1] = HalfInt(1);
      break;
    case Root::Kind::Short: v[r.i - 1] = HalfInt(1); break;
    case Root::Kind::Long: v[r.i - 1] = HalfInt(2); break;
  }
  return v;
}

EpsilonWeight fundamental_weight(const FlagSpace& space, int i) {
  const int n = space.rank();
  if (i < 1 || i > n) {
    throw validation_error("fundamental weight index " + std::to_string(i) + " outside [1," +
                           std::to_string(n) + "]");
  }
  EpsilonWeight w = EpsilonWeight::Constant(n, HalfInt(0));
  const Int two_e = space.two_e();
  // lambda_i = e_1 + ... + e_i up to i = n-2+2e; the remaining nodes carry
  // the (half-)spin coordinates.
  if (i <= n - 2 + two_e) {
    for (int u = 0; u < i; ++u) w[u] = HalfInt(1);
    return w;
  }
  switch (space.type()) {
    case LieType::B:  // i == n
      for (int u = 0; u < n; ++u) w[u] = HalfInt::from_doubled(1);
      return w;
    case LieType::C:  // unreachable: n <= n-2+2e
      for (int u = 0; u < i; ++u) w[u] = HalfInt(1);
      return w;
    case LieType::D:
      for (int u = 0; u + 1 < n; ++u) w[u] = HalfInt::from_doubled(1);
      w[n - 1] = HalfInt::from_doubled(i == n ? 1 : -1);
      return w;
  }
  throw invariant_error("invalid Lie type");
}

EpsilonWeight rho(const FlagSpace& space) {
  const int n = space.rank();
  EpsilonWeight r(n);
  for (int i = 1; i <= n; ++i) r[i - 1] = HalfInt::from_doubled(2 * (n - i) + space.two_e());
  return r;
}

HalfInt pairing(const EpsilonWeight& mu, const Root& alpha) {
  const auto n = mu.size();
  if (alpha.i < 1 || alpha.j < 1 || alpha.i > n || alpha.j > n)
    throw validation_error("root index exceeds weight dimension");
  switch (alpha.kind) {
    case Root::Kind::Difference: return mu[alpha.i - 1] - mu[alpha.j - 1];
    case Root::Kind::Sum: return mu[alpha.i - 1] + mu[alpha.j - 1];
    case Root::Kind::Short: return mu[alpha.i - 1];
    case Root::Kind::Long: return mu[alpha.i - 1] + mu[alpha.i - 1];
  }
  throw invariant_error("invalid root kind");
}

HalfInt dot(const EpsilonWeight& a, const EpsilonWeight& b) {
  if (a.size() != b.size()) throw validation_error("dot product dimension mismatch");
  Int sum = 0;  // of doubled*doubled, i.e. 4x the value
  for (Eigen::Index i = 0; i < a.size(); ++i)
    sum = detail::checked_add(sum, detail::checked_mul(a[i].doubled(), b[i].doubled()));
  if (sum % 2 != 0) throw error("dot product leaves (1/2)*Z");
  return HalfInt::from_doubled(sum / 2);
}

EpsilonWeight to_epsilon(const FlagSpace& space, const WeightFW& w) {
  const int n = space.rank();
  if (w.size() != n)
    throw validation_error("weight vector has length " + std::to_string(w.size()) +
                           ", expected " + std::to_string(n));
  EpsilonWeight out(n);
  switch (space.type()) {
    case LieType::B:
    case LieType::C: {
      // coordinate m: a_m + ... + a_{n-1} + e * a_n
      Int tail2 = detail::checked_mul(space.two_e(), w[n - 1]);  // doubled e*a_n
      out[n - 1] = HalfInt::from_doubled(tail2);
      for (int m = n - 1; m >= 1; --m) {
        tail2 = detail::checked_add(tail2, detail::checked_mul(2, w[m - 1]));
        out[m - 1] = HalfInt::from_doubled(tail2);
      }
      return out;
    }
    case LieType::D: {
      // coordinate m <= n-2: a_m + ... + a_{n-2} + (a_{n-1}+a_n)/2;
      // coordinate n-1: (a_{n-1}+a_n)/2; coordinate n: (a_n-a_{n-1})/2.
      out[n - 1] = HalfInt::from_doubled(detail::checked_sub(w[n - 1], w[n - 2]));
      Int tail2 = detail::checked_add(w[n - 2], w[n - 1]);
      out[n - 2] = HalfInt::from_doubled(tail2);
      for (int m = n - 2; m >= 1; --m) {
        tail2 = detail::checked_add(tail2, detail::checked_mul(2, w[m - 1]));
        out[m - 1] = HalfInt::from_doubled(tail2);
      }
      return out;
    }
  }
  throw invariant_error("invalid Lie type");
}

namespace {

Int require_integral(const HalfInt& h) {
  if (!h.is_integer())
    throw validation_error("not a weight-lattice point: coefficient " + h.str() +
                           " is not integral");
  return h.integer_value();
}

}  // namespace

WeightFW from_epsilon(const FlagSpace& space, const EpsilonWeight& mu) {
  const int n = space.rank();
  if (mu.size() != n)
    throw validation_error("epsilon vector has length " + std::to_string(mu.size()) +
                           ", expected " + std::to_string(n));
  WeightFW a(n);
  switch (space.type()) {
    case LieType::B:
      for (int i = 1; i <= n - 1; ++i) a[i - 1] = require_integral(mu[i - 1] - mu[i]);
      a[n - 1] = require_integral(mu[n - 1] + mu[n - 1]);
      return a;
    case LieType::C:
      for (int i = 1; i <= n - 1; ++i) a[i - 1] = require_integral(mu[i - 1] - mu[i]);
      a[n - 1] = require_integral(mu[n - 1]);
      return a;
    case LieType::D:
      for (int i = 1; i <= n - 2; ++i) a[i - 1] = require_integral(mu[i - 1] - mu[i]);
      a[n - 2] = require_integral(mu[n - 2] - mu[n - 1]);
      a[n - 1] = require_integral(mu[n - 2] + mu[n - 1]);
      return a;
  }
  throw invariant_error("invalid Lie type");
}

Int dim_flag(const FlagSpace& space) {
  const Int n = space.rank();
  const Int k = space.k();
  switch (space.type()) {
    case LieType::B:
    case LieType::C: return k * (4 * n + 1 - 3 * k) / 2;
    case LieType::D: return k * (4 * n - 1 - 3 * k) / 2;
  }
  throw invariant_error("invalid Lie type");
}

bool dominant_off_marked(const FlagSpace& space, const WeightFW& w) {
  if (w.size() != space.rank()) return false;
  for (int u = 1; u <= space.rank(); ++u) {
    if (u == space.k()) continue;
    if (w[u - 1] < 0) return false;
  }
  return true;
}

void require_dominant_off_marked(const FlagSpace& space, const WeightFW& w) {
  if (w.size() != space.rank())
    throw validation_error("weight vector has length " + std::to_string(w.size()) +
                           ", expected " + std::to_string(space.rank()));
  if (!dominant_off_marked(space, w))
    throw validation_error("weight " + to_string(w) + " is not dominant off node " +
                           std::to_string(space.k()));
}

}  // namespace isoacm
