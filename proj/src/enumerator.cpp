#include "isoacm/enumerator.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "isoacm/bbw_oracle.hpp"
#include "isoacm/detail/parallel.hpp"
#include "isoacm/errors.hpp"

namespace isoacm {

namespace {

// M(lambda) is affine in the coefficients with positive weights; read the
// weights off by probing unit vectors.
struct MaxEntryAffine {
  Int constant = 0;
  std::vector<Int> coeff;  // per coordinate, 0 at the marked node

  explicit MaxEntryAffine(const FlagSpace& space) {
    const int n = space.rank();
    constant = max_entry_closed_form(space, zero_weight(n)).integer_value();
    coeff.assign(n, 0);
    for (int u = 1; u <= n; ++u) {
      if (u == space.k()) continue;
      coeff[u - 1] =
          max_entry_closed_form(space, unit_weight(n, u)).integer_value() - constant;
      if (coeff[u - 1] <= 0)
        throw invariant_error("max entry is not increasing in a_" + std::to_string(u));
    }
  }
};

}  // namespace

EnumerationResult enumerate_acm(const FlagSpace& space, int jobs) {
  const int n = space.rank();
  const Int dim = dim_flag(space);
  const MaxEntryAffine affine(space);
  const Int budget = dim - affine.constant;

  std::vector<WeightFW> candidates;
  WeightFW current = zero_weight(n);
  std::function<void(int, Int)> walk = [&](int u, Int left) {
    if (u > n) {
      candidates.push_back(current);
      return;
    }
    if (u == space.k()) {
      walk(u + 1, left);
      return;
    }
    const Int c = affine.coeff[u - 1];
    for (Int v = 0; v * c <= left; ++v) {
      current[u - 1] = v;
      walk(u + 1, left - v * c);
    }
    current[u - 1] = 0;
  };
  if (budget >= 0) walk(1, budget);

  const auto flags = detail::map_indexed<char>(candidates, jobs, [&](const WeightFW& w) {
    return static_cast<char>(is_acm(space, w).is_acm ? 1 : 0);
  });

  EnumerationResult result{space, {}, static_cast<Int>(candidates.size()), {}};
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (flags[i]) result.acm_weights.push_back(candidates[i]);

  std::ostringstream bound;
  bound << "M(lambda) <= dim " << space.name() << " = " << dim << " (M = " << affine.constant;
  for (int u = 1; u <= n; ++u)
    if (affine.coeff[u - 1] != 0) bound << " + " << affine.coeff[u - 1] << "*a" << u;
  bound << ")";
  result.bound_used = bound.str();
  return result;
}

namespace {

using BoxPredicate = std::function<bool(const WeightFW&)>;

struct CorollaryFamily {
  std::string name;
  bool iff = false;
  std::vector<int> coords;  // varying coordinates, 1-based
  std::vector<Int> sweep_hi;
  BoxPredicate in_box;  // the coefficient-range condition
};

void for_each_point(const CorollaryFamily& f, int n, const std::function<void(const WeightFW&)>& fn) {
  WeightFW w = zero_weight(n);
  std::function<void(std::size_t)> walk = [&](std::size_t idx) {
    if (idx == f.coords.size()) {
      fn(w);
      return;
    }
    for (Int v = 0; v <= f.sweep_hi[idx]; ++v) {
      w[f.coords[idx] - 1] = v;
      walk(idx + 1);
    }
    w[f.coords[idx] - 1] = 0;
  };
  walk(0);
}

std::vector<CorollaryFamily> families_for(const FlagSpace& space, Int margin) {
  const int n = space.rank();
  const int k = space.k();
  std::vector<CorollaryFamily> out;

  auto range_coords = [](int lo, int hi) {
    std::vector<int> cs;
    for (int u = lo; u <= hi; ++u) cs.push_back(u);
    return cs;
  };
  auto box_all_below = [](std::vector<int> coords, Int hi) {
    return [coords = std::move(coords), hi](const WeightFW& w) {
      for (int u : coords)
        if (w[u - 1] > hi) return false;
      return true;
    };
  };

  switch (space.type()) {
    case LieType::B:
      if (1 < k && k < n) {
        const Int lo_hi = 2 * (n - k);
        out.push_back({"B lower range (a_1..a_{k-1} <= 2n-2k)", false, range_coords(1, k - 1),
                       std::vector<Int>(k - 1, lo_hi), box_all_below(range_coords(1, k - 1), lo_hi)});
      }
      if (k < n) {
        auto coords = range_coords(k + 1, n);
        std::vector<Int> hi;
        for (int u = k + 1; u <= n; ++u) hi.push_back((u < n ? k - 1 : 2 * k - 1) + margin);
        BoxPredicate cond = [n, k](const WeightFW& w) {
          for (int u = k + 1; u < n; ++u)
            if (w[u - 1] > k - 1) return false;
          return w[n - 1] <= 2 * k - 1;
        };
        out.push_back({"B upper range (a_i <= k-1, a_n <= 2k-1) iff", true, std::move(coords),
                       std::move(hi), std::move(cond)});
      } else {
        auto coords = range_coords(2, n - 2);
        out.push_back({"B spin-node range (a_2..a_{n-2} <= 1)", false, coords,
                       std::vector<Int>(coords.size(), 1), box_all_below(coords, 1)});
      }
      break;

    case LieType::C:
      if (1 < k) {
        const Int lo_hi = 2 * (n - k) + 1;
        out.push_back({"C lower range (a_1..a_{k-1} <= 2n-2k+1)", false, range_coords(1, k - 1),
                       std::vector<Int>(k - 1, lo_hi), box_all_below(range_coords(1, k - 1), lo_hi)});
      }
      if (k < n) {
        auto coords = range_coords(k + 1, n);
        out.push_back({"C upper range (a_i <= k-1) iff", true, coords,
                       std::vector<Int>(coords.size(), k - 1 + margin),
                       box_all_below(coords, k - 1)});
      }
      break;

    case LieType::D:
      if (k < n) {  // effective k <= n-2
        if (1 < k) {
          const Int lo_hi = 2 * (n - k) - 1;
          out.push_back({"D lower range (a_1..a_{k-1} <= 2n-2k-1)", false, range_coords(1, k - 1),
                         std::vector<Int>(k - 1, lo_hi),
                         box_all_below(range_coords(1, k - 1), lo_hi)});
        }
        auto coords = range_coords(k + 1, n);
        std::vector<Int> hi;
        for (int u = k + 1; u <= n; ++u)
          hi.push_back((u <= n - 2 ? k - 1 : 3 * k - 2) + margin);
        BoxPredicate cond = [n, k](const WeightFW& w) {
          for (int u = k + 1; u <= n - 2; ++u)
            if (w[u - 1] > k - 1) return false;
          const Int am = w[n - 2], an = w[n - 1];
          const bool a = am <= k - 1 && an - am >= 0 && an - am <= 2 * k - 1;
          const bool b = an <= k - 1 && am - an >= 0 && am - an <= 2 * k - 1;
          return a || b;
        };
        out.push_back({"D upper range (a_i <= k-1 with spin conditions) iff", true,
                       std::move(coords), std::move(hi), std::move(cond)});
      } else {
        auto mid = range_coords(3, n - 3);
        out.push_back({"D middle range (a_3..a_{n-3} <= 1)", false, mid,
                       std::vector<Int>(mid.size(), 1), box_all_below(mid, 1)});
        std::vector<int> ends{1, n - 1};
        out.push_back({"D end range (a_1, a_{n-1} <= n-4)", false, ends,
                       std::vector<Int>(2, n - 4), box_all_below(ends, n - 4)});
      }
      break;
  }

  return out;
}

FamilyCheck quadric_family(const FlagSpace& space) {
  const int n = space.rank();
  std::vector<WeightFW> expected{zero_weight(n)};
  std::string name;
  switch (space.type()) {
    case LieType::B:
      expected.push_back(unit_weight(n, n));
      name = "quadric: line bundles and the spinor bundle";
      break;
    case LieType::D:
      expected.push_back(unit_weight(n, n - 1));
      expected.push_back(unit_weight(n, n));
      name = "quadric: line bundles and the two spinor bundles";
      break;
    case LieType::C:
      name = "projective space of the symplectic vector space: line bundles only";
      break;
  }
  std::sort(expected.begin(), expected.end(), lex_less);

  const EnumerationResult enumeration = enumerate_acm(space);
  FamilyCheck check{name, true, enumeration.candidates_scanned, {}};
  std::vector<WeightFW> difference;
  std::set_symmetric_difference(enumeration.acm_weights.begin(), enumeration.acm_weights.end(),
                                expected.begin(), expected.end(),
                                std::back_inserter(difference), lex_less);
  check.violations = std::move(difference);
  return check;
}

}  // namespace

CorollaryReport validate_corollaries(const FlagSpace& space, Int margin) {
  CorollaryReport report{space, {}};
  if (space.k() == 1) {
    report.families.push_back(quadric_family(space));
    return report;
  }
  for (const CorollaryFamily& f : families_for(space, margin)) {
    FamilyCheck check{f.name, f.iff, 0, {}};
    for_each_point(f, space.rank(), [&](const WeightFW& w) {
      ++check.cases;
      const bool acm = is_acm(space, w).is_acm;
      const bool expected = f.in_box(w);
      if (f.iff ? (acm != expected) : (expected && !acm)) check.violations.push_back(w);
    });
    report.families.push_back(std::move(check));
  }
  return report;
}

void emit_atlas(const std::vector<FlagSpace>& spaces, std::ostream& out, AtlasFormat format,
                int jobs) {
  if (format == AtlasFormat::Csv) out << "type,n,k,lambda,M_num,M_den,dim,acm\n";
  for (const FlagSpace& space : spaces) {
    const EnumerationResult result = enumerate_acm(space, jobs);
    const Int dim = dim_flag(space);
    for (const WeightFW& w : result.acm_weights) {
      const HalfInt m = max_entry_closed_form(space, w);
      const bool half = !m.is_integer();
      const Int m_num = half ? m.doubled() : m.integer_value();
      const Int m_den = half ? 2 : 1;
      if (format == AtlasFormat::Csv) {
        out << letter(space.type()) << "," << space.rank() << "," << space.k() << ",\"["
            << to_string(w) << "]\"," << m_num << "," << m_den << "," << dim << ",1\n";
      } else {
        out << "{\"type\":\"" << letter(space.type()) << "\",\"n\":" << space.rank()
            << ",\"k\":" << space.k() << ",\"lambda\":[" << to_string(w)
            << "],\"M_num\":" << m_num << ",\"M_den\":" << m_den << ",\"dim\":" << dim
            << ",\"acm\":true}\n";
      }
    }
    if (!out) throw error("atlas write failed");
  }
}

}  // namespace isoacm
