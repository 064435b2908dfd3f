#include "isoacm/step_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "isoacm/errors.hpp"

namespace isoacm {

std::string render_json(const StepMatrix& sm);  // defined with the wire formats

namespace {

// sum of a_u for u in [lo, hi], 1-based inclusive; empty when lo > hi
Int seg(const WeightFW& a, int lo, int hi) {
  Int s = 0;
  for (int u = std::max(lo, 1); u <= hi; ++u) s = detail::checked_add(s, a[u - 1]);
  return s;
}

void require_initialized(const FlagSpace& space, const WeightFW& lambda) {
  require_dominant_off_marked(space, lambda);
  if (lambda[space.k() - 1] != 0)
    throw validation_error("weight " + to_string(lambda) + " is not initialized (a_" +
                           std::to_string(space.k()) + " != 0)");
}

}  // namespace

bool StepMatrix::defined(Block b, int i, int j) const {
  const int n = space.rank();
  const int k = space.k();
  const bool strict = space.type() == LieType::D;
  switch (b) {
    case Block::P:
    case Block::Q:
      return k < n && i >= 1 && i <= k && j >= 1 && j <= n - k;
    case Block::R:
      return k < n && i >= 1 && j <= k && (strict ? i < j : i <= j);
    case Block::T:
      return k == n && i >= 1 && j <= n && (strict ? i < j : i <= j);
  }
  return false;
}

HalfInt StepMatrix::entry(const EntryRef& ref) const {
  if (!defined(ref.block, ref.i, ref.j))
    throw validation_error("no entry at " + std::string(1, static_cast<char>(ref.block)) + "[" +
                           std::to_string(ref.i) + "," + std::to_string(ref.j) + "]");
  switch (ref.block) {
    case Block::P: return P(ref.i - 1, ref.j - 1);
    case Block::Q: return Q(ref.i - 1, ref.j - 1);
    case Block::R: return R(ref.i - 1, ref.j - 1);
    case Block::T: return T(ref.i - 1, ref.j - 1);
  }
  throw invariant_error("invalid block");
}

HalfInt StepMatrix::max_entry() const {
  bool first = true;
  HalfInt best;
  auto consider = [&](Block b, const HalfIntMatrix& m) {
    for (int i = 1; i <= m.rows(); ++i)
      for (int j = 1; j <= m.cols(); ++j) {
        if (!defined(b, i, j)) continue;
        const HalfInt v = m(i - 1, j - 1);
        if (first || best < v) best = v;
        first = false;
      }
  };
  if (triangular()) {
    consider(Block::T, T);
  } else {
    consider(Block::P, P);
    consider(Block::Q, Q);
    consider(Block::R, R);
  }
  if (first) throw invariant_error("step matrix has no entries");
  return best;
}

StepMatrix build_step_matrix(const FlagSpace& space, const WeightFW& lambda) {
  require_initialized(space, lambda);
  const int n = space.rank();
  const int k = space.k();
  const Int two_e = space.two_e();
  const WeightFW& a = lambda;
  const Int e_an = (space.type() == LieType::D) ? 0 : detail::checked_mul(two_e, a[n - 1]);

  StepMatrix sm{space, lambda, {}, {}, {}, {}, HalfInt(0)};

  if (k < n) {
    sm.P = HalfIntMatrix::Constant(k, n - k, HalfInt(0));
    sm.Q = HalfIntMatrix::Constant(k, n - k, HalfInt(0));
    sm.R = HalfIntMatrix::Constant(k, k, HalfInt(0));
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= n - k; ++j)
        sm.P(i - 1, j - 1) = HalfInt(seg(a, 1 + k - i, k + j - 1) + j + i - 1);
    switch (space.type()) {
      case LieType::B:
      case LieType::C:
        for (int i = 1; i <= k; ++i)
          for (int j = 1; j <= n - k; ++j)
            sm.Q(i - 1, j - 1) = HalfInt(seg(a, k + 1 - i, n - 1) + seg(a, n + 1 - j, n - 1) +
                                         e_an + n - k + j + i - 2 + two_e);
        for (int i = 1; i <= k; ++i)
          for (int j = i; j <= k; ++j)
            sm.R(i - 1, j - 1) = HalfInt::from_doubled(
                2 * (n - k - 1) + two_e + seg(a, 1 + k - i, n - 1) + seg(a, 1 + k - j, n - 1) +
                e_an + j + i);
        break;
      case LieType::D:
        for (int i = 1; i <= k; ++i)
          for (int j = 1; j <= n - k; ++j)
            sm.Q(i - 1, j - 1) =
                HalfInt(seg(a, k + 1 - i, n - 2) + seg(a, n + 1 - j, n) + n - k + j + i - 2);
        for (int i = 1; i <= k; ++i)
          for (int j = i + 1; j <= k; ++j)
            sm.R(i - 1, j - 1) = HalfInt::from_doubled(
                2 * (n - k - 1) + seg(a, 1 + k - i, n - 2) + seg(a, 1 + k - j, n) + j + i);
        break;
    }
  } else {
    sm.T = HalfIntMatrix::Constant(n, n, HalfInt(0));
    switch (space.type()) {
      case LieType::B:
      case LieType::C:
        for (int i = 1; i <= n; ++i)
          for (int j = i; j <= n; ++j) {
            // prefactor 1/(2e): identity for B, halving for C
            const Int s = seg(a, n + 1 - i, n - 1) + seg(a, n + 1 - j, n - 1) + e_an + j + i -
                          2 + two_e;
            sm.T(i - 1, j - 1) =
                (two_e == 1) ? HalfInt(s) : HalfInt::from_doubled(s);
          }
        break;
      case LieType::D:
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            sm.T(i - 1, j - 1) =
                HalfInt(seg(a, n - i + 1, n) + seg(a, n - j + 1, n - 2) + j + i - 2);
        break;
    }
  }

  sm.M = max_entry_closed_form(space, lambda);
  return sm;
}

HalfInt max_entry_closed_form(const FlagSpace& space, const WeightFW& lambda) {
  require_initialized(space, lambda);
  const int n = space.rank();
  const int k = space.k();
  const Int two_e = space.two_e();
  const WeightFW& a = lambda;

  if (k < n) {
    switch (space.type()) {
      case LieType::B:
      case LieType::C:
        return HalfInt(seg(a, 1, n - 1) + seg(a, k + 1, n - 1) +
                       detail::checked_mul(two_e, a[n - 1]) + 2 * n - k - 2 + two_e);
      case LieType::D:
        return HalfInt(seg(a, 1, n) + seg(a, k + 1, n - 2) + 2 * n - k - 2);
    }
  } else {
    switch (space.type()) {
      case LieType::B:
      case LieType::C: {
        const Int s = 2 * seg(a, 1, n - 1) + detail::checked_mul(two_e, a[n - 1]) + 2 * n - 2 +
                      two_e;
        return (two_e == 1) ? HalfInt(s) : HalfInt::from_doubled(s);
      }
      case LieType::D:
        return HalfInt(seg(a, 1, n) + seg(a, 2, n - 2) + 2 * n - 3);
    }
  }
  throw invariant_error("invalid Lie type");
}

namespace {

template <typename Fn>
void for_each_entry(const StepMatrix& sm, Fn&& fn) {
  auto walk = [&](Block b, const HalfIntMatrix& m) {
    for (int i = 1; i <= m.rows(); ++i)
      for (int j = 1; j <= m.cols(); ++j)
        if (sm.defined(b, i, j)) fn(EntryRef{b, i, j}, m(i - 1, j - 1));
  };
  if (sm.triangular()) {
    walk(Block::T, sm.T);
  } else {
    walk(Block::P, sm.P);
    walk(Block::Q, sm.Q);
    walk(Block::R, sm.R);
  }
}

}  // namespace

std::vector<Int> integer_entries(const StepMatrix& sm) {
  std::vector<Int> vals;
  for_each_entry(sm, [&](const EntryRef&, const HalfInt& v) {
    if (v.is_integer()) vals.push_back(v.integer_value());
  });
  std::sort(vals.begin(), vals.end());
  return vals;
}

std::map<Int, std::vector<EntryRef>> integer_entry_positions(const StepMatrix& sm) {
  std::map<Int, std::vector<EntryRef>> out;
  for_each_entry(sm, [&](const EntryRef& ref, const HalfInt& v) {
    if (v.is_integer()) out[v.integer_value()].push_back(ref);
  });
  return out;
}

RenderFormat parse_render_format(std::string_view s) {
  if (s == "plain") return RenderFormat::Plain;
  if (s == "json") return RenderFormat::Json;
  if (s == "latex") return RenderFormat::Latex;
  throw validation_error("unknown format '" + std::string(s) + "'; expected plain, json or latex");
}

namespace {

const HalfIntMatrix& block_of(const StepMatrix& sm, Block b) {
  switch (b) {
    case Block::P: return sm.P;
    case Block::Q: return sm.Q;
    case Block::R: return sm.R;
    case Block::T: return sm.T;
  }
  throw invariant_error("invalid block");
}

std::string cell_latex(const HalfInt& v) {
  if (v.is_integer()) return std::to_string(v.integer_value());
  return "\\frac{" + std::to_string(v.doubled()) + "}{2}";
}

}  // namespace

std::string render_block_plain(const StepMatrix& sm, Block b) {
  const HalfIntMatrix& m = block_of(sm, b);
  // column-aligned; padding cells print as 0 like the triangular layout
  std::vector<std::size_t> width(m.cols(), 0);
  std::vector<std::vector<std::string>> cells(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    cells[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      cells[i][j] = m(i, j).str();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  }
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "\n";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
    }
  }
  return os.str();
}

std::string render_block_latex(const StepMatrix& sm, Block b) {
  const HalfIntMatrix& m = block_of(sm, b);
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "\\\\";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << "&";
      os << cell_latex(m(i, j));
    }
  }
  return os.str();
}

std::string render(const StepMatrix& sm, RenderFormat format) {
  std::ostringstream os;
  switch (format) {
    case RenderFormat::Plain: {
      auto block = [&](const char* label, Block b) {
        os << label << " =\n" << render_block_plain(sm, b) << "\n";
      };
      if (sm.triangular()) {
        block("T", Block::T);
      } else {
        block("P", Block::P);
        block("Q", Block::Q);
        block("R", Block::R);
      }
      os << "M = " << sm.M.str() << "\n";
      return os.str();
    }
    case RenderFormat::Latex: {
      auto block = [&](const char* label, Block b) {
        os << label << " = \\begin{pmatrix}" << render_block_latex(sm, b) << "\\end{pmatrix}\n";
      };
      if (sm.triangular()) {
        block("T", Block::T);
      } else {
        block("P", Block::P);
        block("Q", Block::Q);
        block("R", Block::R);
      }
      os << "M = " << cell_latex(sm.M) << "\n";
      return os.str();
    }
    case RenderFormat::Json:
      break;
  }
  return render_json(sm);
}

}  // namespace isoacm
