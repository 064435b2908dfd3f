#pragma once

#include <map>
#include <string>
#include <vector>

#include "isoacm/lie_core.hpp"
#include "isoacm/types.hpp"

namespace isoacm {

enum class Block : char { P = 'P', Q = 'Q', R = 'R', T = 'T' };

/// Position of one entry inside a step matrix (1-based row/column).
struct EntryRef {
  Block block = Block::P;
  int i = 0;
  int j = 0;

  friend bool operator==(const EntryRef&, const EntryRef&) = default;
};

/// The step matrix of an initialized weight on G/P(alpha_k).
///
/// For k < n it is the block triple (P, Q, R): P and Q are k x (n-k) and
/// always integral, R is k x k and kept above the diagonal (strictly above
/// for D). For k = n it is a single upper-triangular n x n matrix T
/// (strictly upper for D). Cells outside the stored triangle are structural
/// padding, not entries: defined() is false there and they never enter
/// integer_entries() or the maximum.
struct StepMatrix {
  FlagSpace space;
  WeightFW lambda;
  HalfIntMatrix P, Q, R;  // k < n
  HalfIntMatrix T;        // k == n
  HalfInt M;              // closed-form maximum over entries

  bool triangular() const { return space.k() == space.rank(); }
  bool defined(Block b, int i, int j) const;
  HalfInt entry(const EntryRef& ref) const;
  HalfInt max_entry() const;  // scan over defined entries; equals M
};

/// Fills every entry from its closed formula. Requires lambda dominant off
/// the marked node and initialized (a_k = 0).
StepMatrix build_step_matrix(const FlagSpace& space, const WeightFW& lambda);

/// The maximum entry, evaluated without materializing the matrix.
HalfInt max_entry_closed_form(const FlagSpace& space, const WeightFW& lambda);

/// Sorted multiset of the integral entry values.
std::vector<Int> integer_entries(const StepMatrix& sm);

/// Integral entry values with all their positions, in deterministic
/// (P, Q, R | T, row-major) order.
std::map<Int, std::vector<EntryRef>> integer_entry_positions(const StepMatrix& sm);

enum class RenderFormat { Plain, Json, Latex };

RenderFormat parse_render_format(std::string_view s);

std::string render(const StepMatrix& sm, RenderFormat format);

/// Body of one block: plain "1 2\n6 7", latex "1&2\\6&7".
std::string render_block_plain(const StepMatrix& sm, Block b);
std::string render_block_latex(const StepMatrix& sm, Block b);

}  // namespace isoacm
