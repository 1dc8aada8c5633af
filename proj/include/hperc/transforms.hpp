#pragma once

// Set surgeries on hyperrectangle vertex sets: merging and deleting slices,
// the first-column repacking used for one-phase sets, shift operations and
// their normal form, and the block structure of closed planar sets.

#include <cstdint>
#include <optional>
#include <vector>

#include "hperc/engine.hpp"
#include "hperc/lattice.hpp"

namespace hperc {

// Replaces slices m1 and m2 along `axis` by one slice whose projection is the
// union of theirs. The merged slice takes index min(m1, m2); slices after
// max(m1, m2) move down by one.
CellSet union_slices(const CellSet& a, int axis, int m1, int m2);

// Deletes slice m along `axis`; later slices move down by one.
CellSet remove_slice(const CellSet& a, int axis, int m);

// Planar sets only (axis 0 = rows, axis 1 = columns). Every row whose P-row
// contains 1 but not all of [t] has its column-1 cell moved to the leftmost
// empty column in [t].
CellSet repack_first_column(const CellSet& a, const Params& params);

struct CornerPlacement {
  CellSet relabeled;
  // Uninfected vertex of `relabeled` that has an infecting edge only
  // through column 1; always (t, t).
  Vertex blocked;
  // Its infecting edge, always [t] x [t].
  Edge edge;
  // Old coordinate -> new coordinate, per axis, 1-based.
  std::vector<int> row_map;
  std::vector<int> col_map;
};

// For a planar one-phase set whose first-column removal is not one-phase,
// finds the least blocked vertex and its least infecting edge, then permutes
// rows and columns (column 1 fixed) so they become (t, t) and [t] x [t].
// Returns nullopt when removing the first column leaves a one-phase set.
std::optional<CornerPlacement> place_blocked_edge_in_corner(const CellSet& a, const Params& params);

struct ShiftRecord {
  Edge edge;
  Vertex infected;
  Vertex removed;
  bool maximal = false;
};

struct ShiftResult {
  CellSet set;
  ShiftRecord record;
};

// a ∪ {v} \ {w} where e \ a = {v}. Throws PreconditionViolation otherwise.
ShiftResult shift(const CellSet& a, const Edge& e, const Vertex& w);

// Edge vertex of maximal coordinate sum (lexicographically greatest among
// ties, although product edges have a unique maximiser).
Vertex maximal_shift_target(const Edge& e);

// Throws PreconditionViolation unless e \ a is a single vertex.
bool is_standard_position(const Edge& e, const CellSet& a);

bool has_maximal_shift(const CellSet& a, const Params& params);

struct NormalForm {
  CellSet set;
  std::vector<ShiftRecord> shifts;
};

// Applies maximal shifts until every infecting edge is in standard
// position. Without a seed the least infectable vertex and its least
// non-standard edge are shifted each round; with a seed the pair is drawn
// uniformly from all candidates.
NormalForm normalize_max_shifts(const CellSet& a, const Params& params,
                                std::optional<std::uint64_t> seed = std::nullopt);

struct PRowDecomposition {
  // Row indices (1-based) of each class, classes ordered by their least row.
  std::vector<std::vector<int>> classes;
  // P-row of the least row of each class.
  std::vector<std::vector<int>> representatives;
};

class RowPairViolation : public PreconditionViolation {
 public:
  RowPairViolation(int first, int second, const std::string& what)
      : PreconditionViolation(what), first_row(first), second_row(second) {}
  int first_row;
  int second_row;
};

// Classes of nonempty P-rows under "non-disjoint" for a planar set that is
// stable under maximal shifts with t = r = 2. Empty rows belong to no class.
// Throws RowPairViolation when the relation is not transitive or a class
// representative does not contain another member.
PRowDecomposition p_row_decomposition(const CellSet& a);

// Union over classes of (class rows) x (representative).
CellSet stable_full_form(const CellSet& a);

struct ProductBlock {
  std::vector<int> rows;
  std::vector<int> cols;
};

// Planar sets: the blocks I_i x J_i when `a` is a union of products with
// pairwise disjoint row sets and pairwise disjoint column sets.
std::optional<std::vector<ProductBlock>> product_blocks(const CellSet& a);

}  // namespace hperc
