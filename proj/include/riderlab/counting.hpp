#pragma once

#include "riderlab/geometry.hpp"

#include <cstdint>
#include <vector>

namespace riderlab {

/** Integer cell on the n x n board: 0 <= x, y < n. */
struct Cell {
    int x = 0;
    int y = 0;
};

/** True iff pieces at z1 and z2 attack each other: z1 == z2 (a piece attacks
 *  its own square) or z2 - z1 is parallel to one of the piece's moves. */
bool attacks(const Piece& p, const Cell& z1, const Cell& z2);

/** Count of unlabeled nonattacking configurations of q pieces on the n x n
 *  board.  Canonical-order backtracking over cells in row-major order; each
 *  candidate is rejected in O(|moves|) via per-move occupied-line sets.
 *  OpenMP-parallel over the first placed cell; results are identical to
 *  count_unlabeled_serial bit for bit. */
Int count_unlabeled(const Piece& p, int q, int n);

/** Serial reference implementation of the same backtracker. */
Int count_unlabeled_serial(const Piece& p, int q, int n);

/** Fast path for one-move riders: the board splits into disjoint attack
 *  lines, so the count is the elementary symmetric polynomial e_q of the
 *  line sizes.  Exact DP; validated against the backtracker in tests. */
Int count_one_move(const Move& m, int q, int n);

/** Table of u(q; n) for n = 1..n_max at fixed q. */
struct CountTable {
    Piece piece;
    int q = 0;
    std::vector<Int> values; // values[i] = u(q; i+1)

    const Int& at(int n) const { return values.at(static_cast<std::size_t>(n) - 1); }
    int n_max() const { return static_cast<int>(values.size()); }
};

/** Builds the count table, routing one-move pieces through count_one_move and
 *  everything else through the parallel backtracker. */
CountTable count_table(const Piece& p, int q, int n_max);

} // namespace riderlab
