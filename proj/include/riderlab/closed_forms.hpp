#pragma once

#include "riderlab/geometry.hpp"

#include <array>

namespace riderlab {

/** Denominator of a one-move rider on any convex board: lcd of the corners
 *  for q = 1; from q >= 2 on, also the corners' boundary-exit antipodes along
 *  the move. */
Int one_move_denominator(const Board& b, const Move& m, int q);

/** Denominator of the two-move rider {(1,0), (c,d)} on the square, gcd(c,d)=1,
 *  c,d >= 1:
 *    1                      if q = 1
 *    d                      if d >= c and q > 1
 *    c                      if d < c and 1 < q <= 2*floor(c/d) + 1
 *    c*d                    if d < c and q >= 2*floor(c/d) + 2
 */
Int two_move_horizontal_denominator(long long c, long long d, int q);

/** Integer weights (w1, w2, w3), unique up to the fixed normalization
 *  (gcd 1, w1 > 0), with w1*m1 + w2*m2 + w3*m3 = 0.  The moves must be
 *  pairwise non-parallel. */
std::array<Int, 3> triangle_weights(const Move& m1, const Move& m2, const Move& m3);

/** Denominator of the triangle configuration of the three moves:
 *  max_i max(|w_i c_i|, |w_i d_i|). */
Int triangle_denominator(const Move& m1, const Move& m2, const Move& m3);

/** True iff the piece is one of the denominator-1 pieces on the square —
 *  semirook, rook, semibishop, anassa — up to the square's dihedral symmetry
 *  acting on the move set. */
bool is_denominator_one_piece(const Piece& p);

} // namespace riderlab
