#pragma once

#include "riderlab/geometry.hpp"

#include <array>
#include <vector>

namespace riderlab {

/** Fibonacci numbers with F_0 = F_1 = 1. */
Int fib(int i);

/** A constructed configuration: integer-coordinate points plus the side of
 *  the smallest axis-aligned bounding square.  Dividing by `delta` puts the
 *  configuration in the unit square with min coordinates 0, where `delta` is
 *  its point denominator. */
struct ScaledConfig {
    Config integral;   // integer coordinates, min x = min y = 0
    Int delta;         // bounding-square side == denominator of integral/delta
    Config unit() const; // integral / delta
};

/** Position of piece i (1-based) in the golden-rectangle configuration. */
Point golden_rectangle_position(int i);

/** The golden-rectangle configuration of q >= 3 pieces (a semiqueen vertex
 *  after scaling): consecutive Fibonacci rectangles with denominator
 *  F_{floor(q/2)}. */
ScaledConfig golden_rectangle(int q);

/** An integer linear map z -> (a*z.x + b*z.y, c*z.x + d*z.y) given column
 *  images: columns[0] = L(1,0), columns[1] = L(0,1). */
struct LinearMap {
    std::array<long long, 2> col_x; // L(1,0)
    std::array<long long, 2> col_y; // L(0,1)
};

/** The admissible parallelogram maps for a 3-move subset (a, b, c) of a
 *  piece: ordered pairs of distinct triangle directions, map columns
 *  (-w_i m_i, +w_j m_j).  Six maps per 3-subset. */
std::vector<LinearMap> parallelogram_maps(const Move& a, const Move& b, const Move& c);

/** Image of the golden rectangle under the map: a vertex configuration for
 *  any piece whose moves include the triangle directions.  The map must be
 *  one of parallelogram_maps for a 3-subset of the piece's moves.  Returns
 *  integer coordinates translated to the first quadrant and the bounding
 *  square side (= the denominator). */
ScaledConfig golden_parallelogram(const Piece& p, const LinearMap& map, int q);

/** The discrete spiral vertex of q >= 4 queens, solved exactly from its
 *  hyperplane + fixation system, normalized to the unit square.  The
 *  denominator is F_{q-1}. */
ScaledConfig fibonacci_spiral_queens(int q);

/** The twisted spiral for a 4-move piece: the spiral's hyperplane pattern with
 *  the move roles given by `assignment` (a permutation of the piece's moves).
 *  The solution space must be exactly translations + one shape direction
 *  (rank 2q - 3); the shape is normalized to the unit square.  Throws
 *  ConstructionFailureError otherwise.  q >= 5. */
ScaledConfig twisted_spiral(const Piece& p, const std::array<Move, 4>& assignment, int q);

struct LowerBoundCheck {
    Int construction_delta; // best denominator among the constructions
    Int bound;              // F_{floor(q/2)} - 1
    bool holds = false;     // construction_delta >= bound
};

/** Exponential lower-bound probe for a piece with >= 3 moves: the best
 *  denominator over all golden parallelograms (every 3-subset, all six maps)
 *  and, for 4-move pieces, all twisted-spiral assignments, against the bound
 *  F_{floor(q/2)} - 1.  Constructions only; no vertex enumeration. */
LowerBoundCheck exp_lower_bound_check(const Piece& p, int q);

} // namespace riderlab
