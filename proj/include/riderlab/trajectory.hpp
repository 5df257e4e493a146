#pragma once

#include "riderlab/geometry.hpp"
#include "riderlab/linalg.hpp"

#include <vector>

namespace riderlab {

/** A trajectory: boundary points z_1, ..., z_l with consecutive points on a
 *  common move line, alternating between the two moves.  A single point is the
 *  trivial trajectory of length 1.  `maximal` means the stopping rule fired:
 *  the walk hit an edge parallel to a move, returned to its first point, or
 *  reached a point whose exit line leaves the board immediately. */
struct Trajectory {
    std::vector<Point> points;
    Move m1, m2;     // the alternating move pair
    int start_move = 0; // 0: z_1 -> z_2 along m1; 1: along m2
    bool maximal = false;

    std::size_t length() const { return points.size(); }
    const Move& move_for_step(std::size_t step) const {
        return ((step % 2 == 0) == (start_move == 0)) ? m1 : m2;
    }
};

/** A rigid cycle: a corner-free closed trajectory (even count of distinct
 *  points, last step returns to points[0]) whose attack + edge-fixation
 *  system is linearly independent, i.e. pins the points uniquely. */
struct RigidCycle {
    std::vector<Point> points; // distinct points; closing step implied
    Move m1, m2;
};

/** Appends boundary_exit along the next alternating move and applies the
 *  stopping rule.  Returns the trajectory unchanged (already maximal) when the
 *  exit coincides with the last point. */
Trajectory extend_trajectory(const Board& b, const Trajectory& t);

/** All walks that start at a corner, for every corner and both move orders,
 *  each extended until the stopping rule fires or max_points is reached
 *  (walks truncated by the cap are not marked maximal; corner trajectories
 *  need not ever terminate). */
std::vector<Trajectory> maximal_corner_trajectories(const Board& b, const Move& m1,
                                                    const Move& m2,
                                                    std::size_t max_points = 64);

/** Finds all rigid cycles with at most max_len (distinct) points: enumerates
 *  which board edge each point lies on, solves the closed alternating system
 *  exactly, and keeps corner-free uniquely-determined solutions on the
 *  boundary.  Cycles are deduplicated by point set. */
std::vector<RigidCycle> find_rigid_cycles(const Board& b, const Move& m1,
                                          const Move& m2, std::size_t max_len);

/** A transversal intersection of two extended trajectory polylines strictly
 *  inside the board.  l1, l2 are the trajectory lengths needed to realize the
 *  crossing (the segment index: segment k joins points k and k+1, so the
 *  crossing exists once the polylines have k+... points). */
struct CrossingPoint {
    Point point;
    std::size_t l1 = 0;
    std::size_t l2 = 0;
};

/** All interior transversal crossings of the two polylines (pass the same
 *  trajectory twice for self-crossings; shared endpoints and collinear
 *  overlaps are not crossings). */
std::vector<CrossingPoint> crossing_points(const Board& b, const Trajectory& t1,
                                           const Trajectory& t2);

/** The two-move denominator: lcm of
 *   (1) denominators of boundary points on corner trajectories and rigid
 *       cycles of length <= q, and
 *   (2) denominators of crossing points within the length budget — realizing
 *       lengths summing to <= q-1 for distinct polylines, defining length
 *       <= q-1 for self-crossings. */
Int arvind_denominator(const Board& b, const Move& m1, const Move& m2, int q);

} // namespace riderlab
