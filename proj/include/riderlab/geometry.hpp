#pragma once

#include "riderlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace riderlab {

/** A move direction (c, d): the rider placed at z attacks every cell on the
 *  lines z + t*(c, d) for each of its moves.  Canonical form: gcd(|c|,|d|) = 1
 *  and either c > 0, or c = 0 and d = 1, so each line direction has exactly
 *  one representative. */
struct Move {
    long long c = 0;
    long long d = 0;

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

/** Reduces (c, d) to canonical form. Throws ValidationError on (0, 0). */
Move make_move(long long c, long long d);

/** Slope string for a canonical move: "d/c" (e.g. "1/2", "-2/1", "1/0"). */
std::string move_slope(const Move& m);

/** Parses "d/c" or "(c,d)" into a canonical move. */
Move parse_move(const std::string& s);

/** A rider piece: a nonempty set of pairwise non-parallel canonical moves,
 *  kept sorted for a canonical representation. */
struct Piece {
    std::vector<Move> moves;
    std::string name; // catalog name when recognized, otherwise empty

    friend bool operator==(const Piece& a, const Piece& b) { return a.moves == b.moves; }
};

/** Canonicalizes, sorts, and validates a move list (nonempty, no duplicate
 *  directions after canonicalization), and attaches the catalog name when the
 *  set matches a known piece. */
Piece make_piece(std::vector<Move> moves);

/** Looks up a piece by catalog name ("queen", "nightrider", "semiqueen",
 *  "partial-queen-21", ...). Throws ValidationError for unknown names. */
Piece piece_by_name(const std::string& name);

/** Names of all catalog pieces, in catalog order. */
std::vector<std::string> catalog_names();

/** Exact point in the plane. */
struct Point {
    Rat x;
    Rat y;

    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

/** Smallest positive integer N with N*p integral (the denominator of p). */
Int point_denominator(const Point& p);

/** A convex polygonal board, stored as strictly convex corners in
 *  counterclockwise order starting from the lexicographically least corner.
 *  make_board re-orders and validates arbitrary corner input. */
struct Board {
    std::vector<Point> corners;
};

Board make_board(std::vector<Point> corners);

/** The unit square [0,1]^2. */
Board unit_square();

/** True if p lies on the boundary of the board. */
bool on_boundary(const Board& b, const Point& p);

/** True if p lies in the board (boundary included). */
bool in_board(const Board& b, const Point& p);

/** Indices of board edges containing p (edge k runs corner k -> corner k+1).
 *  A corner lies on two edges, an edge-interior point on one. */
std::vector<std::size_t> edges_containing(const Board& b, const Point& p);

/** True if board edge k is parallel to move m. */
bool edge_parallel(const Board& b, std::size_t edge, const Move& m);

/** The other intersection of the line p + t*(c,d) with the board boundary:
 *  the far end of the chord through p.  Returns p itself when the line meets
 *  the board only at p.  When the line contains a whole edge, returns the
 *  endpoint on the +m side (the far endpoint for an edge-endpoint p).
 *  Precondition: p on the boundary. */
Point boundary_exit(const Board& b, const Point& p, const Move& m);

/** A configuration of q (labeled) pieces. */
using Config = std::vector<Point>;

/** Smallest positive integer N with N*z integral for every point z. */
Int denom(const Config& c);

} // namespace riderlab
