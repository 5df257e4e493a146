#pragma once

#include "riderlab/geometry.hpp"
#include "riderlab/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace riderlab {

/** One linear constraint on a configuration (x_1, y_1, ..., x_q, y_q):
 *  either an attack hyperplane "pieces i and j lie on a common m-line"
 *  ((z_j - z_i) . (d, -c) = 0) or a facet fixation (x_i or y_i pinned to a
 *  cube face). */
struct Constraint {
    enum class Kind { Hyperplane, Fixation };
    Kind kind = Kind::Fixation;
    // Hyperplane: pieces i < j (0-based) on a common line along move m.
    int i = 0;
    int j = 0;
    Move m;
    // Fixation: coordinate index (2*i for x_i, 2*i+1 for y_i) pinned to value.
    int coord = 0;
    int value = 0; // 0 or 1

    std::string label() const;
};

/** All constraints for (piece, q) on the unit square: every attack hyperplane
 *  per move and piece pair, then every cube-face fixation; fixed deterministic
 *  order. */
std::vector<Constraint> build_constraints(const Piece& p, int q);

/** Fills one constraint row (2q coefficients + rhs). */
void constraint_row(const Constraint& c, int q, std::vector<Rat>& row, Rat& rhs);

/** A vertex of the inside-out polytope: a point of [0,1]^{2q} determined by
 *  2q linearly independent active constraints. */
struct Vertex {
    Config config;                    // q points, coordinates in [0, 1]
    Int delta;                        // point denominator (lcd of coordinates)
    std::vector<Constraint> basis;    // a certifying independent active set
};

struct EnumerationOptions {
    std::uint64_t budget = 100000000; // max solved full-rank systems
    bool parallel = true;
    int q_guard = 4; // feasibility guard: refuse q above this unless raised
};

/** Enumerates all vertices for (piece, q) on the unit square: depth-first
 *  search over constraint subsets with incremental fraction-free elimination
 *  and rank pruning, exact solve at rank 2q, dedup by exact coordinates.
 *  Deterministic output (sorted by coordinate vector) regardless of thread
 *  count.  Throws BudgetExceededError past options.budget solved systems. */
std::vector<Vertex> enumerate_vertices(const Piece& p, int q,
                                       const EnumerationOptions& options = {});

/** Serial reference implementation (identical output). */
std::vector<Vertex> enumerate_vertices_serial(const Piece& p, int q,
                                              const EnumerationOptions& options = {});

struct DenominatorSpectrum {
    Int D;                  // lcm of all vertex denominators
    std::vector<Int> spectrum; // distinct vertex denominators, ascending
};

/** Polytope denominator and the set of vertex denominators. */
DenominatorSpectrum polytope_denominator(const Piece& p, int q,
                                         const EnumerationOptions& options = {});

/** True iff the configuration is a vertex: the active constraints at cfg span
 *  rank 2q.  On success *basis (if given) receives a certifying independent
 *  subset of 2q active constraints. */
bool is_vertex(const Piece& p, int q, const Config& cfg,
               std::vector<Constraint>* basis = nullptr);

struct MonotonicityReport {
    Int D_small_q;     // D(piece, q)
    Int D_big_q;       // D(piece, q2)
    Int D_superpiece;  // D(piece2, q)
    bool q_divides = false;     // D(piece, q) | D(piece, q2)
    bool piece_divides = false; // D(piece, q) | D(piece2, q)
};

/** Divisibility monotonicity probe: piece2's move set must contain piece's,
 *  and q2 >= q.  Checks D(piece, q) | D(piece, q2) and D(piece, q) | D(piece2, q). */
MonotonicityReport monotonicity_check(const Piece& piece, const Piece& piece2,
                                      int q, int q2,
                                      const EnumerationOptions& options = {});

} // namespace riderlab
