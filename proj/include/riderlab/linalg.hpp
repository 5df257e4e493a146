#pragma once

#include "riderlab/rational.hpp"

#include <variant>
#include <vector>

namespace riderlab {

using RatVector = std::vector<Rat>;

/** Dense row-major exact matrix. */
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a; // rows * cols entries

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

struct SolveUnique { RatVector x; };
struct SolveRankDeficient { std::size_t rank; };
struct SolveInconsistent {};

using SolveResult = std::variant<SolveUnique, SolveRankDeficient, SolveInconsistent>;

/** Solves A x = b exactly by fraction-free (Bareiss) elimination with row
 *  pivoting.  Returns the unique solution, the rank when the consistent system
 *  is underdetermined, or inconsistency. */
SolveResult solve_exact(const RatMatrix& A, const RatVector& b);

/** Rank of A over the rationals. */
std::size_t rank(const RatMatrix& A);

/** Basis of the nullspace {x : A x = 0}, one vector per free column, in free
 *  column order (deterministic). */
std::vector<RatVector> nullspace(const RatMatrix& A);

} // namespace riderlab
