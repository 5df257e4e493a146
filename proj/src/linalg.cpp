#include "riderlab/linalg.hpp"
#include "riderlab/errors.hpp"

#include <algorithm>

namespace riderlab {

namespace {

/** Row-scales the augmented system [A | b] to integers. */
std::vector<std::vector<Int>> integer_rows(const RatMatrix& A, const RatVector* b) {
    std::vector<std::vector<Int>> rows(A.rows);
    const std::size_t width = A.cols + (b ? 1 : 0);
    for (std::size_t r = 0; r < A.rows; ++r) {
        Int scale = 1;
        for (std::size_t c = 0; c < A.cols; ++c) scale = lcm_int(scale, den(A.at(r, c)));
        if (b) scale = lcm_int(scale, den((*b)[r]));
        rows[r].resize(width);
        for (std::size_t c = 0; c < A.cols; ++c)
            rows[r][c] = num(A.at(r, c)) * (scale / den(A.at(r, c)));
        if (b) rows[r][A.cols] = num((*b)[r]) * (scale / den((*b)[r]));
    }
    return rows;
}

struct Echelon {
    std::vector<std::vector<Int>> rows; // fraction-free row echelon, pivot-first
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/** Fraction-free (Bareiss) elimination over the first `cols` columns; extra
 *  trailing columns (the rhs) ride along. */
Echelon eliminate(std::vector<std::vector<Int>> rows, std::size_t cols) {
    Echelon e;
    e.rows = std::move(rows);
    Int prev = 1;
    const std::size_t width = e.rows.empty() ? 0 : e.rows[0].size();
    for (std::size_t col = 0; col < cols && e.rank < e.rows.size(); ++col) {
        std::size_t piv = e.rank;
        while (piv < e.rows.size() && e.rows[piv][col] == 0) ++piv;
        if (piv == e.rows.size()) continue;
        std::swap(e.rows[e.rank], e.rows[piv]);
        const Int& p = e.rows[e.rank][col];
        for (std::size_t r = e.rank + 1; r < e.rows.size(); ++r) {
            if (e.rows[r][col] == 0) {
                // Still rescale to keep the fraction-free invariant exact.
                for (std::size_t c = col; c < width; ++c) {
                    Int v = e.rows[r][c] * p;
                    e.rows[r][c] = v / prev;
                }
                continue;
            }
            Int f = e.rows[r][col];
            for (std::size_t c = col; c < width; ++c) {
                Int v = e.rows[r][c] * p - e.rows[e.rank][c] * f;
                e.rows[r][c] = v / prev; // exact by the Bareiss identity
            }
        }
        prev = p;
        e.pivot_cols.push_back(col);
        ++e.rank;
    }
    return e;
}

} // namespace

SolveResult solve_exact(const RatMatrix& A, const RatVector& b) {
    if (A.rows != b.size()) throw ValidationError("solve_exact: rhs size mismatch");
    Echelon e = eliminate(integer_rows(A, &b), A.cols);
    for (std::size_t r = e.rank; r < e.rows.size(); ++r)
        if (e.rows[r][A.cols] != 0) return SolveInconsistent{};
    if (e.rank < A.cols) return SolveRankDeficient{e.rank};
    // Back-substitution on the triangular integer system.
    RatVector x(A.cols);
    for (std::size_t r = e.rank; r-- > 0;) {
        std::size_t pc = e.pivot_cols[r];
        Rat acc = e.rows[r][A.cols];
        for (std::size_t c = pc + 1; c < A.cols; ++c) acc -= Rat(e.rows[r][c]) * x[c];
        x[pc] = acc / Rat(e.rows[r][pc]);
    }
    return SolveUnique{std::move(x)};
}

std::size_t rank(const RatMatrix& A) {
    return eliminate(integer_rows(A, nullptr), A.cols).rank;
}

std::vector<RatVector> nullspace(const RatMatrix& A) {
    // Reduced row echelon over Rat (not a hot path): x_free = 1 basis vectors.
    std::vector<RatVector> m(A.rows, RatVector(A.cols));
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t c = 0; c < A.cols; ++c) m[r][c] = A.at(r, c);
    std::size_t rk = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < A.cols && rk < m.size(); ++col) {
        std::size_t piv = rk;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rk], m[piv]);
        Rat p = m[rk][col];
        for (std::size_t c = col; c < A.cols; ++c) m[rk][c] /= p;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rk || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (std::size_t c = col; c < A.cols; ++c) m[r][c] -= f * m[rk][c];
        }
        pivot_cols.push_back(col);
        ++rk;
    }
    std::vector<RatVector> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < A.cols; ++col) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        RatVector v(A.cols);
        v[col] = 1;
        for (std::size_t r = 0; r < rk; ++r) v[pivot_cols[r]] = -m[r][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace riderlab
