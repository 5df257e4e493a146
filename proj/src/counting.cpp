#include "riderlab/counting.hpp"
#include "riderlab/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <vector>

namespace riderlab {

bool attacks(const Piece& p, const Cell& z1, const Cell& z2) {
    long long dx = z2.x - z1.x, dy = z2.y - z1.y;
    if (dx == 0 && dy == 0) return true;
    for (const Move& m : p.moves)
        if (m.d * dx - m.c * dy == 0) return true;
    return false;
}

namespace {

/** For each move, assigns every cell of the n x n board the index of its
 *  attack line (cells z, z' share a line along (c,d) iff c*y - d*x agrees). */
struct LineIndex {
    int n_moves = 0;
    int n_cells = 0;
    std::vector<int> line_of;  // [move * n_cells + cell] -> line id
    std::vector<int> lines_per_move;

    LineIndex(const Piece& p, int n) {
        n_moves = static_cast<int>(p.moves.size());
        n_cells = n * n;
        line_of.resize(static_cast<std::size_t>(n_moves) * n_cells);
        lines_per_move.resize(n_moves);
        for (int mi = 0; mi < n_moves; ++mi) {
            const Move& m = p.moves[mi];
            long long lo = 0, hi = 0;
            for (int y = 0; y < n; ++y)
                for (int x = 0; x < n; ++x) {
                    long long v = m.c * static_cast<long long>(y) - m.d * x;
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            lines_per_move[mi] = static_cast<int>(hi - lo + 1);
            for (int y = 0; y < n; ++y)
                for (int x = 0; x < n; ++x) {
                    long long v = m.c * static_cast<long long>(y) - m.d * x;
                    line_of[static_cast<std::size_t>(mi) * n_cells + (y * n + x)] =
                        static_cast<int>(v - lo);
                }
        }
    }
};

/** Occupied-line scratch: one flag array per move. */
struct Occupancy {
    std::vector<std::vector<char>> used;

    explicit Occupancy(const LineIndex& li) {
        used.resize(li.n_moves);
        for (int mi = 0; mi < li.n_moves; ++mi) used[mi].assign(li.lines_per_move[mi], 0);
    }
};

/** Counts completions: pieces on cells > `cell`, depth pieces placed so far. */
Int dfs_count(const LineIndex& li, Occupancy& occ, int first_cell, int depth, int q) {
    if (depth == q) return 1;
    Int total = 0;
    // Not enough cells left to finish: the loop body below also stops naturally,
    // but cutting here saves the scan.
    for (int cell = first_cell; cell <= li.n_cells - (q - depth); ++cell) {
        bool clash = false;
        for (int mi = 0; mi < li.n_moves && !clash; ++mi)
            clash = occ.used[mi][li.line_of[static_cast<std::size_t>(mi) * li.n_cells + cell]];
        if (clash) continue;
        for (int mi = 0; mi < li.n_moves; ++mi)
            occ.used[mi][li.line_of[static_cast<std::size_t>(mi) * li.n_cells + cell]] = 1;
        total += dfs_count(li, occ, cell + 1, depth + 1, q);
        for (int mi = 0; mi < li.n_moves; ++mi)
            occ.used[mi][li.line_of[static_cast<std::size_t>(mi) * li.n_cells + cell]] = 0;
    }
    return total;
}

void validate_count_args(int q, int n) {
    if (q < 0) throw ValidationError("piece count q must be >= 0");
    if (n < 1) throw ValidationError("board size n must be >= 1");
}

} // namespace

Int count_unlabeled_serial(const Piece& p, int q, int n) {
    validate_count_args(q, n);
    if (q == 0) return 1;
    LineIndex li(p, n);
    Occupancy occ(li);
    return dfs_count(li, occ, 0, 0, q);
}

Int count_unlabeled(const Piece& p, int q, int n) {
    validate_count_args(q, n);
    if (q == 0) return 1;
    LineIndex li(p, n);
    const int n_cells = n * n;
    std::vector<Int> partial(n_cells);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int first = 0; first < n_cells; ++first) {
        Occupancy occ(li);
        for (int mi = 0; mi < li.n_moves; ++mi)
            occ.used[mi][li.line_of[static_cast<std::size_t>(mi) * n_cells + first]] = 1;
        partial[first] = dfs_count(li, occ, first + 1, 1, q);
    }
    Int total = 0;
    for (const Int& v : partial) total += v;
    return total;
}

Int count_one_move(const Move& m, int q, int n) {
    validate_count_args(q, n);
    if (q == 0) return 1;
    // Histogram of attack-line sizes, then e_q(line sizes) by DP.
    Piece p = make_piece({m});
    LineIndex li(p, n);
    std::vector<long long> size_of_line(li.lines_per_move[0], 0);
    for (int cell = 0; cell < li.n_cells; ++cell) ++size_of_line[li.line_of[cell]];
    std::vector<Int> e(q + 1);
    e[0] = 1;
    for (long long s : size_of_line) {
        if (s == 0) continue;
        for (int k = q; k >= 1; --k) e[k] += s * e[k - 1];
    }
    return e[q];
}

CountTable count_table(const Piece& p, int q, int n_max) {
    validate_count_args(q, n_max);
    CountTable t;
    t.piece = p;
    t.q = q;
    t.values.resize(n_max);
    if (p.moves.size() == 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int n = 1; n <= n_max; ++n) t.values[n - 1] = count_one_move(p.moves[0], q, n);
    } else {
        for (int n = 1; n <= n_max; ++n) t.values[n - 1] = count_unlabeled(p, q, n);
    }
    return t;
}

} // namespace riderlab
