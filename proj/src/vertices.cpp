#include "riderlab/vertices.hpp"
#include "riderlab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <tuple>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace riderlab {

std::string Constraint::label() const {
    if (kind == Kind::Hyperplane)
        return "H(" + move_slope(m) + ")(" + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ")";
    return std::string(coord % 2 == 0 ? "x" : "y") + std::to_string(coord / 2 + 1) +
           "=" + std::to_string(value);
}

std::vector<Constraint> build_constraints(const Piece& p, int q) {
    if (q < 1) throw ValidationError("build_constraints: q must be >= 1");
    if (p.moves.empty()) throw ValidationError("build_constraints: piece has no moves");
    std::vector<Constraint> out;
    for (const Move& m : p.moves)
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) {
                Constraint c;
                c.kind = Constraint::Kind::Hyperplane;
                c.i = i;
                c.j = j;
                c.m = m;
                out.push_back(c);
            }
    for (int coord = 0; coord < 2 * q; ++coord)
        for (int value = 0; value <= 1; ++value) {
            Constraint c;
            c.kind = Constraint::Kind::Fixation;
            c.coord = coord;
            c.value = value;
            out.push_back(c);
        }
    return out;
}

void constraint_row(const Constraint& c, int q, std::vector<Rat>& row, Rat& rhs) {
    row.assign(2 * static_cast<std::size_t>(q), Rat(0));
    if (c.kind == Constraint::Kind::Hyperplane) {
        // (z_j - z_i) . (d, -c) = 0
        row[2 * c.i] = Rat(-c.m.d);
        row[2 * c.i + 1] = Rat(c.m.c);
        row[2 * c.j] = Rat(c.m.d);
        row[2 * c.j + 1] = Rat(-c.m.c);
        rhs = 0;
    } else {
        row[c.coord] = 1;
        rhs = c.value;
    }
}

namespace {

// Integer constraint row with the rhs appended as the last entry.
std::vector<Int> integer_constraint_row(const Constraint& c, int q) {
    std::vector<Int> r(2 * static_cast<std::size_t>(q) + 1, Int(0));
    if (c.kind == Constraint::Kind::Hyperplane) {
        r[2 * c.i] = -c.m.d;
        r[2 * c.i + 1] = c.m.c;
        r[2 * c.j] = c.m.d;
        r[2 * c.j + 1] = -c.m.c;
    } else {
        r[c.coord] = 1;
        r[2 * q] = c.value;
    }
    return r;
}

void normalize_row(std::vector<Int>& r) {
    Int g = 0;
    for (const Int& v : r) {
        g = gcd_int(g, v);
        if (g == 1) break;
    }
    if (g > 1)
        for (Int& v : r) v /= g;
}

/** Row-reduced integer echelon of the constraints included so far.  Every
 *  stored row has zeros in every other stored row's pivot column, so at full
 *  rank each coordinate reads off one row directly. */
struct Echelon {
    int vars = 0; // row length is vars + 1 (rhs last)
    std::vector<std::vector<Int>> rows;
    std::vector<int> pivots;

    int rank() const { return static_cast<int>(rows.size()); }

    // Reduces `in` against the stored rows.  Returns 1 and fills `out` if the
    // row is independent, 0 if it is implied by the stored rows, -1 if it
    // contradicts them.
    int reduce(const std::vector<Int>& in, std::vector<Int>& out) const {
        out = in;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Int& f = out[pivots[r]];
            if (f == 0) continue;
            const Int p = rows[r][pivots[r]];
            const Int fc = f; // `f` references out[], which the loop rewrites
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] = out[k] * p - rows[r][k] * fc;
            normalize_row(out);
        }
        for (int k = 0; k < vars; ++k)
            if (out[k] != 0) return 1;
        return out[vars] != 0 ? -1 : 0;
    }

    // Installs a row for which reduce() returned 1.
    void commit(std::vector<Int> red) {
        int c = 0;
        while (red[c] == 0) ++c;
        if (red[c] < 0)
            for (Int& v : red) v = -v;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Int f = rows[r][c];
            if (f == 0) continue;
            const Int& p = red[c];
            for (std::size_t k = 0; k < rows[r].size(); ++k)
                rows[r][k] = rows[r][k] * p - red[k] * f;
            normalize_row(rows[r]);
        }
        pivots.push_back(c);
        rows.push_back(std::move(red));
    }

    // Unique solution once rank == vars.
    std::vector<Rat> solve() const {
        std::vector<Rat> x(vars);
        for (std::size_t r = 0; r < rows.size(); ++r)
            x[pivots[r]] = Rat(rows[r][vars], rows[r][pivots[r]]);
        return x;
    }
};

using ConstraintKey = std::tuple<int, int, int, long long, long long, int, int>;

ConstraintKey constraint_key(const Constraint& c) {
    return {static_cast<int>(c.kind), c.i, c.j, c.m.c, c.m.d, c.coord, c.value};
}

bool vertex_less(const Vertex& a, const Vertex& b) {
    for (std::size_t i = 0; i < a.config.size(); ++i) {
        if (a.config[i].x != b.config[i].x) return a.config[i].x < b.config[i].x;
        if (a.config[i].y != b.config[i].y) return a.config[i].y < b.config[i].y;
    }
    // Equal configurations: order the certificates so dedup keeps a fixed one.
    const std::size_t n = std::min(a.basis.size(), b.basis.size());
    for (std::size_t i = 0; i < n; ++i) {
        ConstraintKey ka = constraint_key(a.basis[i]);
        ConstraintKey kb = constraint_key(b.basis[i]);
        if (ka != kb) return ka < kb;
    }
    return a.basis.size() < b.basis.size();
}

bool same_config(const Vertex& a, const Vertex& b) {
    for (std::size_t i = 0; i < a.config.size(); ++i)
        if (a.config[i].x != b.config[i].x || a.config[i].y != b.config[i].y)
            return false;
    return true;
}

struct SearchContext {
    const std::vector<Constraint>* constraints = nullptr;
    std::vector<std::vector<Int>> int_rows;
    int q = 0;
    int vars = 0;
    std::uint64_t budget = 0;
    std::atomic<std::uint64_t> solves{0};
    std::atomic<bool> over_budget{false};
};

void record_solution(const Echelon& ech, const std::vector<int>& included,
                     SearchContext& ctx, std::vector<Vertex>& out) {
    if (ctx.solves.fetch_add(1, std::memory_order_relaxed) + 1 > ctx.budget) {
        ctx.over_budget.store(true, std::memory_order_relaxed);
        return;
    }
    std::vector<Rat> x = ech.solve();
    for (const Rat& v : x)
        if (v < 0 || v > 1) return;
    Vertex vert;
    vert.config.reserve(ctx.q);
    for (int i = 0; i < ctx.q; ++i) vert.config.push_back(Point{x[2 * i], x[2 * i + 1]});
    std::vector<Rat> coords(x.begin(), x.end());
    vert.delta = lcd(coords);
    vert.basis.reserve(included.size());
    for (int idx : included) vert.basis.push_back((*ctx.constraints)[idx]);
    out.push_back(std::move(vert));
}

void dfs(int k, Echelon& ech, std::vector<int>& included, SearchContext& ctx,
         std::vector<Vertex>& out) {
    const int K = static_cast<int>(ctx.int_rows.size());
    while (true) {
        if (ctx.over_budget.load(std::memory_order_relaxed)) return;
        if (ech.rank() == ctx.vars) {
            record_solution(ech, included, ctx, out);
            return;
        }
        if (k == K || ech.rank() + (K - k) < ctx.vars) return;
        std::vector<Int> red;
        if (ech.reduce(ctx.int_rows[k], red) == 1) {
            Echelon child = ech;
            child.commit(std::move(red));
            included.push_back(k);
            dfs(k + 1, child, included, ctx, out);
            included.pop_back();
        }
        ++k;
    }
}

std::vector<Vertex> enumerate_impl(const Piece& p, int q,
                                   const EnumerationOptions& options, bool parallel) {
    if (q > options.q_guard)
        throw ValidationError("vertex enumeration feasibility guard: q = " +
                              std::to_string(q) + " exceeds " +
                              std::to_string(options.q_guard) +
                              "; raise q_guard to override");
    std::vector<Constraint> constraints = build_constraints(p, q);
    const int K = static_cast<int>(constraints.size());
    SearchContext ctx;
    ctx.constraints = &constraints;
    ctx.q = q;
    ctx.vars = 2 * q;
    ctx.budget = options.budget;
    ctx.int_rows.reserve(K);
    for (const Constraint& c : constraints) ctx.int_rows.push_back(integer_constraint_row(c, q));

    // Branches are partitioned by the lowest included constraint index.
    std::vector<std::vector<Vertex>> found(K);
    auto run_first = [&](int f) {
        if (ctx.vars + f > K) return; // too few constraints left to reach full rank
        Echelon ech;
        ech.vars = ctx.vars;
        std::vector<Int> red;
        if (ech.reduce(ctx.int_rows[f], red) != 1) return;
        ech.commit(std::move(red));
        std::vector<int> included{f};
        dfs(f + 1, ech, included, ctx, found[f]);
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int f = 0; f < K; ++f) run_first(f);
    } else {
        for (int f = 0; f < K; ++f) run_first(f);
    }
    if (ctx.over_budget.load())
        throw BudgetExceededError("enumerate_vertices: more than " +
                                  std::to_string(options.budget) +
                                  " solved systems; raise the budget to continue");

    std::vector<Vertex> all;
    for (auto& v : found) {
        all.insert(all.end(), std::make_move_iterator(v.begin()),
                   std::make_move_iterator(v.end()));
    }
    std::sort(all.begin(), all.end(), vertex_less);
    all.erase(std::unique(all.begin(), all.end(), same_config), all.end());
    return all;
}

} // namespace

std::vector<Vertex> enumerate_vertices(const Piece& p, int q,
                                       const EnumerationOptions& options) {
    return enumerate_impl(p, q, options, options.parallel);
}

std::vector<Vertex> enumerate_vertices_serial(const Piece& p, int q,
                                              const EnumerationOptions& options) {
    return enumerate_impl(p, q, options, false);
}

DenominatorSpectrum polytope_denominator(const Piece& p, int q,
                                         const EnumerationOptions& options) {
    std::vector<Vertex> verts = enumerate_vertices(p, q, options);
    DenominatorSpectrum ds;
    ds.D = 1;
    for (const Vertex& v : verts) {
        ds.D = lcm_int(ds.D, v.delta);
        ds.spectrum.push_back(v.delta);
    }
    std::sort(ds.spectrum.begin(), ds.spectrum.end());
    ds.spectrum.erase(std::unique(ds.spectrum.begin(), ds.spectrum.end()),
                      ds.spectrum.end());
    return ds;
}

bool is_vertex(const Piece& p, int q, const Config& cfg, std::vector<Constraint>* basis) {
    if (static_cast<int>(cfg.size()) != q)
        throw ValidationError("is_vertex: configuration has " +
                              std::to_string(cfg.size()) + " points, expected " +
                              std::to_string(q));
    for (const Point& pt : cfg)
        if (pt.x < 0 || pt.x > 1 || pt.y < 0 || pt.y > 1) return false;
    std::vector<Constraint> constraints = build_constraints(p, q);
    Echelon ech;
    ech.vars = 2 * q;
    std::vector<Constraint> cert;
    std::vector<Rat> row;
    Rat rhs;
    for (const Constraint& c : constraints) {
        constraint_row(c, q, row, rhs);
        Rat acc = -rhs;
        for (int i = 0; i < q; ++i) {
            acc += row[2 * i] * cfg[i].x;
            acc += row[2 * i + 1] * cfg[i].y;
        }
        if (acc != 0) continue; // not active at cfg
        std::vector<Int> red;
        if (ech.reduce(integer_constraint_row(c, q), red) == 1) {
            ech.commit(std::move(red));
            cert.push_back(c);
            if (ech.rank() == 2 * q) break;
        }
    }
    if (ech.rank() != 2 * q) return false;
    if (basis) *basis = std::move(cert);
    return true;
}

MonotonicityReport monotonicity_check(const Piece& piece, const Piece& piece2,
                                      int q, int q2, const EnumerationOptions& options) {
    for (const Move& m : piece.moves)
        if (std::find(piece2.moves.begin(), piece2.moves.end(), m) == piece2.moves.end())
            throw ValidationError("monotonicity_check: second piece must contain every move "
                                  "of the first (missing " + move_slope(m) + ")");
    if (q2 < q) throw ValidationError("monotonicity_check: q2 must be >= q");
    MonotonicityReport rep;
    rep.D_small_q = polytope_denominator(piece, q, options).D;
    rep.D_big_q = polytope_denominator(piece, q2, options).D;
    rep.D_superpiece = polytope_denominator(piece2, q, options).D;
    rep.q_divides = rep.D_big_q % rep.D_small_q == 0;
    rep.piece_divides = rep.D_superpiece % rep.D_small_q == 0;
    return rep;
}

} // namespace riderlab
