#include "riderlab/fibonacci.hpp"
#include "riderlab/closed_forms.hpp"
#include "riderlab/errors.hpp"
#include "riderlab/linalg.hpp"

#include <algorithm>

namespace riderlab {

Int fib(int i) {
    if (i < 0) throw ValidationError("fib: index must be >= 0");
    Int a = 1, b = 1; // F_0 = F_1 = 1
    for (int k = 2; k <= i; ++k) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return i == 0 ? Int(1) : b;
}

Config ScaledConfig::unit() const {
    Config out;
    out.reserve(integral.size());
    for (const Point& p : integral) out.push_back(Point{p.x / Rat(delta), p.y / Rat(delta)});
    return out;
}

Point golden_rectangle_position(int i) {
    if (i < 1) throw ValidationError("golden_rectangle_position: i must be >= 1");
    if (i == 1) return Point{Rat(1), Rat(0)};
    Int fk = fib(i / 2);
    Int fk1 = fib(i / 2 - 1);
    switch (i % 4) {
    case 0: return Point{Rat(fk), Rat(0)};
    case 1: return Point{Rat(fk), Rat(fk1)};
    case 2: return Point{Rat(0), Rat(fk)};
    default: return Point{Rat(fk1), Rat(fk)};
    }
}

namespace {

// Translates integer points to the first quadrant; the denominator is the
// side of the smallest enclosing axis-aligned square.
ScaledConfig pack_integral(Config pts) {
    Rat minx = pts[0].x, miny = pts[0].y, maxx = pts[0].x, maxy = pts[0].y;
    for (const Point& p : pts) {
        minx = std::min(minx, p.x);
        miny = std::min(miny, p.y);
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    }
    for (Point& p : pts) {
        p.x -= minx;
        p.y -= miny;
    }
    Rat side = std::max(maxx - minx, maxy - miny);
    if (side == 0) throw ConstructionFailureError("configuration has no extent");
    ScaledConfig sc;
    sc.integral = std::move(pts);
    sc.delta = num(side); // integer input, so the side is integral
    return sc;
}

// Translates to min 0, scales the larger bounding side to 1, and rescales to
// the least integral configuration.
ScaledConfig normalize_solution(const std::vector<Rat>& x, int q) {
    Config pts(q);
    for (int i = 0; i < q; ++i) pts[i] = Point{x[2 * i], x[2 * i + 1]};
    Rat minx = pts[0].x, miny = pts[0].y, maxx = pts[0].x, maxy = pts[0].y;
    for (const Point& p : pts) {
        minx = std::min(minx, p.x);
        miny = std::min(miny, p.y);
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    }
    Rat side = std::max(maxx - minx, maxy - miny);
    if (side == 0) throw ConstructionFailureError("configuration has no extent");
    std::vector<Rat> coords;
    coords.reserve(2 * q);
    for (Point& p : pts) {
        p.x = (p.x - minx) / side;
        p.y = (p.y - miny) / side;
        coords.push_back(p.x);
        coords.push_back(p.y);
    }
    ScaledConfig sc;
    sc.delta = lcd(coords);
    sc.integral.reserve(q);
    for (const Point& p : pts)
        sc.integral.push_back(Point{p.x * Rat(sc.delta), p.y * Rat(sc.delta)});
    return sc;
}

} // namespace

ScaledConfig golden_rectangle(int q) {
    if (q < 3) throw ValidationError("golden_rectangle: q must be >= 3");
    Config pts;
    pts.reserve(q);
    for (int i = 1; i <= q; ++i) pts.push_back(golden_rectangle_position(i));
    return pack_integral(std::move(pts));
}

std::vector<LinearMap> parallelogram_maps(const Move& a, const Move& b, const Move& c) {
    std::array<Int, 3> w = triangle_weights(a, b, c);
    const Move ms[3] = {a, b, c};
    std::array<std::array<long long, 2>, 3> v;
    for (int i = 0; i < 3; ++i)
        v[i] = {static_cast<long long>(w[i] * ms[i].c), static_cast<long long>(w[i] * ms[i].d)};
    std::vector<LinearMap> maps;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            LinearMap m;
            m.col_x = {-v[i][0], -v[i][1]};
            m.col_y = {v[j][0], v[j][1]};
            maps.push_back(m);
        }
    return maps;
}

namespace {

bool map_cols_equal(const std::array<long long, 2>& a, const std::array<long long, 2>& b) {
    return a[0] == b[0] && a[1] == b[1];
}

std::array<long long, 2> negate_col(const std::array<long long, 2>& a) {
    return {-a[0], -a[1]};
}

} // namespace

ScaledConfig golden_parallelogram(const Piece& p, const LinearMap& map, int q) {
    if (q < 3) throw ValidationError("golden_parallelogram: q must be >= 3");
    if (p.moves.size() < 3)
        throw ValidationError("golden_parallelogram: piece needs at least 3 moves");
    if (map.col_x[0] * map.col_y[1] - map.col_x[1] * map.col_y[0] == 0)
        throw ValidationError("golden_parallelogram: map is degenerate");
    // The map must be one of the six parallelogram maps of some 3-subset of
    // the moves, up to negating both columns (a point reflection).
    bool admissible = false;
    const std::size_t n = p.moves.size();
    for (std::size_t i = 0; i < n && !admissible; ++i)
        for (std::size_t j = i + 1; j < n && !admissible; ++j)
            for (std::size_t k = j + 1; k < n && !admissible; ++k)
                for (const LinearMap& cand :
                     parallelogram_maps(p.moves[i], p.moves[j], p.moves[k])) {
                    if ((map_cols_equal(map.col_x, cand.col_x) &&
                         map_cols_equal(map.col_y, cand.col_y)) ||
                        (map_cols_equal(map.col_x, negate_col(cand.col_x)) &&
                         map_cols_equal(map.col_y, negate_col(cand.col_y)))) {
                        admissible = true;
                        break;
                    }
                }
    if (!admissible)
        throw ValidationError("golden_parallelogram: map does not send the axes to "
                              "weighted triangle directions of the piece");
    Config pts;
    pts.reserve(q);
    for (int i = 1; i <= q; ++i) {
        Point g = golden_rectangle_position(i);
        pts.push_back(Point{Rat(map.col_x[0]) * g.x + Rat(map.col_y[0]) * g.y,
                            Rat(map.col_x[1]) * g.x + Rat(map.col_y[1]) * g.y});
    }
    return pack_integral(std::move(pts));
}

namespace {

struct HyperplaneTerm {
    Move m;
    int i, j; // 1-based piece indices
};

/** The spiral hyperplane pattern for move roles (m1, m2, m3, m4): pairs
 *  (2i,2i+1) along m1, (2i+1,2i+2) along m2, (1,3) and (2i,2i+3) along m3,
 *  (2i+1,2i+4) along m4, for all pairs within [1,q].  2q-3 in total. */
std::vector<HyperplaneTerm> spiral_hyperplanes(const std::array<Move, 4>& roles, int q) {
    std::vector<HyperplaneTerm> out;
    for (int i = 1; 2 * i + 1 <= q; ++i) out.push_back({roles[0], 2 * i, 2 * i + 1});
    for (int i = 0; 2 * i + 2 <= q; ++i) out.push_back({roles[1], 2 * i + 1, 2 * i + 2});
    if (q >= 3) out.push_back({roles[2], 1, 3});
    for (int i = 1; 2 * i + 3 <= q; ++i) out.push_back({roles[2], 2 * i, 2 * i + 3});
    for (int i = 0; 2 * i + 4 <= q; ++i) out.push_back({roles[3], 2 * i + 1, 2 * i + 4});
    return out;
}

void fill_hyperplane_row(RatMatrix& A, std::size_t r, const HyperplaneTerm& h) {
    A.at(r, 2 * (h.i - 1)) -= h.m.d;
    A.at(r, 2 * (h.i - 1) + 1) += h.m.c;
    A.at(r, 2 * (h.j - 1)) += h.m.d;
    A.at(r, 2 * (h.j - 1) + 1) -= h.m.c;
}

} // namespace

ScaledConfig fibonacci_spiral_queens(int q) {
    if (q < 4) throw ValidationError("fibonacci_spiral_queens: q must be >= 4");
    const std::array<Move, 4> roles = {make_move(1, 1), make_move(1, -1), make_move(0, 1),
                                       make_move(1, 0)};
    std::vector<HyperplaneTerm> hps = spiral_hyperplanes(roles, q);
    const std::size_t rows = hps.size() + 3;
    RatMatrix A(rows, 2 * static_cast<std::size_t>(q));
    RatVector b(rows, Rat(0));
    for (std::size_t r = 0; r < hps.size(); ++r) fill_hyperplane_row(A, r, hps[r]);
    // Anchoring fixations; the third pins the bounding side, solved here at
    // scale 1 and renormalized afterwards.
    auto X = [&](int i) { return 2 * (i - 1); };
    auto Y = [&](int i) { return 2 * (i - 1) + 1; };
    std::size_t r = hps.size();
    switch (q % 4) {
    case 0:
        A.at(r, X(q)) = 1;
        A.at(r + 1, Y(q - 1)) = 1;
        A.at(r + 2, X(q - 2)) = 1;
        b[r + 2] = 1;
        break;
    case 1:
        A.at(r, X(q)) = 1;
        A.at(r + 1, Y(q)) = 1;
        A.at(r + 2, X(q - 2)) = 1;
        b[r + 2] = 1;
        break;
    case 2:
        A.at(r, X(q)) = 1;
        b[r] = 1;
        A.at(r + 1, Y(q)) = 1;
        A.at(r + 2, X(q - 2)) = 1;
        break;
    default:
        A.at(r, Y(q)) = 1;
        b[r] = 1;
        A.at(r + 1, X(q - 1)) = 1;
        A.at(r + 2, Y(q - 2)) = 1;
        break;
    }
    SolveResult res = solve_exact(A, b);
    const auto* u = std::get_if<SolveUnique>(&res);
    if (!u)
        throw ConstructionFailureError("fibonacci_spiral_queens: the spiral system did "
                                       "not pin a unique configuration");
    return normalize_solution(u->x, q);
}

ScaledConfig twisted_spiral(const Piece& p, const std::array<Move, 4>& assignment, int q) {
    if (q < 5) throw ValidationError("twisted_spiral: q must be >= 5");
    if (p.moves.size() != 4)
        throw ValidationError("twisted_spiral: piece must have exactly 4 moves");
    std::vector<Move> sorted_assign(assignment.begin(), assignment.end());
    std::sort(sorted_assign.begin(), sorted_assign.end());
    std::vector<Move> sorted_moves = p.moves;
    std::sort(sorted_moves.begin(), sorted_moves.end());
    if (sorted_assign != sorted_moves)
        throw ValidationError("twisted_spiral: assignment must be a permutation of the "
                              "piece's moves");
    std::vector<HyperplaneTerm> hps = spiral_hyperplanes(assignment, q);
    RatMatrix A(hps.size(), 2 * static_cast<std::size_t>(q));
    for (std::size_t r = 0; r < hps.size(); ++r) fill_hyperplane_row(A, r, hps[r]);
    std::vector<RatVector> ns = nullspace(A);
    // Expected solution space: the two translations plus one shape direction.
    if (ns.size() != 3)
        throw ConstructionFailureError("twisted_spiral: solution space has dimension " +
                                       std::to_string(ns.size()) + ", expected 3");
    for (const RatVector& v : ns) {
        bool translation = true;
        for (int i = 1; i < q && translation; ++i)
            if (v[2 * i] != v[0] || v[2 * i + 1] != v[1]) translation = false;
        if (!translation) return normalize_solution(v, q);
    }
    throw ConstructionFailureError("twisted_spiral: no shape direction in the solution "
                                   "space");
}

LowerBoundCheck exp_lower_bound_check(const Piece& p, int q) {
    if (q < 4) throw ValidationError("exp_lower_bound_check: q must be >= 4");
    if (p.moves.size() < 3)
        throw ValidationError("exp_lower_bound_check: piece needs at least 3 moves");
    Int best = 0;
    const std::size_t n = p.moves.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (const LinearMap& map :
                     parallelogram_maps(p.moves[i], p.moves[j], p.moves[k]))
                    best = std::max(best, golden_parallelogram(p, map, q).delta);
    if (n == 4 && q >= 5) {
        std::array<Move, 4> perm = {p.moves[0], p.moves[1], p.moves[2], p.moves[3]};
        std::sort(perm.begin(), perm.end());
        do {
            try {
                best = std::max(best, twisted_spiral(p, perm, q).delta);
            } catch (const ConstructionFailureError&) {
                // Degenerate role assignment; not a candidate.
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    LowerBoundCheck out;
    out.construction_delta = best;
    out.bound = fib(q / 2) - 1;
    out.holds = best >= out.bound;
    return out;
}

} // namespace riderlab
