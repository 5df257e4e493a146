#include "riderlab/geometry.hpp"
#include "riderlab/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

namespace riderlab {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::runtime_error("zero denominator in '" + s + "'");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::runtime_error("malformed rational literal '" + s + "'");
    }
}

Move make_move(long long c, long long d) {
    if (c == 0 && d == 0) throw ValidationError("move (0,0) has no direction");
    long long g = std::gcd(c < 0 ? -c : c, d < 0 ? -d : d);
    c /= g;
    d /= g;
    if (c < 0 || (c == 0 && d < 0)) {
        c = -c;
        d = -d;
    }
    return Move{c, d};
}

std::string move_slope(const Move& m) {
    return std::to_string(m.d) + "/" + std::to_string(m.c);
}

Move parse_move(const std::string& s) {
    if (s.empty()) throw ValidationError("empty move literal");
    std::string t = s;
    // "(c,d)" or "c,d" pairs
    if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    auto comma = t.find(',');
    try {
        if (comma != std::string::npos) {
            long long c = std::stoll(t.substr(0, comma));
            long long d = std::stoll(t.substr(comma + 1));
            return make_move(c, d);
        }
        // slope "d/c" or plain integer slope "d" (meaning (1, d))
        auto slash = t.find('/');
        if (slash == std::string::npos) return make_move(1, std::stoll(t));
        long long d = std::stoll(t.substr(0, slash));
        long long c = std::stoll(t.substr(slash + 1));
        return make_move(c, d);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("malformed move literal '" + s + "'");
    }
}

namespace {

struct CatalogEntry {
    const char* name;
    const char* alias; // partial-queen code, or nullptr
    std::vector<Move> moves;
};

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"semirook", "Q10", {{1, 0}}},
        {"semibishop", "Q01", {{1, 1}}},
        {"rook", "Q20", {{0, 1}, {1, 0}}},
        {"bishop", "Q02", {{1, -1}, {1, 1}}},
        {"anassa", "Q11", {{1, 0}, {1, 1}}},
        {"semiqueen", "Q21", {{0, 1}, {1, -1}, {1, 0}}},
        {"trident", "Q12", {{0, 1}, {1, -1}, {1, 1}}},
        {"queen", "Q22", {{0, 1}, {1, -1}, {1, 0}, {1, 1}}},
        {"nightrider", nullptr, {{1, -2}, {1, 2}, {2, -1}, {2, 1}}},
        {"three-move-partial-nightrider", nullptr, {{1, 2}, {2, -1}, {2, 1}}},
    };
    return entries;
}

} // namespace

Piece make_piece(std::vector<Move> moves) {
    if (moves.empty()) throw ValidationError("a piece needs at least one move");
    for (Move& m : moves) m = make_move(m.c, m.d);
    std::sort(moves.begin(), moves.end());
    for (std::size_t i = 1; i < moves.size(); ++i)
        if (moves[i] == moves[i - 1])
            throw ValidationError("duplicate move direction " + move_slope(moves[i]));
    Piece p{std::move(moves), ""};
    for (const CatalogEntry& e : catalog())
        if (e.moves == p.moves) {
            p.name = e.name;
            break;
        }
    return p;
}

Piece piece_by_name(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (name == e.name || (e.alias && name == e.alias)) return make_piece(e.moves);
    throw ValidationError("unknown piece '" + name + "'");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const CatalogEntry& e : catalog()) out.push_back(e.name);
    return out;
}

Int point_denominator(const Point& p) {
    return lcm_int(den(p.x), den(p.y));
}

namespace {

Rat cross(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
    return ax * by - ay * bx;
}

} // namespace

Board make_board(std::vector<Point> corners) {
    const std::size_t k = corners.size();
    if (k < 3) throw ValidationError("a board needs at least 3 corners");
    // Rotate so the lexicographically least corner comes first.
    auto least = std::min_element(corners.begin(), corners.end());
    std::rotate(corners.begin(), least, corners.end());
    // Signed area decides orientation; reverse clockwise input (keeping corner 0).
    Rat area2 = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = corners[i];
        const Point& b = corners[(i + 1) % k];
        area2 += cross(a.x, a.y, b.x, b.y);
    }
    if (area2 == 0) throw ValidationError("board corners are degenerate");
    if (area2 < 0) std::reverse(corners.begin() + 1, corners.end());
    // Strict convexity: every consecutive corner triple turns left.
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = corners[i];
        const Point& b = corners[(i + 1) % k];
        const Point& c = corners[(i + 2) % k];
        if (cross(b.x - a.x, b.y - a.y, c.x - b.x, c.y - b.y) <= 0)
            throw ValidationError("board corners are not strictly convex");
    }
    return Board{std::move(corners)};
}

Board unit_square() {
    return make_board({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

bool in_board(const Board& b, const Point& p) {
    const std::size_t k = b.corners.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = b.corners[i];
        const Point& c = b.corners[(i + 1) % k];
        if (cross(c.x - a.x, c.y - a.y, p.x - a.x, p.y - a.y) < 0) return false;
    }
    return true;
}

bool on_boundary(const Board& b, const Point& p) {
    return in_board(b, p) && !edges_containing(b, p).empty();
}

std::vector<std::size_t> edges_containing(const Board& b, const Point& p) {
    std::vector<std::size_t> out;
    const std::size_t k = b.corners.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = b.corners[i];
        const Point& c = b.corners[(i + 1) % k];
        if (cross(c.x - a.x, c.y - a.y, p.x - a.x, p.y - a.y) != 0) continue;
        // On the edge line; inside the segment iff between the endpoints.
        Rat dot = (p.x - a.x) * (c.x - a.x) + (p.y - a.y) * (c.y - a.y);
        Rat len2 = (c.x - a.x) * (c.x - a.x) + (c.y - a.y) * (c.y - a.y);
        if (dot >= 0 && dot <= len2) out.push_back(i);
    }
    return out;
}

bool edge_parallel(const Board& b, std::size_t edge, const Move& m) {
    const std::size_t k = b.corners.size();
    const Point& a = b.corners[edge % k];
    const Point& c = b.corners[(edge + 1) % k];
    return cross(c.x - a.x, c.y - a.y, Rat(m.c), Rat(m.d)) == 0;
}

Point boundary_exit(const Board& b, const Point& p, const Move& m) {
    if (!on_boundary(b, p)) throw ValidationError("boundary_exit: point not on the boundary");
    // The line p + t*m clipped against each CCW half-plane yields t in [lo, hi]
    // with lo <= 0 <= hi; the exit is the far end of that chord.
    bool has_lo = false, has_hi = false;
    Rat lo = 0, hi = 0;
    const std::size_t k = b.corners.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = b.corners[i];
        const Point& c = b.corners[(i + 1) % k];
        Rat ex = c.x - a.x, ey = c.y - a.y;
        Rat A = cross(ex, ey, p.x - a.x, p.y - a.y); // >= 0: p inside this half-plane
        Rat B = cross(ex, ey, Rat(m.c), Rat(m.d));
        if (B == 0) continue; // line parallel to edge: no t bound from it
        Rat t = -A / B;
        if (B > 0) { // constraint t >= t0
            if (!has_lo || t > lo) { lo = t; has_lo = true; }
        } else { // constraint t <= t0
            if (!has_hi || t < hi) { hi = t; has_hi = true; }
        }
    }
    // A move can be parallel to at most one edge direction pair; a line through
    // a bounded convex board is always clipped on both sides.
    if (!has_lo || !has_hi) throw ValidationError("boundary_exit: unbounded board clip");
    Rat t = hi > 0 ? hi : (lo < 0 ? lo : Rat(0));
    return Point{p.x + t * m.c, p.y + t * m.d};
}

Int denom(const Config& c) {
    Int out = 1;
    for (const Point& p : c) out = lcm_int(out, point_denominator(p));
    return out;
}

} // namespace riderlab
