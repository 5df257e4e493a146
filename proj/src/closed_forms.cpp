#include "riderlab/closed_forms.hpp"
#include "riderlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace riderlab {

Int one_move_denominator(const Board& b, const Move& m, int q) {
    if (q < 1) throw ValidationError("one_move_denominator: q must be >= 1");
    std::vector<Rat> coords;
    for (const Point& corner : b.corners) {
        coords.push_back(corner.x);
        coords.push_back(corner.y);
    }
    if (q >= 2) {
        for (const Point& corner : b.corners) {
            Point exit = boundary_exit(b, corner, m);
            coords.push_back(exit.x);
            coords.push_back(exit.y);
        }
    }
    return lcd(coords);
}

Int two_move_horizontal_denominator(long long c, long long d, int q) {
    if (c < 1 || d < 1) throw ValidationError("two_move_horizontal_denominator: need c, d >= 1");
    if (std::gcd(c, d) != 1)
        throw ValidationError("two_move_horizontal_denominator: need gcd(c, d) = 1");
    if (q < 1) throw ValidationError("two_move_horizontal_denominator: q must be >= 1");
    if (q == 1) return 1;
    if (d >= c) return d;
    if (q <= 2 * (c / d) + 1) return c;
    return Int(c) * d;
}

namespace {

long long cross(const Move& a, const Move& b) { return a.c * b.d - a.d * b.c; }

} // namespace

std::array<Int, 3> triangle_weights(const Move& m1, const Move& m2, const Move& m3) {
    long long w1 = cross(m2, m3);
    long long w2 = cross(m3, m1);
    long long w3 = cross(m1, m2);
    if (w1 == 0 || w2 == 0 || w3 == 0)
        throw ValidationError("triangle_weights: moves must be pairwise non-parallel");
    long long g = std::gcd(std::gcd(std::abs(w1), std::abs(w2)), std::abs(w3));
    w1 /= g;
    w2 /= g;
    w3 /= g;
    if (w1 < 0) {
        w1 = -w1;
        w2 = -w2;
        w3 = -w3;
    }
    return {Int(w1), Int(w2), Int(w3)};
}

Int triangle_denominator(const Move& m1, const Move& m2, const Move& m3) {
    std::array<Int, 3> w = triangle_weights(m1, m2, m3);
    const Move ms[3] = {m1, m2, m3};
    Int best = 0;
    for (int i = 0; i < 3; ++i) {
        best = std::max(best, abs_int(w[i] * ms[i].c));
        best = std::max(best, abs_int(w[i] * ms[i].d));
    }
    return best;
}

namespace {

std::vector<Move> apply_symmetry(const std::vector<Move>& moves, int sym) {
    // The square's eight symmetries: optional swap, then independent sign flips.
    std::vector<Move> out;
    out.reserve(moves.size());
    for (const Move& m : moves) {
        long long c = m.c, d = m.d;
        if (sym & 4) std::swap(c, d);
        if (sym & 1) c = -c;
        if (sym & 2) d = -d;
        out.push_back(make_move(c, d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool is_denominator_one_piece(const Piece& p) {
    static const std::vector<std::vector<Move>> references = {
        {make_move(1, 0)},                  // semirook
        {make_move(0, 1), make_move(1, 0)}, // rook
        {make_move(1, 1)},                  // semibishop
        {make_move(1, 0), make_move(1, 1)}, // anassa
    };
    std::vector<Move> base = p.moves;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (int sym = 0; sym < 8; ++sym) {
        std::vector<Move> image = apply_symmetry(base, sym);
        for (const auto& ref : references)
            if (image == ref) return true;
    }
    return false;
}

} // namespace riderlab
