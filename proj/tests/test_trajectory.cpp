#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riderlab/errors.hpp"
#include "riderlab/linalg.hpp"
#include "riderlab/trajectory.hpp"
#include "riderlab/vertices.hpp"

#include <algorithm>

using namespace riderlab;

namespace {

Point pt(long long xn, long long xd, long long yn, long long yd) {
    return Point{Rat(xn, xd), Rat(yn, yd)};
}

const Trajectory* find_start(const std::vector<Trajectory>& ts, const Point& first,
                             std::size_t min_len = 2) {
    for (const Trajectory& t : ts)
        if (t.points.front() == first && t.length() >= min_len) return &t;
    return nullptr;
}

} // namespace

TEST_CASE("extending the (1,0)/(13,4) zigzag") {
    Board sq = unit_square();
    Trajectory t;
    t.m1 = make_move(1, 0);
    t.m2 = make_move(13, 4);
    t.start_move = 1; // first step along (13,4)
    t.points = {pt(0, 1, 0, 1)};

    t = extend_trajectory(sq, t);
    CHECK(t.points.back() == pt(1, 1, 4, 13));
    CHECK_FALSE(t.maximal);
    t = extend_trajectory(sq, t);
    CHECK(t.points.back() == pt(0, 1, 4, 13));
    CHECK_FALSE(t.maximal);
    while (!t.maximal) t = extend_trajectory(sq, t);
    // the walk visits (0, 12/13) and stops on the top edge at (1/4, 1)
    CHECK(t.length() == 8);
    CHECK(t.points[6] == pt(0, 1, 12, 13));
    CHECK(t.points.back() == pt(1, 4, 1, 1));
    // extending a maximal trajectory is a no-op
    Trajectory again = extend_trajectory(sq, t);
    CHECK(again.points == t.points);
    CHECK(again.maximal);
}

TEST_CASE("immediate exit is a forced stop") {
    Board sq = unit_square();
    Trajectory t;
    t.m1 = make_move(2, 1);
    t.m2 = make_move(1, 3);
    t.start_move = 0;
    t.points = {pt(1, 1, 0, 1)}; // the (2,1)-line meets the square only here
    Trajectory e = extend_trajectory(sq, t);
    CHECK(e.points.size() == 1);
    CHECK(e.maximal);
}

TEST_CASE("maximal corner trajectories") {
    Board sq = unit_square();

    auto ts = maximal_corner_trajectories(sq, make_move(1, 0), make_move(2, 5));
    CHECK(ts.size() == 8); // 4 corners x 2 move orders
    bool found = false;
    for (const Trajectory& t : ts)
        if (t.points.front() == pt(0, 1, 0, 1) && t.length() == 2 &&
            t.points.back() == pt(2, 5, 1, 1))
            found = true;
    CHECK(found);

    auto diag = maximal_corner_trajectories(sq, make_move(1, 0), make_move(1, 1));
    bool corner_to_corner = false;
    for (const Trajectory& t : diag)
        if (t.points.front() == pt(0, 1, 0, 1) && t.length() == 2 &&
            t.points.back() == pt(1, 1, 1, 1))
            corner_to_corner = true;
    CHECK(corner_to_corner);

    // every trajectory: points on the boundary, alternation exact
    for (const Trajectory& t : ts) {
        CHECK(t.maximal);
        for (const Point& p : t.points) CHECK(on_boundary(sq, p));
        for (std::size_t s = 0; s + 1 < t.length(); ++s) {
            const Move& m = t.move_for_step(s);
            Rat dx = t.points[s + 1].x - t.points[s].x;
            Rat dy = t.points[s + 1].y - t.points[s].y;
            CHECK(dx * m.d == dy * m.c);
        }
    }

    CHECK_THROWS_AS(maximal_corner_trajectories(sq, make_move(1, 1), make_move(2, 2)),
                    ValidationError);
}

TEST_CASE("rigid cycles: moves with no cycle") {
    Board sq = unit_square();
    CHECK(find_rigid_cycles(sq, make_move(1, 0), make_move(13, 4), 8).empty());
    CHECK(find_rigid_cycles(sq, make_move(1, 0), make_move(0, 1), 8).empty());
    CHECK(find_rigid_cycles(sq, make_move(1, 0), make_move(2, 5), 8).empty());
}

TEST_CASE("the diagonal midpoint diamond is not rigid") {
    // the alternating-diagonal system on four edge points is rank 7: the
    // diamond slides, so it fails the linear-independence requirement
    Board sq = unit_square();
    CHECK(find_rigid_cycles(sq, make_move(1, 1), make_move(1, -1), 8).empty());

    RatMatrix A(8, 8);
    auto attack = [&A](std::size_t row, Move m, std::size_t i, std::size_t j) {
        A.at(row, 2 * i) = -m.d;
        A.at(row, 2 * i + 1) = m.c;
        A.at(row, 2 * j) = m.d;
        A.at(row, 2 * j + 1) = -m.c;
    };
    attack(0, make_move(1, 1), 0, 1);
    attack(1, make_move(1, -1), 1, 2);
    attack(2, make_move(1, 1), 2, 3);
    attack(3, make_move(1, -1), 3, 0);
    A.at(4, 1) = 1;             // p0 on y = 0
    A.at(5, 2) = 1;             // p1 on x = 1
    A.at(6, 5) = 1;             // p2 on y = 1
    A.at(7, 6) = 1;             // p3 on x = 0
    RatVector b(8, Rat(0));
    b[5] = 1;
    b[6] = 1;
    auto r = solve_exact(A, b);
    REQUIRE(std::holds_alternative<SolveRankDeficient>(r));
    CHECK(std::get<SolveRankDeficient>(r).rank == 7);
}

TEST_CASE("rigid cycles of the knight-slope pairs") {
    Board sq = unit_square();
    auto cycles = find_rigid_cycles(sq, make_move(1, 2), make_move(2, -1), 8);
    REQUIRE(cycles.size() >= 1);
    std::vector<Point> diamond = {pt(0, 1, 1, 3), pt(1, 3, 1, 1), pt(1, 1, 2, 3),
                                  pt(2, 3, 0, 1)};
    bool found = std::any_of(cycles.begin(), cycles.end(),
                             [&](const RigidCycle& c) { return c.points == diamond; });
    CHECK(found);

    auto mirrored = find_rigid_cycles(sq, make_move(2, 1), make_move(1, -2), 8);
    std::vector<Point> diamond2 = {pt(0, 1, 2, 3), pt(2, 3, 1, 1), pt(1, 1, 1, 3),
                                   pt(1, 3, 0, 1)};
    CHECK(std::any_of(mirrored.begin(), mirrored.end(),
                      [&](const RigidCycle& c) { return c.points == diamond2; }));

    // length cap respected: the diamond needs four points
    CHECK(find_rigid_cycles(sq, make_move(1, 2), make_move(2, -1), 3).empty());

    // every reported cycle: corner-free, boundary, alternation, even length
    for (const RigidCycle& c : cycles) {
        CHECK(c.points.size() % 2 == 0);
        CHECK(c.points.size() >= 4);
        for (const Point& p : c.points) {
            CHECK(on_boundary(sq, p));
            CHECK(edges_containing(sq, p).size() == 1);
        }
        for (std::size_t s = 0; s < c.points.size(); ++s) {
            const Point& a = c.points[s];
            const Point& bp = c.points[(s + 1) % c.points.size()];
            const Move& m = s % 2 == 0 ? c.m1 : c.m2;
            CHECK((bp.x - a.x) * m.d == (bp.y - a.y) * m.c);
        }
    }
}

TEST_CASE("crossing points") {
    Board sq = unit_square();

    // the two bishop diagonals cross in the center
    Trajectory d1, d2;
    d1.m1 = d2.m1 = make_move(1, 1);
    d1.m2 = d2.m2 = make_move(1, -1);
    d1.start_move = 0;
    d1.points = {pt(0, 1, 0, 1), pt(1, 1, 1, 1)};
    d2.start_move = 1;
    d2.points = {pt(1, 1, 0, 1), pt(0, 1, 1, 1)};
    auto cps = crossing_points(sq, d1, d2);
    REQUIRE(cps.size() == 1);
    CHECK(cps[0].point == pt(1, 2, 1, 2));
    CHECK(cps[0].l1 == 1);
    CHECK(cps[0].l2 == 1);

    // (1,0) & (13,4): the zigzags from (0,0) and (1,1) cross at x = 1/4
    auto ts = maximal_corner_trajectories(sq, make_move(1, 0), make_move(13, 4));
    const Trajectory* T = find_start(ts, pt(0, 1, 0, 1), 8);
    const Trajectory* Tp = find_start(ts, pt(1, 1, 1, 1), 8);
    REQUIRE(T != nullptr);
    REQUIRE(Tp != nullptr);
    auto cross = crossing_points(sq, *T, *Tp);
    CHECK_FALSE(cross.empty());
    bool quarter = false;
    for (const CrossingPoint& cp : cross) {
        CHECK(in_board(sq, cp.point));
        CHECK_FALSE(on_boundary(sq, cp.point));
        if (cp.point == pt(1, 4, 9, 13)) {
            quarter = true;
            CHECK(cp.l1 == 5);
            CHECK(cp.l2 == 2);
        }
        CHECK(denom({cp.point}) == 52);
    }
    CHECK(quarter);

    // (1,0) & (2,5): no pair of corner trajectories crosses
    auto short_ts = maximal_corner_trajectories(sq, make_move(1, 0), make_move(2, 5));
    for (std::size_t i = 0; i < short_ts.size(); ++i)
        for (std::size_t j = i; j < short_ts.size(); ++j)
            CHECK(crossing_points(sq, short_ts[i], short_ts[j]).empty());

    // synthetic bowtie: a polyline whose third segment crosses its first
    Trajectory bow;
    bow.m1 = make_move(1, 0);
    bow.m2 = make_move(2, 1);
    bow.points = {pt(0, 1, 0, 1), pt(1, 1, 1, 2), pt(1, 4, 1, 1), pt(1, 8, 0, 1)};
    auto self = crossing_points(sq, bow, bow);
    REQUIRE(self.size() == 1);
    CHECK(self[0].point == pt(2, 15, 1, 15));
    CHECK(self[0].l1 == 1);
    CHECK(self[0].l2 == 3);
}

TEST_CASE("two-move denominators via trajectories") {
    Board sq = unit_square();
    Move h = make_move(1, 0);

    CHECK(arvind_denominator(sq, h, make_move(13, 4), 7) == 13);
    CHECK(arvind_denominator(sq, h, make_move(13, 4), 8) == 52);
    CHECK(arvind_denominator(sq, h, make_move(1, 1), 6) == 1);
    CHECK(arvind_denominator(sq, make_move(1, 1), make_move(1, -1), 2) == 1);
    CHECK(arvind_denominator(sq, make_move(1, 1), make_move(1, -1), 3) == 2);
    CHECK(arvind_denominator(sq, h, make_move(2, 5), 1) == 1);
    for (int q = 2; q <= 4; ++q) CHECK(arvind_denominator(sq, h, make_move(2, 5), q) == 5);

    // knight-slope pairs, frozen against the independent vertex enumeration
    CHECK(arvind_denominator(sq, make_move(2, 1), make_move(1, 2), 4) == 24);
    CHECK(arvind_denominator(sq, make_move(1, 2), make_move(2, -1), 4) == 120);
    CHECK(polytope_denominator(make_piece({make_move(2, 1), make_move(1, 2)}), 4).D == 24);
}

TEST_CASE("denominator is divisibility-monotone in q") {
    Board sq = unit_square();
    const std::vector<std::pair<Move, Move>> pairs = {
        {make_move(1, 0), make_move(13, 4)},
        {make_move(1, 0), make_move(3, 2)},
        {make_move(1, 2), make_move(2, -1)},
        {make_move(1, 1), make_move(1, -1)},
    };
    for (const auto& [a, b] : pairs) {
        Int prev = 1;
        for (int q = 1; q <= 8; ++q) {
            Int d = arvind_denominator(sq, a, b, q);
            CHECK(d % prev == 0);
            prev = d;
        }
    }
}

TEST_CASE("validation") {
    Board sq = unit_square();
    CHECK_THROWS_AS(arvind_denominator(sq, make_move(1, 1), make_move(2, 2), 3),
                    ValidationError);
    CHECK_THROWS_AS(arvind_denominator(sq, make_move(1, 0), make_move(2, 1), 0),
                    ValidationError);
    CHECK_THROWS_AS(find_rigid_cycles(sq, make_move(1, 0), make_move(2, 1), 2),
                    ValidationError);
}
