#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riderlab/errors.hpp"
#include "riderlab/vertices.hpp"

#include <algorithm>

using namespace riderlab;

namespace {

bool contains_config(const std::vector<Vertex>& vs, const Config& cfg) {
    return std::any_of(vs.begin(), vs.end(),
                       [&cfg](const Vertex& v) { return v.config == cfg; });
}

void check_invariants(const Piece& p, int q, const std::vector<Vertex>& vs) {
    for (const Vertex& v : vs) {
        CHECK(v.basis.size() == static_cast<std::size_t>(2 * q));
        CHECK(v.delta == denom(v.config));
        for (const Point& pt : v.config) {
            CHECK(pt.x >= 0);
            CHECK(pt.x <= 1);
            CHECK(pt.y >= 0);
            CHECK(pt.y <= 1);
        }
        CHECK(is_vertex(p, q, v.config));
    }
    // deduplicated
    for (std::size_t i = 1; i < vs.size(); ++i) CHECK_FALSE(vs[i].config == vs[i - 1].config);
}

} // namespace

TEST_CASE("constraint construction") {
    Piece night = piece_by_name("nightrider");
    auto cs = build_constraints(night, 3);
    // 4 moves * C(3,2) pairs + 2*2q cube faces
    CHECK(cs.size() == 4 * 3 + 12);
    CHECK_THROWS_AS(build_constraints(night, 0), ValidationError);
}

TEST_CASE("q=1: the four cube corners") {
    for (const std::string& name : {"queen", "semirook", "nightrider"}) {
        auto vs = enumerate_vertices(piece_by_name(name), 1);
        CHECK(vs.size() == 4);
        for (const Vertex& v : vs) CHECK(v.delta == 1);
    }
}

TEST_CASE("one-move (2,1) q=2 contains the corner/antipode vertex") {
    Piece p = make_piece({make_move(2, 1)});
    auto vs = enumerate_vertices(p, 2);
    Config expect = {Point{Rat(0), Rat(0)}, Point{Rat(1), Rat(1, 2)}};
    CHECK(contains_config(vs, expect));
    CHECK(polytope_denominator(p, 2).D == 2);
    check_invariants(p, 2, vs);
}

TEST_CASE("frozen enumerations") {
    struct Case {
        std::vector<Move> moves;
        int q;
        std::size_t count;
        std::vector<Int> spectrum;
        Int D;
    };
    const std::vector<Case> cases = {
        {piece_by_name("nightrider").moves, 3, 544, {1, 2, 3, 4, 5, 10}, 60},
        {piece_by_name("bishop").moves, 3, 88, {1, 2}, 2},
        {piece_by_name("anassa").moves, 3, 64, {1}, 1},
        {{make_move(1, 2), make_move(2, 1)}, 3, 208, {1, 2, 3, 4}, 12},
        {{make_move(1, 0), make_move(2, 1)}, 2, 20, {1, 2}, 2},
        {{make_move(1, 0), make_move(2, 5)}, 3, 112, {1, 5}, 5},
    };
    for (const Case& c : cases) {
        Piece p = make_piece(c.moves);
        auto vs = enumerate_vertices(p, c.q);
        CHECK(vs.size() == c.count);
        DenominatorSpectrum ds = polytope_denominator(p, c.q);
        CHECK(ds.spectrum == c.spectrum);
        CHECK(ds.D == c.D);
        check_invariants(p, c.q, vs);
    }
}

TEST_CASE("triangle configuration is a vertex") {
    Piece pn = piece_by_name("three-move-partial-nightrider");
    Config triangle = {Point{Rat(0), Rat(3, 10)}, Point{Rat(3, 5), Rat(0)},
                       Point{Rat(1), Rat(4, 5)}};
    std::vector<Constraint> basis;
    CHECK(is_vertex(pn, 3, triangle, &basis));
    CHECK(basis.size() == 6);
    auto vs = enumerate_vertices(pn, 3);
    CHECK(contains_config(vs, triangle));
    CHECK(denom(triangle) == 10);
}

TEST_CASE("is_vertex rejects non-vertices") {
    Piece queen = piece_by_name("queen");
    // interior point: nothing active
    Config center = {Point{Rat(1, 2), Rat(1, 3)}};
    CHECK_FALSE(is_vertex(queen, 1, center));
    // on a face but not a corner
    Config face = {Point{Rat(1, 2), Rat(0)}};
    CHECK_FALSE(is_vertex(queen, 1, face));
    // outside the cube
    Config outside = {Point{Rat(2), Rat(0)}};
    CHECK_FALSE(is_vertex(queen, 1, outside));
    // wrong size
    CHECK_THROWS_AS(is_vertex(queen, 2, center), ValidationError);
}

TEST_CASE("serial and parallel enumerators agree") {
    for (const auto& [name, q] : std::vector<std::pair<std::string, int>>{
             {"nightrider", 3}, {"bishop", 3}, {"semiqueen", 2}}) {
        Piece p = piece_by_name(name);
        auto a = enumerate_vertices(p, q);
        auto b = enumerate_vertices_serial(p, q);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].config == b[i].config);
            CHECK(a[i].delta == b[i].delta);
        }
    }
}

TEST_CASE("budget and feasibility guard") {
    Piece night = piece_by_name("nightrider");
    EnumerationOptions tight;
    tight.budget = 10;
    CHECK_THROWS_AS(enumerate_vertices(night, 3, tight), BudgetExceededError);
    CHECK_THROWS_AS(enumerate_vertices(piece_by_name("semirook"), 5), ValidationError);
    EnumerationOptions open;
    open.q_guard = 5;
    CHECK(polytope_denominator(piece_by_name("semirook"), 5, open).D == 1);
}

TEST_CASE("divisibility monotonicity probes") {
    Piece semiqueen = piece_by_name("semiqueen");
    Piece queen = piece_by_name("queen");
    MonotonicityReport r = monotonicity_check(semiqueen, queen, 2, 3);
    CHECK(r.q_divides);
    CHECK(r.piece_divides);
    CHECK_THROWS_AS(monotonicity_check(queen, semiqueen, 2, 3), ValidationError);
    CHECK_THROWS_AS(monotonicity_check(semiqueen, queen, 3, 2), ValidationError);
}
