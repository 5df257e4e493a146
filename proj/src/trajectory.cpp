#include "riderlab/trajectory.hpp"
#include "riderlab/errors.hpp"

#include <algorithm>
#include <map>
#include <variant>

namespace riderlab {

namespace {

long long cross_mm(const Move& a, const Move& b) { return a.c * b.d - a.d * b.c; }

Rat cross_pp(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

bool points_equal(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

bool point_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// True when p sits on a board edge parallel to m.
bool on_parallel_edge(const Board& b, const Point& p, const Move& m) {
    for (std::size_t e : edges_containing(b, p))
        if (edge_parallel(b, e, m)) return true;
    return false;
}

void require_transversal_pair(const Move& m1, const Move& m2, const char* who) {
    if (cross_mm(m1, m2) == 0)
        throw ValidationError(std::string(who) + ": the two moves must not be parallel");
}

} // namespace

Trajectory extend_trajectory(const Board& b, const Trajectory& t) {
    if (t.points.empty()) throw ValidationError("extend_trajectory: empty trajectory");
    if (t.maximal) return t;
    Trajectory out = t;
    const Move& mv = t.move_for_step(t.length() - 1);
    Point e = boundary_exit(b, t.points.back(), mv);
    if (points_equal(e, t.points.back())) {
        // The exit line leaves the board immediately: forced stop, nothing appended.
        out.maximal = true;
        return out;
    }
    out.points.push_back(e);
    if (points_equal(e, out.points.front()) || on_parallel_edge(b, e, out.m1) ||
        on_parallel_edge(b, e, out.m2))
        out.maximal = true;
    return out;
}

std::vector<Trajectory> maximal_corner_trajectories(const Board& b, const Move& m1,
                                                    const Move& m2,
                                                    std::size_t max_points) {
    require_transversal_pair(m1, m2, "maximal_corner_trajectories");
    if (max_points < 1) throw ValidationError("maximal_corner_trajectories: max_points >= 1");
    std::vector<Trajectory> out;
    for (const Point& corner : b.corners)
        for (int sm = 0; sm <= 1; ++sm) {
            Trajectory t;
            t.points = {corner};
            t.m1 = m1;
            t.m2 = m2;
            t.start_move = sm;
            while (!t.maximal && t.length() < max_points) t = extend_trajectory(b, t);
            out.push_back(std::move(t));
        }
    return out;
}

namespace {

struct EdgeLine {
    // a*x + b*y = rhs, with direction dir.
    Rat a, b, rhs;
    Point dir;
};

bool cycle_seq_less(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!points_equal(a[i], b[i])) return point_less(a[i], b[i]);
    }
    return false;
}

} // namespace

std::vector<RigidCycle> find_rigid_cycles(const Board& b, const Move& m1, const Move& m2,
                                          std::size_t max_len) {
    require_transversal_pair(m1, m2, "find_rigid_cycles");
    if (max_len < 3) throw ValidationError("find_rigid_cycles: max_len must be >= 3");

    // Usable edges: a cycle point on an edge parallel to a move would be a
    // forced stop, so such edges carry no cycle points.
    std::vector<EdgeLine> edges;
    const std::size_t nc = b.corners.size();
    for (std::size_t i = 0; i < nc; ++i) {
        const Point& A = b.corners[i];
        const Point& B = b.corners[(i + 1) % nc];
        Point dir{B.x - A.x, B.y - A.y};
        if (dir.x * Rat(m1.d) - dir.y * Rat(m1.c) == 0) continue;
        if (dir.x * Rat(m2.d) - dir.y * Rat(m2.c) == 0) continue;
        EdgeLine e;
        e.dir = dir;
        e.a = dir.y;
        e.b = -dir.x;
        e.rhs = dir.y * A.x - dir.x * A.y;
        edges.push_back(e);
    }
    std::vector<RigidCycle> found;
    std::vector<std::vector<Point>> seen_sets;
    if (edges.size() < 2) return found;

    for (std::size_t L = 4; L <= max_len; L += 2) {
        std::vector<std::size_t> assign(L, 0);
        // Enumerate edge assignments with cyclically-distinct neighbours.
        std::size_t k = 0;
        while (true) {
            if (k == L) {
                bool ok = assign[L - 1] != assign[0];
                for (std::size_t i = 0; ok && i + 1 < L; ++i)
                    if (assign[i] == assign[i + 1]) ok = false;
                if (ok) {
                    // 2L equations in (x_1, y_1, ..., x_L, y_L).
                    RatMatrix A(2 * L, 2 * L);
                    std::vector<Rat> rhs(2 * L, Rat(0));
                    for (std::size_t s = 0; s < L; ++s) {
                        const Move& mv = (s % 2 == 0) ? m1 : m2;
                        std::size_t nxt = (s + 1) % L;
                        A.at(s, 2 * s) -= mv.d;
                        A.at(s, 2 * s + 1) += mv.c;
                        A.at(s, 2 * nxt) += mv.d;
                        A.at(s, 2 * nxt + 1) -= mv.c;
                        const EdgeLine& e = edges[assign[s]];
                        A.at(L + s, 2 * s) = e.a;
                        A.at(L + s, 2 * s + 1) = e.b;
                        rhs[L + s] = e.rhs;
                    }
                    SolveResult res = solve_exact(A, rhs);
                    if (const auto* u = std::get_if<SolveUnique>(&res)) {
                        std::vector<Point> pts(L);
                        for (std::size_t s = 0; s < L; ++s)
                            pts[s] = Point{u->x[2 * s], u->x[2 * s + 1]};
                        bool good = true;
                        for (std::size_t s = 0; good && s < L; ++s) {
                            if (!in_board(b, pts[s])) good = false;
                            for (const Point& c : b.corners)
                                if (points_equal(pts[s], c)) good = false;
                            for (std::size_t t2 = s + 1; good && t2 < L; ++t2)
                                if (points_equal(pts[s], pts[t2])) good = false;
                        }
                        if (good) {
                            std::vector<Point> key = pts;
                            std::sort(key.begin(), key.end(), point_less);
                            bool dup = false;
                            for (const auto& s : seen_sets)
                                if (s.size() == key.size() &&
                                    std::equal(s.begin(), s.end(), key.begin(),
                                               points_equal))
                                    dup = true;
                            if (!dup) {
                                seen_sets.push_back(key);
                                // Canonical representative: the lexicographically
                                // least even rotation (odd ones would swap the
                                // move roles).
                                // Canonical representative: the move roles
                                // survive even rotations and full reversal
                                // (L is even), so take the lexicographically
                                // least sequence over all of those.
                                std::vector<Point> best = pts;
                                std::vector<Point> rev(pts.rbegin(), pts.rend());
                                for (const std::vector<Point>* base : {&pts, &rev})
                                    for (std::size_t r = 0; r < L; r += 2) {
                                        std::vector<Point> cand(base->begin() + r,
                                                                base->end());
                                        cand.insert(cand.end(), base->begin(),
                                                    base->begin() + r);
                                        if (cycle_seq_less(cand, best)) best = cand;
                                    }
                                RigidCycle rc;
                                rc.points = std::move(best);
                                rc.m1 = m1;
                                rc.m2 = m2;
                                found.push_back(std::move(rc));
                            }
                        }
                    }
                }
                // Backtrack.
                while (k > 0 && assign[k - 1] + 1 == edges.size()) --k;
                if (k == 0) break;
                ++assign[k - 1];
                for (std::size_t i = k; i < L; ++i) assign[i] = 0;
                continue;
            }
            ++k;
        }
    }
    std::sort(found.begin(), found.end(), [](const RigidCycle& a, const RigidCycle& c) {
        return cycle_seq_less(a.points, c.points);
    });
    return found;
}

namespace {

bool same_trajectory(const Trajectory& a, const Trajectory& b) {
    if (a.start_move != b.start_move || !(a.m1 == b.m1) || !(a.m2 == b.m2)) return false;
    if (a.points.size() != b.points.size()) return false;
    return std::equal(a.points.begin(), a.points.end(), b.points.begin(), points_equal);
}

// Transversal intersection strictly inside both segments; true on success.
bool segment_cross(const Point& p, const Point& q, const Point& r, const Point& s,
                   Point& out) {
    Point u{q.x - p.x, q.y - p.y};
    Point v{s.x - r.x, s.y - r.y};
    Rat den = cross_pp(u, v);
    if (den == 0) return false;
    Point w{r.x - p.x, r.y - p.y};
    Rat tt = cross_pp(w, v) / den;
    Rat uu = cross_pp(w, u) / den;
    if (tt <= 0 || tt >= 1 || uu <= 0 || uu >= 1) return false;
    out = Point{p.x + tt * u.x, p.y + tt * u.y};
    return true;
}

} // namespace

std::vector<CrossingPoint> crossing_points(const Board& b, const Trajectory& t1,
                                           const Trajectory& t2) {
    std::vector<CrossingPoint> out;
    const std::size_t n1 = t1.points.size();
    const std::size_t n2 = t2.points.size();
    if (n1 < 2 || n2 < 2) return out;
    const bool self = same_trajectory(t1, t2);
    for (std::size_t i = 0; i + 1 < n1; ++i) {
        std::size_t j0 = self ? i + 1 : 0;
        for (std::size_t j = j0; j + 1 < n2; ++j) {
            Point c;
            if (!segment_cross(t1.points[i], t1.points[i + 1], t2.points[j],
                               t2.points[j + 1], c))
                continue;
            if (!in_board(b, c) || on_boundary(b, c)) continue;
            CrossingPoint cp;
            cp.point = c;
            cp.l1 = i + 1;
            cp.l2 = j + 1;
            out.push_back(std::move(cp));
        }
    }
    return out;
}

Int arvind_denominator(const Board& b, const Move& m1, const Move& m2, int q) {
    require_transversal_pair(m1, m2, "arvind_denominator");
    if (q < 1) throw ValidationError("arvind_denominator: q must be >= 1");
    const std::size_t qs = static_cast<std::size_t>(q);

    std::vector<Trajectory> trajs =
        maximal_corner_trajectories(b, m1, m2, qs + 1);
    std::vector<RigidCycle> cycles;
    if (q >= 3) cycles = find_rigid_cycles(b, m1, m2, qs);

    Int D = 1;
    // (1) boundary points of corner trajectories of length <= q and of rigid
    //     cycles of length <= q.
    for (const Trajectory& t : trajs)
        for (std::size_t k = 0; k < t.points.size() && k < qs; ++k)
            D = lcm_int(D, point_denominator(t.points[k]));
    for (const RigidCycle& rc : cycles)
        for (const Point& p : rc.points) D = lcm_int(D, point_denominator(p));

    // (2) crossing points within the length budget.  A cycle counts with its
    //     full point count; a corner trajectory with the realizing segment
    //     index.
    std::vector<Trajectory> closed;
    closed.reserve(cycles.size());
    for (const RigidCycle& rc : cycles) {
        Trajectory ct;
        ct.points = rc.points;
        ct.points.push_back(rc.points.front());
        ct.m1 = m1;
        ct.m2 = m2;
        ct.start_move = 0;
        ct.maximal = true;
        closed.push_back(std::move(ct));
    }
    auto absorb = [&](const Point& p) { D = lcm_int(D, point_denominator(p)); };

    for (std::size_t i = 0; i < trajs.size(); ++i) {
        for (const CrossingPoint& cp : crossing_points(b, trajs[i], trajs[i]))
            if (cp.l2 + 1 <= qs) absorb(cp.point);
        for (std::size_t j = i + 1; j < trajs.size(); ++j)
            for (const CrossingPoint& cp : crossing_points(b, trajs[i], trajs[j]))
                if (cp.l1 + cp.l2 + 1 <= qs) absorb(cp.point);
        for (std::size_t j = 0; j < closed.size(); ++j) {
            std::size_t lc = cycles[j].points.size();
            for (const CrossingPoint& cp : crossing_points(b, trajs[i], closed[j]))
                if (cp.l1 + lc + 1 <= qs) absorb(cp.point);
        }
    }
    for (std::size_t i = 0; i < closed.size(); ++i) {
        std::size_t li = cycles[i].points.size();
        if (li + 1 <= qs)
            for (const CrossingPoint& cp : crossing_points(b, closed[i], closed[i]))
                absorb(cp.point);
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
            std::size_t lj = cycles[j].points.size();
            if (li + lj + 1 <= qs)
                for (const CrossingPoint& cp : crossing_points(b, closed[i], closed[j]))
                    absorb(cp.point);
        }
    }
    return D;
}

} // namespace riderlab
