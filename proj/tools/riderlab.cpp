// riderlab: exact-arithmetic laboratory for nonattacking rider placements.
//
// Subcommands: count, period, vertices, denominator, trajectory, construct,
// verify, render.  Output is deterministic JSON (sorted keys; exact rationals
// as "num/den" strings; potentially big integers as strings), CSV, or SVG.
// Exit codes: 0 success, 2 validation error, 3 budget exceeded.

#include "riderlab/closed_forms.hpp"
#include "riderlab/counting.hpp"
#include "riderlab/errors.hpp"
#include "riderlab/fibonacci.hpp"
#include "riderlab/geometry.hpp"
#include "riderlab/quasipoly.hpp"
#include "riderlab/svg.hpp"
#include "riderlab/trajectory.hpp"
#include "riderlab/vertices.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

using json = nlohmann::json;
using namespace riderlab;

namespace {

json j_int(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json j_rat(const Rat& r) { return rat_to_string(r); }

json j_config(const Config& cfg) {
    json arr = json::array();
    for (const Point& p : cfg) arr.push_back(json::array({j_rat(p.x), j_rat(p.y)}));
    return arr;
}

json j_integral_config(const Config& cfg) {
    json arr = json::array();
    for (const Point& p : cfg) arr.push_back(json::array({j_int(num(p.x)), j_int(num(p.y))}));
    return arr;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

Piece parse_piece(const std::string& s) {
    // catalog names never contain move syntax
    if (s.find_first_of(";,/") != std::string::npos) {
        std::vector<Move> moves;
        for (const std::string& tok : split(s, ';'))
            if (!tok.empty()) moves.push_back(parse_move(tok));
        return make_piece(std::move(moves));
    }
    return piece_by_name(s);
}

std::array<Move, 4> parse_assignment(const std::string& s) {
    std::vector<std::string> toks = split(s, ',');
    if (toks.size() != 4)
        throw ValidationError("assignment must list exactly four moves (slope form d/c)");
    std::array<Move, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = parse_move(toks[i]);
    return out;
}

std::array<long long, 2> parse_col(const std::string& s) {
    std::vector<std::string> toks = split(s, ',');
    if (toks.size() != 2) throw ValidationError("map column must be two integers \"a,b\"");
    try {
        return {std::stoll(toks[0]), std::stoll(toks[1])};
    } catch (const std::exception&) {
        throw ValidationError("malformed map column '" + s + "'");
    }
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("cannot open output file " + tmp.string());
        out << content;
        if (!out) throw ValidationError("failed writing " + tmp.string());
    }
    fs::rename(tmp, target);
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_atomic(out_path, content);
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

struct VerifyCheck {
    std::string name;
    bool ok;
    std::string detail;
};

void check(std::vector<VerifyCheck>& checks, const std::string& name, bool ok,
           const std::string& detail = "") {
    checks.push_back({name, ok, detail});
}

std::vector<VerifyCheck> run_paper_suite() {
    std::vector<VerifyCheck> checks;
    Board sq = unit_square();

    // Counting spot values.
    check(checks, "count queen q=2 n=4 == 44",
          count_unlabeled(piece_by_name("queen"), 2, 4) == 44);
    check(checks, "count queen q=8 n=8 == 92",
          count_unlabeled(piece_by_name("queen"), 8, 8) == 92);

    // One-move law: enumeration == closed form == max(|c|,|d|) (q=2).
    {
        bool ok = true;
        std::string detail;
        for (long long c = 0; c <= 3 && ok; ++c)
            for (long long d = -3; d <= 3 && ok; ++d) {
                if (c == 0 && d <= 0) continue;
                if (std::gcd(c, std::abs(d)) != 1) continue;
                Move m = make_move(c, d);
                Int expect = std::max(std::abs(m.c), std::abs(m.d));
                Int closed = one_move_denominator(sq, m, 2);
                Int enumd = polytope_denominator(make_piece({m}), 2).D;
                if (closed != expect || enumd != expect) {
                    ok = false;
                    detail = "move " + move_slope(m);
                }
            }
        check(checks, "one-move law (entries <= 3, q=2)", ok, detail);
    }

    // Two-move law: closed form == trajectories == enumeration.
    {
        bool ok = true;
        std::string detail;
        for (long long c = 1; c <= 3 && ok; ++c)
            for (long long d = 1; d <= 3 && ok; ++d) {
                if (std::gcd(c, d) != 1) continue;
                Move m1 = make_move(1, 0), m2 = make_move(c, d);
                for (int q = 1; q <= 3 && ok; ++q) {
                    Int closed = two_move_horizontal_denominator(c, d, q);
                    Int arv = arvind_denominator(sq, m1, m2, q);
                    Int enumd = polytope_denominator(make_piece({m1, m2}), q).D;
                    if (closed != arv || arv != enumd) {
                        ok = false;
                        detail = "(" + std::to_string(c) + "," + std::to_string(d) +
                                 ") q=" + std::to_string(q);
                    }
                }
            }
        check(checks, "two-move law (c,d <= 3, q <= 3)", ok, detail);
    }

    // Triangle denominators.
    check(checks, "triangle ((2,-1),(2,1),(1,2)) == 10",
          triangle_denominator(make_move(2, -1), make_move(2, 1), make_move(1, 2)) == 10);
    check(checks, "triangle ((1,2),(3,1),(4,3)) == 4",
          triangle_denominator(make_move(1, 2), make_move(3, 1), make_move(4, 3)) == 4);

    // Golden parallelograms of the three-move partial nightrider.
    {
        Piece pn = piece_by_name("three-move-partial-nightrider");
        std::vector<Int> deltas;
        bool verts = true;
        for (const LinearMap& map :
             parallelogram_maps(pn.moves[0], pn.moves[1], pn.moves[2])) {
            ScaledConfig sc = golden_parallelogram(pn, map, 13);
            deltas.push_back(sc.delta);
            if (!is_vertex(pn, 13, sc.unit())) verts = false;
        }
        std::sort(deltas.begin(), deltas.end());
        std::vector<Int> expect = {110, 125, 139, 152, 158, 172};
        check(checks, "six pnight parallelograms q=13 deltas", deltas == expect);
        check(checks, "six pnight parallelograms q=13 are vertices", verts);
    }

    // Spirals.
    {
        ScaledConfig sp = fibonacci_spiral_queens(8);
        check(checks, "queens spiral q=8 delta == 21",
              sp.delta == 21 && is_vertex(piece_by_name("queen"), 8, sp.unit()));
        Piece night = piece_by_name("nightrider");
        std::array<Move, 4> spiral_roles = {make_move(2, 1), make_move(1, -2),
                                            make_move(1, 2), make_move(2, -1)};
        std::array<Move, 4> kite_roles = {make_move(1, -2), make_move(2, 1),
                                          make_move(1, 2), make_move(2, -1)};
        check(checks, "twisted nightrider q=5,6 deltas 286,1585",
              twisted_spiral(night, spiral_roles, 5).delta == 286 &&
                  twisted_spiral(night, spiral_roles, 6).delta == 1585);
        check(checks, "expanding kite q=5 delta 346",
              twisted_spiral(night, kite_roles, 5).delta == 346);
    }

    // Nightrider vertex spectrum at q=3.
    {
        DenominatorSpectrum ds = polytope_denominator(piece_by_name("nightrider"), 3);
        std::vector<Int> expect = {1, 2, 3, 4, 5, 10};
        check(checks, "nightrider q=3 spectrum {1,2,3,4,5,10}, D=60",
              ds.spectrum == expect && ds.D == 60);
    }
    return checks;
}

std::vector<VerifyCheck> run_catalog_suite(const std::string& path) {
    std::vector<VerifyCheck> checks;
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open catalog file " + path);
    json doc = json::parse(in);
    check(checks, "catalog version 1", doc.value("version", 0) == 1);
    const auto& pieces = doc.at("pieces");
    check(checks, "catalog size matches",
          pieces.size() == catalog_names().size());
    for (const auto& entry : pieces) {
        std::string name = entry.at("name").get<std::string>();
        std::vector<Move> moves;
        for (const auto& mv : entry.at("moves"))
            moves.push_back(make_move(mv.at(0).get<long long>(), mv.at(1).get<long long>()));
        bool ok = true;
        std::string detail;
        try {
            Piece p = piece_by_name(name);
            if (p.moves != make_piece(moves).moves) {
                ok = false;
                detail = "move set differs";
            }
            if (!entry.at("alias").is_null()) {
                Piece pa = piece_by_name(entry.at("alias").get<std::string>());
                if (!(pa == p)) {
                    ok = false;
                    detail = "alias resolves differently";
                }
            }
        } catch (const ValidationError& e) {
            ok = false;
            detail = e.what();
        }
        check(checks, "catalog entry " + name, ok, detail);
    }
    return checks;
}

struct ConstructArgs {
    std::string kind;
    std::string piece;
    int q = 0;
    std::string assignment;
    std::string map_col_x, map_col_y;
};

// Shared by `construct` and `render`: builds the configuration plus the piece
// it belongs to.
std::pair<Piece, ScaledConfig> build_construction(const ConstructArgs& a) {
    if (a.kind == "golden-rectangle") {
        return {piece_by_name("semiqueen"), golden_rectangle(a.q)};
    }
    if (a.kind == "spiral") {
        return {piece_by_name("queen"), fibonacci_spiral_queens(a.q)};
    }
    if (a.kind == "golden-parallelogram") {
        if (a.piece.empty() || a.map_col_x.empty() || a.map_col_y.empty())
            throw ValidationError("golden-parallelogram needs --piece, --map-col-x, "
                                  "--map-col-y");
        Piece p = parse_piece(a.piece);
        LinearMap map{parse_col(a.map_col_x), parse_col(a.map_col_y)};
        return {p, golden_parallelogram(p, map, a.q)};
    }
    if (a.kind == "twisted-spiral") {
        if (a.piece.empty() || a.assignment.empty())
            throw ValidationError("twisted-spiral needs --piece and --assignment");
        Piece p = parse_piece(a.piece);
        return {p, twisted_spiral(p, parse_assignment(a.assignment), a.q)};
    }
    throw ValidationError("unknown construction kind '" + a.kind + "'");
}

void apply_threads(int threads_flag) {
#ifdef _OPENMP
    int n = threads_flag;
    if (n <= 0) {
        if (const char* env = std::getenv("RIDERLAB_THREADS")) n = std::atoi(env);
    }
    if (n > 0) omp_set_num_threads(n);
#else
    (void)threads_flag;
#endif
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"riderlab: exact nonattacking-rider laboratory"};
    app.require_subcommand(1);

    std::string piece_str, out_path, format = "json";
    int q = 1, n = 0, n_max = 0, p_max = 0, threads = 0;
    std::uint64_t budget = EnumerationOptions{}.budget;
    bool serial = false, allow_large_q = false;

    auto add_common = [&](CLI::App* sub, bool with_piece = true) {
        if (with_piece)
            sub->add_option("--piece", piece_str,
                            "catalog name or explicit move list \"c,d;c,d;...\"");
        sub->add_option("--out", out_path, "write output to this file (atomic)");
        sub->add_option("--threads", threads, "parallelism degree (default: all cores)");
    };

    CLI::App* c_count = app.add_subcommand("count", "nonattacking placement counts");
    add_common(c_count);
    c_count->add_option("--q", q, "number of pieces")->required();
    c_count->add_option("--n", n, "board size (single count)");
    c_count->add_option("--n-max", n_max, "count for n = 1..n-max");
    c_count->add_option("--format", format, "json or csv");

    CLI::App* c_period = app.add_subcommand("period", "quasipolynomial period detection");
    add_common(c_period);
    c_period->add_option("--q", q)->required();
    c_period->add_option("--n-max", n_max, "table length to fit against")->required();
    c_period->add_option("--p-max", p_max, "largest period to try");

    CLI::App* c_vertices = app.add_subcommand("vertices", "inside-out polytope vertices");
    add_common(c_vertices);
    c_vertices->add_option("--q", q)->required();
    c_vertices->add_option("--budget", budget, "max solved systems");
    c_vertices->add_flag("--serial", serial, "use the serial reference enumerator");
    c_vertices->add_flag("--allow-large-q", allow_large_q,
                         "override the q <= 4 feasibility guard");

    CLI::App* c_denom = app.add_subcommand("denominator", "vertex denominator spectrum");
    add_common(c_denom);
    c_denom->add_option("--q", q)->required();
    c_denom->add_option("--budget", budget, "max solved systems");
    c_denom->add_flag("--allow-large-q", allow_large_q,
                      "override the q <= 4 feasibility guard");

    std::string m1_str, m2_str;
    std::size_t max_points = 64;
    CLI::App* c_traj = app.add_subcommand("trajectory", "two-move trajectories and "
                                                        "denominator");
    add_common(c_traj, false);
    c_traj->add_option("--m1", m1_str, "first move (d/c or c,d)")->required();
    c_traj->add_option("--m2", m2_str, "second move")->required();
    c_traj->add_option("--q", q, "compute the two-move denominator for q pieces");
    c_traj->add_option("--max-points", max_points, "cap on trajectory points");

    ConstructArgs cargs;
    CLI::App* c_construct = app.add_subcommand("construct", "Fibonacci-style vertex "
                                                            "constructions");
    add_common(c_construct);
    c_construct
        ->add_option("--kind", cargs.kind,
                     "golden-rectangle | golden-parallelogram | spiral | twisted-spiral "
                     "| bound-check")
        ->required();
    c_construct->add_option("--q", q)->required();
    c_construct->add_option("--assignment", cargs.assignment,
                            "four moves (slope form), e.g. 1/2,-2/1,2/1,-1/2");
    c_construct->add_option("--map-col-x", cargs.map_col_x, "image of (1,0), e.g. 10,5");
    c_construct->add_option("--map-col-y", cargs.map_col_y, "image of (0,1), e.g. 6,-3");

    std::string suite = "paper", catalog_path = "data/pieces.json";
    CLI::App* c_verify = app.add_subcommand("verify", "cross-validation batteries");
    add_common(c_verify, false);
    c_verify->add_option("--suite", suite, "paper | catalog");
    c_verify->add_option("--catalog", catalog_path, "piece catalog file to check");

    CLI::App* c_render = app.add_subcommand("render", "render a construction as SVG");
    add_common(c_render);
    c_render->add_option("--kind", cargs.kind, "construction kind (as in construct)")
        ->required();
    c_render->add_option("--q", q)->required();
    c_render->add_option("--assignment", cargs.assignment);
    c_render->add_option("--map-col-x", cargs.map_col_x);
    c_render->add_option("--map-col-y", cargs.map_col_y);

    try {
        app.parse(argc, argv);
        apply_threads(threads);

        if (*c_count) {
            Piece p = parse_piece(piece_str);
            if (n <= 0 && n_max <= 0)
                throw ValidationError("count: pass --n or --n-max");
            if (format != "json" && format != "csv")
                throw ValidationError("count: --format must be json or csv");
            if (n > 0) {
                json j;
                j["count"] = count_unlabeled(p, q, n).str();
                emit_json(j, out_path);
            } else {
                CountTable table = count_table(p, q, n_max);
                if (format == "csv") {
                    std::ostringstream csv;
                    csv << "n,count\n";
                    for (int i = 1; i <= n_max; ++i) csv << i << "," << table.at(i) << "\n";
                    emit(csv.str(), out_path);
                } else {
                    json j;
                    json counts = json::array();
                    for (int i = 1; i <= n_max; ++i) counts.push_back(table.at(i).str());
                    j["counts"] = counts;
                    emit_json(j, out_path);
                }
            }
        } else if (*c_period) {
            Piece p = parse_piece(piece_str);
            CountTable table = count_table(p, q, n_max);
            int cap = p_max > 0 ? p_max : n_max / (2 * q + 2);
            PeriodResult pr = detect_period(table, 2 * q, cap);
            json j;
            j["degree"] = 2 * q;
            j["period"] = pr.period;
            json cons = json::array();
            for (const Polynomial& c : pr.quasipoly.constituents) {
                json coeffs = json::array();
                for (const Rat& r : c.coeffs) coeffs.push_back(j_rat(r));
                cons.push_back(coeffs);
            }
            j["constituents"] = cons;
            emit_json(j, out_path);
        } else if (*c_vertices) {
            Piece p = parse_piece(piece_str);
            EnumerationOptions opt;
            opt.budget = budget;
            if (allow_large_q) opt.q_guard = q;
            std::vector<Vertex> verts =
                serial ? enumerate_vertices_serial(p, q, opt) : enumerate_vertices(p, q, opt);
            json j;
            j["count"] = verts.size();
            json arr = json::array();
            Int D = 1;
            for (const Vertex& v : verts) {
                json jv;
                jv["config"] = j_config(v.config);
                jv["delta"] = j_int(v.delta);
                json basis = json::array();
                for (const Constraint& c : v.basis) basis.push_back(c.label());
                jv["basis"] = basis;
                arr.push_back(jv);
                D = lcm_int(D, v.delta);
            }
            j["vertices"] = arr;
            j["D"] = j_int(D);
            emit_json(j, out_path);
        } else if (*c_denom) {
            Piece p = parse_piece(piece_str);
            EnumerationOptions opt;
            opt.budget = budget;
            if (allow_large_q) opt.q_guard = q;
            DenominatorSpectrum ds = polytope_denominator(p, q, opt);
            json j;
            j["D"] = j_int(ds.D);
            json spec = json::array();
            for (const Int& d : ds.spectrum) spec.push_back(j_int(d));
            j["spectrum"] = spec;
            emit_json(j, out_path);
        } else if (*c_traj) {
            Move m1 = parse_move(m1_str);
            Move m2 = parse_move(m2_str);
            Board sq = unit_square();
            json j;
            json trajs = json::array();
            for (const Trajectory& t : maximal_corner_trajectories(sq, m1, m2, max_points)) {
                json jt;
                jt["points"] = j_config(t.points);
                jt["start_move"] = t.start_move;
                jt["maximal"] = t.maximal;
                trajs.push_back(jt);
            }
            j["trajectories"] = trajs;
            json cycles = json::array();
            std::size_t cycle_cap = q > 3 ? static_cast<std::size_t>(q) : 8;
            for (const RigidCycle& rc : find_rigid_cycles(sq, m1, m2, cycle_cap)) {
                json jc;
                jc["points"] = j_config(rc.points);
                cycles.push_back(jc);
            }
            j["rigid_cycles"] = cycles;
            j["moves"] = json::array({move_slope(m1), move_slope(m2)});
            if (c_traj->count("--q"))
                j["denominator"] = j_int(arvind_denominator(sq, m1, m2, q));
            emit_json(j, out_path);
        } else if (*c_construct) {
            if (cargs.kind == "bound-check") {
                if (piece_str.empty())
                    throw ValidationError("bound-check needs --piece");
                LowerBoundCheck lb = exp_lower_bound_check(parse_piece(piece_str), q);
                json j;
                j["bound"] = j_int(lb.bound);
                j["construction_delta"] = j_int(lb.construction_delta);
                j["holds"] = lb.holds;
                emit_json(j, out_path);
            } else {
                cargs.piece = piece_str;
                cargs.q = q;
                auto [p, sc] = build_construction(cargs);
                json j;
                j["config"] = j_integral_config(sc.integral);
                j["denominator"] = j_int(sc.delta);
                j["is_vertex"] = is_vertex(p, q, sc.unit());
                j["piece"] = p.name.empty() ? "custom" : p.name;
                emit_json(j, out_path);
            }
        } else if (*c_verify) {
            std::vector<VerifyCheck> checks;
            if (suite == "paper")
                checks = run_paper_suite();
            else if (suite == "catalog")
                checks = run_catalog_suite(catalog_path);
            else
                throw ValidationError("unknown suite '" + suite + "'");
            json j;
            json arr = json::array();
            int failures = 0;
            for (const VerifyCheck& c : checks) {
                json jc;
                jc["name"] = c.name;
                jc["status"] = c.ok ? "ok" : "mismatch";
                if (!c.detail.empty()) jc["detail"] = c.detail;
                arr.push_back(jc);
                if (!c.ok) ++failures;
            }
            j["checks"] = arr;
            j["failures"] = failures;
            j["suite"] = suite;
            emit_json(j, out_path);
            if (failures > 0) return 1;
        } else if (*c_render) {
            cargs.piece = piece_str;
            cargs.q = q;
            auto [p, sc] = build_construction(cargs);
            emit(render_svg(p, sc.integral, sc.delta), out_path);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
