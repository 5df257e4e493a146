// Benchmark: OpenMP kernels vs. their serial reference implementations.
//
// Two workloads are timed — nonattacking-placement counting and inside-out
// polytope vertex enumeration — and both variants are checked for exact
// agreement while we are at it.

#include "riderlab/counting.hpp"
#include "riderlab/geometry.hpp"
#include "riderlab/vertices.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace riderlab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_count(const std::string& name, int q, int n) {
    Piece p = piece_by_name(name);
    auto t0 = std::chrono::steady_clock::now();
    Int serial = count_unlabeled_serial(p, q, n);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    Int parallel = count_unlabeled(p, q, n);
    double tp = seconds_since(t0);
    std::printf("count      %-22s q=%-2d n=%-3d serial %8.3fs  parallel %8.3fs  "
                "speedup %5.2fx  %s\n",
                name.c_str(), q, n, ts, tp, tp > 0 ? ts / tp : 0.0,
                serial == parallel ? "agree" : "MISMATCH");
}

bool same_vertices(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].config != b[i].config || a[i].delta != b[i].delta) return false;
    return true;
}

void bench_vertices(const std::string& name, int q) {
    Piece p = piece_by_name(name);
    auto t0 = std::chrono::steady_clock::now();
    auto serial = enumerate_vertices_serial(p, q);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = enumerate_vertices(p, q);
    double tp = seconds_since(t0);
    std::printf("vertices   %-22s q=%-2d       serial %8.3fs  parallel %8.3fs  "
                "speedup %5.2fx  %s (%zu vertices)\n",
                name.c_str(), q, ts, tp, tp > 0 ? ts / tp : 0.0,
                same_vertices(serial, parallel) ? "agree" : "MISMATCH", parallel.size());
}

} // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both variants run serially\n");
#endif

    bench_count("queen", 6, 10);
    bench_count("nightrider", 5, 10);
    bench_vertices("anassa", 3);
    bench_vertices("bishop", 3);
    if (!quick) {
        bench_count("queen", 8, 12);
        bench_vertices("nightrider", 3);
        bench_vertices("semiqueen", 4);
    }
    return 0;
}
