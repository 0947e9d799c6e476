// Timing harness for the three exhaustive kernels that have both a serial
// reference implementation and an OpenMP one. Prints wall times and the
// speedup; also re-checks that both policies agree, since that equality is
// the whole point of keeping the reference around.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "kgk/examples.hpp"
#include "kgk/fiber.hpp"
#include "kgk/skew.hpp"

using namespace kgk;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename Fn>
double timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return seconds(t0, t1);
}

void row(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-28s %9.3fs %9.3fs %7.2fx  %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, agree ? "reports agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    long long loops = argc > 1 ? std::atoll(argv[1]) : 40;

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        GeneratedExample ex = generate_example("free_loops", {3, loops});
        KGraph g = KGraph::from_spec(ex.graph);
        HexagonReport rs, rp;
        double ts = timed([&] { rs = check_hexagon(g, Exec::serial); });
        double tp = timed([&] { rp = check_hexagon(g, Exec::parallel); });
        bool agree = rs.ok == rp.ok && rs.triples_checked == rp.triples_checked;
        row("hexagon (free_loops 3 L)", ts, tp, agree);
    }

    {
        GeneratedExample ex = generate_example("ex53", {97, 2, -101, 3});
        KGraph g = KGraph::from_spec(ex.graph);
        Weights w = Weights::from_raw(g, *ex.weights);
        FiberPermutation perm = solve_fiber_congruence(g, w, 0, 1);
        long long den = 400000;
        FiberLawReport rs, rp;
        double ts = timed([&] { rs = verify_fiber_laws(g, w, perm, den, Exec::serial); });
        double tp = timed([&] { rp = verify_fiber_laws(g, w, perm, den, Exec::parallel); });
        bool agree = rs.ok == rp.ok && rs.rows_checked == rp.rows_checked;
        row("fiber laws (den 400000)", ts, tp, agree);
    }

    {
        GeneratedExample ex = generate_example("qn", {3});
        KGraph g = KGraph::from_spec(ex.graph);
        Weights w = Weights::from_raw(g, *ex.weights);
        SkewHexagonReport rs, rp;
        double ts = timed([&] { rs = verify_skew_hexagon(g, w, Exec::serial); });
        double tp = timed([&] { rp = verify_skew_hexagon(g, w, Exec::parallel); });
        bool agree = rs.ok == rp.ok && rs.triples_checked == rp.triples_checked;
        row("lifted hexagon (qn 3)", ts, tp, agree);
    }

    return 0;
}
