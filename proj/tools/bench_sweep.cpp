// Benchmark: serial reference sweep vs the OpenMP sweep on a large grid.
// The two kernels must agree bitwise; the point of the run is the timing.

#include <chrono>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"

#include "ernst/sweep.hpp"
#include "ernst/transforms.hpp"

namespace {

double seconds_for(const std::function<std::vector<ernst::FieldRecord>()>& fn, int reps,
                   std::vector<ernst::FieldRecord>& last) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        last = fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sweep benchmark: serial reference vs OpenMP kernel"};
    int f_count = 1200, g_count = 1200, reps = 3;
    double eps = 0.3;
    app.add_option("--f-count", f_count, "grid nodes along f")->check(CLI::Range(2, 1 << 16));
    app.add_option("--g-count", g_count, "grid nodes along g")->check(CLI::Range(2, 1 << 16));
    app.add_option("--reps", reps, "repetitions (best-of)")->check(CLI::Range(1, 100));
    app.add_option("--epsilon", eps, "strength of the appended fractional-linear transform");
    CLI11_PARSE(app, argc, argv);

    const ernst::GridSpec grid{0.1, 2.0, f_count, 0.1, 2.0, g_count};
    // a transformed field so the kernel carries a realistic amount of work
    const ernst::PotentialField field =
        ernst::with_x5(eps, ernst::make_x1_field({1.0, 1.0, 0.0}));

    std::vector<ernst::FieldRecord> serial_out, parallel_out;
    const double t_serial =
        seconds_for([&] { return ernst::sweep_serial(field, grid); }, reps, serial_out);
    const double t_parallel =
        seconds_for([&] { return ernst::sweep_parallel(field, grid); }, reps, parallel_out);

    const bool identical = serial_out == parallel_out;
    const ernst::SweepSummary summary = ernst::summarize(parallel_out);

    std::printf("grid          : %d x %d (%zu nodes)\n", f_count, g_count, grid.size());
    std::printf("threads       : %d\n", ernst::effective_thread_count());
    std::printf("serial        : %.4f s\n", t_serial);
    std::printf("parallel      : %.4f s\n", t_parallel);
    std::printf("speedup       : %.2fx\n", t_serial / t_parallel);
    std::printf("bitwise equal : %s\n", identical ? "yes" : "NO");
    std::printf("max |resK|    : %.3e\n", summary.max_abs_resK);
    std::printf("max |resL|    : %.3e\n", summary.max_abs_resL);
    return identical ? 0 : 1;
}
