#include "ernst/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ernst {

namespace {

FieldRecord eval_node(const PotentialField& field, double f, double g) {
    const PotentialSample s = sample_at(field, f, g);
    const Residual r = ernst_residual(s, f, g);
    return {f, g, s.K.value, s.L.value, r.resK, r.resL};
}

}  // namespace

double GridSpec::f_at(int i) const { return f_min + (f_max - f_min) * double(i) / double(f_count - 1); }
double GridSpec::g_at(int j) const { return g_min + (g_max - g_min) * double(j) / double(g_count - 1); }

void validate(const GridSpec& grid) {
    if (grid.f_count < 2 || grid.g_count < 2)
        throw ValidationError("grid: counts must be at least 2 per axis");
    if (!(grid.f_min <= grid.f_max) || !(grid.g_min <= grid.g_max))
        throw ValidationError("grid: min bound exceeds max bound");
    if (!std::isfinite(grid.f_min) || !std::isfinite(grid.f_max) || !std::isfinite(grid.g_min) ||
        !std::isfinite(grid.g_max))
        throw ValidationError("grid: bounds must be finite");
}

std::vector<FieldRecord> sweep_serial(const PotentialField& field, const GridSpec& grid) {
    validate(grid);
    std::vector<FieldRecord> out(grid.size());
    for (int i = 0; i < grid.f_count; ++i) {
        const double f = grid.f_at(i);
        for (int j = 0; j < grid.g_count; ++j) {
            out[std::size_t(i) * grid.g_count + j] = eval_node(field, f, grid.g_at(j));
        }
    }
    return out;
}

int effective_thread_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("ERNSTLAB_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

std::vector<FieldRecord> sweep_parallel(const PotentialField& field, const GridSpec& grid) {
    validate(grid);
    std::vector<FieldRecord> out(grid.size());
    const long total = long(grid.size());

    // exceptions may not cross the parallel region; capture the first one
    std::atomic<bool> failed{false};
    std::string message;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(effective_thread_count())
#endif
    for (long idx = 0; idx < total; ++idx) {
        if (failed.load(std::memory_order_relaxed)) continue;
        const int i = int(idx / grid.g_count);
        const int j = int(idx % grid.g_count);
        try {
            out[idx] = eval_node(field, grid.f_at(i), grid.g_at(j));
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical(ernst_sweep_error)
#endif
            {
                if (!failed.exchange(true)) message = e.what();
            }
        }
    }

    if (failed) throw DomainError(message);
    return out;
}

SweepSummary summarize(const std::vector<FieldRecord>& records) {
    SweepSummary s;
    for (const FieldRecord& r : records) {
        s.max_abs_resK = std::max(s.max_abs_resK, std::abs(r.resK));
        s.max_abs_resL = std::max(s.max_abs_resL, std::abs(r.resL));
    }
    return s;
}

}  // namespace ernst
