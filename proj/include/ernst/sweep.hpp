#pragma once

#include <vector>

#include "ernst/potentials.hpp"

namespace ernst {

/// Rectangular evaluation grid; node (i, j) = (f_at(i), g_at(j)), records
/// are laid out row-major in f then g (index i * g_count + j).
struct GridSpec {
    double f_min = 0.0, f_max = 1.0;
    int f_count = 2;
    double g_min = 0.0, g_max = 1.0;
    int g_count = 2;

    double f_at(int i) const;
    double g_at(int j) const;
    std::size_t size() const { return std::size_t(f_count) * std::size_t(g_count); }

    bool operator==(const GridSpec&) const = default;
};

void validate(const GridSpec& grid);

/// One grid node: potential values and the Ernst residuals at that node.
struct FieldRecord {
    double f = 0.0, g = 0.0;
    double K = 0.0, L = 0.0;
    double resK = 0.0, resL = 0.0;

    bool operator==(const FieldRecord&) const = default;
};

/// Serial reference sweep. Kept as the ground truth the parallel kernel is
/// tested against; identical per-node arithmetic.
std::vector<FieldRecord> sweep_serial(const PotentialField& field, const GridSpec& grid);

/// OpenMP sweep over grid nodes. Each node writes its own slot, so the
/// output is deterministic and bitwise equal to the serial sweep.
std::vector<FieldRecord> sweep_parallel(const PotentialField& field, const GridSpec& grid);

struct SweepSummary {
    double max_abs_resK = 0.0;
    double max_abs_resL = 0.0;
};

/// Ordered reduction over the records (serial scan, thread-count independent).
SweepSummary summarize(const std::vector<FieldRecord>& records);

/// Threads used by the parallel sweep: the OpenMP default capped by the
/// ERNSTLAB_THREADS environment variable (ignored unless >= 1).
int effective_thread_count();

}  // namespace ernst
