#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ernst/rng.hpp"

#include "json.hpp"

namespace ernst {

/// One randomized check: `value` compared against `threshold` with the
/// stated comparison ("le" caps an error, "ge" demands separation).
struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    std::string comparison = "le";
    bool pass = false;
};

struct ReduceCheckReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<CheckResult> checks;
    bool pass = false;
};

/// Seeded sweep over the reduced-equation machinery: the off-shell
/// integrating-factor identity, the six-equation determining system (both
/// solution branches and a perturbed ansatz that must fail), the algebraic
/// identity tying the first integrals to the first-order equation, and the
/// quadrature reconstruction of the first integrals.
ReduceCheckReport run_reduction_checks(std::uint64_t seed, int trials);

nlohmann::json report_to_json(const ReduceCheckReport& report);

}  // namespace ernst
