#include "ernst/checks.hpp"

#include <algorithm>
#include <cmath>

#include "ernst/reduction.hpp"

namespace ernst {

namespace {

CheckResult upper_bound_check(std::string name, double value, double threshold) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.threshold = threshold;
    c.comparison = "le";
    c.pass = value <= threshold;
    return c;
}

CheckResult lower_bound_check(std::string name, double value, double threshold) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.threshold = threshold;
    c.comparison = "ge";
    c.pass = value >= threshold;
    return c;
}

// smooth trajectory bounded away from K = 0
Taylor3d random_trajectory(Rng& rng, double f) {
    const double a = rng.uniform(1.5, 2.5);
    const double b = rng.uniform(0.3, 0.8);
    const double c = rng.uniform(0.5, 1.5);
    const double d = rng.uniform(0.0, 6.283185307179586);
    const Taylor3d arg = Taylor3d::variable(f) * c + d;
    return a + b * sin(arg);
}

JetPoint random_jet_point(Rng& rng) {
    JetPoint p;
    p.f = rng.uniform(0.3, 1.7);
    p.g = rng.uniform(0.3, 1.7);
    p.K = rng.uniform(0.5, 3.0);
    p.K1 = rng.uniform(-2.0, 2.0);
    p.K2 = rng.uniform(-2.0, 2.0);
    return p;
}

}  // namespace

ReduceCheckReport run_reduction_checks(std::uint64_t seed, int trials) {
    if (trials < 1) throw ValidationError("reduce-check: trials must be at least 1");

    ReduceCheckReport report;
    report.seed = seed;
    report.trials = trials;
    Rng rng(seed);

    // off-shell identity d(psi)/df = Lambda (K3 - F) on arbitrary trajectories
    double worst_identity = 0.0;
    for (int t = 0; t < trials; ++t) {
        const double f = rng.uniform(0.3, 1.7);
        const double g = rng.uniform(0.3, 1.7);
        const Taylor3d traj = random_trajectory(rng, f);
        for (IntegratingFactor tag : {IntegratingFactor::Lambda1, IntegratingFactor::Lambda2}) {
            worst_identity =
                std::max(worst_identity, std::abs(first_integral_identity_check(traj, f, g, tag)));
        }
    }
    report.checks.push_back(upper_bound_check("off-shell-identity", worst_identity, 1e-9));

    // determining system on the two-parameter solution space; residuals
    // cancel exactly, so judge roundoff relative to the term scale
    double worst_determining = 0.0;
    for (int t = 0; t < trials; ++t) {
        AlphaAnsatz ansatz;
        ansatz.c1 = rng.uniform(-2.0, 2.0);
        ansatz.c2 = rng.uniform(-2.0, 2.0);
        if (ansatz.c1 == 0.0 && ansatz.c2 == 0.0) ansatz.c1 = 1.0;
        const double f = rng.uniform(0.3, 1.7);
        const double g = rng.uniform(0.3, 1.7);
        const double K = rng.uniform(0.5, 3.0);
        const DeterminingSystem sys = determining_system(ansatz.terms(), f, g, K);
        for (int i = 0; i < 6; ++i) {
            worst_determining =
                std::max(worst_determining, std::abs(sys.residual[i]) / std::max(1.0, sys.scale[i]));
        }
    }
    report.checks.push_back(upper_bound_check("determining-system", worst_determining, 1e-12));

    // a (f+g)^3/K ansatz must be rejected by the system
    {
        const std::vector<AlphaTerm> perturbed = {{1.0, 3, -1}};
        double separation = 0.0;
        for (double r : determining_system_residuals(perturbed, 1.0, 1.0, 2.0))
            separation = std::max(separation, std::abs(r));
        report.checks.push_back(lower_bound_check("perturbed-ansatz-separation", separation, 0.1));
    }

    // psi2 K^4 - psi1 K^2 - (f+g)^2 K1^2 == 0, scaled by the term magnitudes
    const int identity_points = std::max(trials, 1000);
    double worst_algebraic = 0.0;
    for (int t = 0; t < identity_points; ++t) {
        const JetPoint p = random_jet_point(rng);
        const auto [psi1, psi2] = psi_values(p);
        const double s = p.f + p.g;
        const double scale = std::max({1.0, std::abs(psi2) * p.K * p.K * p.K * p.K,
                                       std::abs(psi1) * p.K * p.K, s * s * p.K1 * p.K1});
        worst_algebraic = std::max(worst_algebraic, std::abs(psi_algebraic_identity(p)) / scale);
    }
    report.checks.push_back(upper_bound_check("psi-algebraic-identity", worst_algebraic, 1e-10));

    // quadrature reconstruction differs from psi by an endpoint-independent
    // constant
    const int pairs = std::min(trials, 20);
    double worst_offset = 0.0;
    for (int t = 0; t < pairs; ++t) {
        const JetPoint p = random_jet_point(rng);
        const JetPoint q = random_jet_point(rng);
        for (IntegratingFactor tag : {IntegratingFactor::Lambda1, IntegratingFactor::Lambda2}) {
            const int which = tag == IntegratingFactor::Lambda1 ? 0 : 1;
            auto offset = [&](const JetPoint& pt) {
                const auto psis = psi_values(pt);
                const double psi = which == 0 ? psis.first : psis.second;
                return line_integral_first_integral(pt, tag, default_Ktilde(pt)) - psi;
            };
            worst_offset = std::max(worst_offset, std::abs(offset(p) - offset(q)));
        }
    }
    report.checks.push_back(upper_bound_check("line-integral-offset", worst_offset, 1e-6));

    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.pass; });
    return report;
}

nlohmann::json report_to_json(const ReduceCheckReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"threshold", c.threshold},
                          {"comparison", c.comparison},
                          {"pass", c.pass}});
    }
    return nlohmann::json{{"seed", report.seed},
                          {"trials", report.trials},
                          {"checks", std::move(checks)},
                          {"pass", report.pass}};
}

}  // namespace ernst
