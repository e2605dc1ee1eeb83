// Command-line front end: scenario runs, residual verification, the
// commutator table, and the randomized reduction checks.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ernst/checks.hpp"
#include "ernst/lie_algebra.hpp"
#include "ernst/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitToleranceBreach = 1;
constexpr int kExitError = 2;

std::string default_path(const std::string& config_path, const char* suffix) {
    return std::filesystem::path(config_path).stem().string() + suffix;
}

int cmd_run(const std::string& config_path, std::string csv_path, std::string json_path) {
    const ernst::Scenario scenario = ernst::load_scenario(config_path);
    const ernst::ScenarioResult result = ernst::run_scenario(scenario);

    if (scenario.wants("fields")) {
        if (csv_path.empty()) csv_path = default_path(config_path, ".csv");
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot open CSV output '" + csv_path + "'");
        ernst::write_csv(result.records, csv);
    }

    const nlohmann::json summary = ernst::summary_to_json(scenario, result);
    if (json_path.empty()) json_path = default_path(config_path, ".summary.json");
    std::ofstream js(json_path, std::ios::binary);
    if (!js) throw std::runtime_error("cannot open JSON output '" + json_path + "'");
    js << summary.dump(2) << "\n";

    std::cout << summary.dump(2) << "\n";
    return result.pass ? kExitPass : kExitToleranceBreach;
}

int cmd_verify(const std::string& config_path, double tolerance) {
    ernst::Scenario scenario = ernst::load_scenario(config_path);
    scenario.tolerance = tolerance;
    const ernst::ScenarioResult result = ernst::run_scenario(scenario);
    std::cout << ernst::summary_to_json(scenario, result).dump(2) << "\n";
    return result.pass ? kExitPass : kExitToleranceBreach;
}

int cmd_lie_table(bool as_json) {
    const ernst::CommutatorTable table = ernst::commutator_table();
    if (as_json) {
        std::cout << ernst::table_to_json(table).dump(2) << "\n";
    } else {
        std::cout << ernst::table_to_text(table);
    }
    return kExitPass;
}

int cmd_reduce_check(std::uint64_t seed, int trials) {
    const ernst::ReduceCheckReport report = ernst::run_reduction_checks(seed, trials);
    std::cout << ernst::report_to_json(report).dump(2) << "\n";
    if (!report.pass) {
        for (const ernst::CheckResult& c : report.checks) {
            if (!c.pass) std::cerr << "FAILED check: " << c.name << "\n";
        }
        return kExitToleranceBreach;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ernstlab: closed-form solutions, symmetries, and first-integral machinery of the "
                 "hyperbolic Ernst equation"};
    app.require_subcommand(1);

    std::string run_config, run_csv, run_json;
    CLI::App* run = app.add_subcommand("run", "evaluate a scenario and write CSV/JSON outputs");
    run->add_option("config", run_config, "scenario JSON file")->required();
    run->add_option("--csv", run_csv, "CSV output path (default: <config stem>.csv)");
    run->add_option("--json", run_json, "summary output path (default: <config stem>.summary.json)");

    std::string verify_config;
    double verify_tol = 1e-9;
    CLI::App* verify = app.add_subcommand("verify", "run a scenario and enforce a residual tolerance");
    verify->add_option("config", verify_config, "scenario JSON file")->required();
    verify->add_option("--tol", verify_tol, "residual tolerance")->check(CLI::PositiveNumber);

    bool table_json = false;
    CLI::App* table = app.add_subcommand("lie-table", "print the commutator table of the symmetry algebra");
    table->add_flag("--json", table_json, "emit coefficient vectors as JSON");

    std::uint64_t seed = 1;
    int trials = 50;
    CLI::App* reduce = app.add_subcommand("reduce-check", "randomized checks of the reduced-equation machinery");
    reduce->add_option("--seed", seed, "random seed");
    reduce->add_option("--trials", trials, "number of random trials")->check(CLI::Range(1, 1 << 20));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(run_config, run_csv, run_json);
        if (*verify) return cmd_verify(verify_config, verify_tol);
        if (*table) return cmd_lie_table(table_json);
        if (*reduce) return cmd_reduce_check(seed, trials);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
