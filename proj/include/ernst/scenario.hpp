#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ernst/potentials.hpp"
#include "ernst/sweep.hpp"
#include "ernst/transforms.hpp"

#include "json.hpp"

namespace ernst {

/// One step of a transform chain; steps apply left-to-right as listed.
struct TransformStep {
    enum class Kind { Coordinate, ShiftScale, X5, Moebius, MoebiusFromParams };

    Kind kind = Kind::Coordinate;
    double scale = 1.0, shift = 0.0;           // Coordinate
    double gamma = 0.0, delta = 0.0;           // ShiftScale / MoebiusFromParams
    double epsilon = 0.0;                      // X5 / MoebiusFromParams
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0; // Moebius

    bool operator==(const TransformStep&) const = default;
};

struct FamilySpec {
    std::string tag;  // "x1" or "x2"
    FamilyParams params;

    bool operator==(const FamilySpec&) const = default;
};

/// Declarative description of one evaluation run: a generating solution
/// (closed-form family or EPD combination), a grid, a transform chain, and
/// the requested outputs.
struct Scenario {
    int schema = 1;
    std::optional<FamilySpec> family;
    std::optional<EpdCombination> epd;
    GridSpec grid;
    std::vector<TransformStep> transforms;
    std::vector<std::string> outputs = {"fields", "residuals", "invariants"};
    double tolerance = 1e-9;

    bool wants(const std::string& output) const;

    bool operator==(const Scenario&) const = default;
};

/// Full validation; throws ValidationError before any computation.
void validate(const Scenario& s);

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);
Scenario load_scenario(const std::string& path);

/// The transformed field described by the scenario.
PotentialField build_field(const Scenario& s);

struct InvariantCheck {
    std::string name;
    double max_abs = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ScenarioResult {
    std::vector<FieldRecord> records;
    SweepSummary residuals;
    std::vector<InvariantCheck> invariants;
    bool pass = false;
};

/// Evaluates the scenario over its grid (parallel sweep) and, when
/// requested, checks the generating solution's invariants: the circle
/// identity and invariant-surface conditions for families, the EPD residual
/// for combinations.
ScenarioResult run_scenario(const Scenario& s);

nlohmann::json summary_to_json(const Scenario& s, const ScenarioResult& r);

/// CSV with header f,g,K,L,resK,resL; 17 significant digits per value so
/// doubles round-trip exactly. Row-major in f then g.
void write_csv(const std::vector<FieldRecord>& records, std::ostream& os);
std::vector<FieldRecord> read_csv(std::istream& is);

}  // namespace ernst
