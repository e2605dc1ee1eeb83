#include "ernst/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ernst {

namespace {

constexpr const char* kOutputNames[] = {"fields", "residuals", "invariants"};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const nlohmann::json& require_key(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string("config: missing key '") + key + "'");
    return *it;
}

double require_number(const nlohmann::json& j, const char* key) {
    const nlohmann::json& v = require_key(j, key);
    if (!v.is_number()) throw ValidationError(std::string("config: '") + key + "' must be a number");
    return v.get<double>();
}

int require_int(const nlohmann::json& j, const char* key) {
    const nlohmann::json& v = require_key(j, key);
    if (!v.is_number_integer())
        throw ValidationError(std::string("config: '") + key + "' must be an integer");
    return v.get<int>();
}

TransformStep transform_from_json(const nlohmann::json& j) {
    const std::string type = require_key(j, "type").get<std::string>();
    TransformStep step;
    if (type == "coordinate-action") {
        step.kind = TransformStep::Kind::Coordinate;
        step.scale = require_number(j, "scale");
        step.shift = require_number(j, "shift");
    } else if (type == "shift-scale") {
        step.kind = TransformStep::Kind::ShiftScale;
        step.gamma = require_number(j, "gamma");
        step.delta = require_number(j, "delta");
    } else if (type == "x5") {
        step.kind = TransformStep::Kind::X5;
        step.epsilon = require_number(j, "epsilon");
    } else if (type == "moebius") {
        step.kind = TransformStep::Kind::Moebius;
        step.a = require_number(j, "a");
        step.b = require_number(j, "b");
        step.c = require_number(j, "c");
        step.d = require_number(j, "d");
    } else if (type == "moebius-from-params") {
        step.kind = TransformStep::Kind::MoebiusFromParams;
        step.gamma = require_number(j, "gamma");
        step.delta = require_number(j, "delta");
        step.epsilon = require_number(j, "epsilon");
    } else {
        throw ValidationError("config: unknown transform type '" + type + "'");
    }
    return step;
}

nlohmann::json transform_to_json(const TransformStep& step) {
    nlohmann::json j;
    switch (step.kind) {
        case TransformStep::Kind::Coordinate:
            j["type"] = "coordinate-action";
            j["scale"] = step.scale;
            j["shift"] = step.shift;
            break;
        case TransformStep::Kind::ShiftScale:
            j["type"] = "shift-scale";
            j["gamma"] = step.gamma;
            j["delta"] = step.delta;
            break;
        case TransformStep::Kind::X5:
            j["type"] = "x5";
            j["epsilon"] = step.epsilon;
            break;
        case TransformStep::Kind::Moebius:
            j["type"] = "moebius";
            j["a"] = step.a;
            j["b"] = step.b;
            j["c"] = step.c;
            j["d"] = step.d;
            break;
        case TransformStep::Kind::MoebiusFromParams:
            j["type"] = "moebius-from-params";
            j["gamma"] = step.gamma;
            j["delta"] = step.delta;
            j["epsilon"] = step.epsilon;
            break;
    }
    return j;
}

void validate_transform(const TransformStep& step) {
    switch (step.kind) {
        case TransformStep::Kind::Coordinate:
            validate(CoordinateAction{step.scale, step.shift});
            break;
        case TransformStep::Kind::Moebius:
            MoebiusMatrix::normalized(step.a, step.b, step.c, step.d);  // throws unless det = 1
            break;
        default:
            break;
    }
}

/// True when the scenario's generating field needs f > 0 and g > 0 (square
/// root of f/g somewhere); otherwise only f+g > 0 is required.
bool needs_positive_coords(const Scenario& s) {
    if (s.family && s.family->tag == "x2") return true;
    if (s.epd) {
        return std::any_of(s.epd->begin(), s.epd->end(),
                           [](const EpdTerm& t) { return t.basis == EpdBasis::ArctanRatio; });
    }
    return false;
}

}  // namespace

bool Scenario::wants(const std::string& output) const {
    return std::find(outputs.begin(), outputs.end(), output) != outputs.end();
}

void validate(const Scenario& s) {
    if (s.schema != 1) throw ValidationError("config: unsupported schema version");
    if (bool(s.family) == bool(s.epd))
        throw ValidationError("config: exactly one of 'family' and 'epd' must be given");
    if (s.family) {
        if (s.family->tag != "x1" && s.family->tag != "x2")
            throw ValidationError("config: family tag must be 'x1' or 'x2'");
        validate(s.family->params);
    }
    if (s.epd) {
        for (const EpdTerm& t : *s.epd)
            if (!std::isfinite(t.weight)) throw ValidationError("config: EPD weights must be finite");
    }
    validate(s.grid);
    if (needs_positive_coords(s)) {
        if (!(s.grid.f_min > 0.0 && s.grid.g_min > 0.0))
            throw ValidationError("config: grid must satisfy f > 0 and g > 0 for this field");
    } else if (!(s.grid.f_min + s.grid.g_min > 0.0)) {
        throw ValidationError("config: grid must satisfy f+g > 0");
    }
    for (const TransformStep& step : s.transforms) validate_transform(step);
    for (const std::string& out : s.outputs) {
        if (std::find(std::begin(kOutputNames), std::end(kOutputNames), out) == std::end(kOutputNames))
            throw ValidationError("config: unknown output '" + out + "'");
    }
    if (!(s.tolerance > 0.0)) throw ValidationError("config: tolerance must be positive");
}

Scenario scenario_from_json(const nlohmann::json& j) {
    Scenario s;
    s.schema = require_int(j, "schema");
    if (j.contains("family")) {
        const nlohmann::json& fam = j["family"];
        FamilySpec spec;
        spec.tag = require_key(fam, "tag").get<std::string>();
        spec.params.A = require_number(fam, "A");
        spec.params.B = require_number(fam, "B");
        spec.params.C = require_number(fam, "C");
        s.family = spec;
    }
    if (j.contains("epd")) {
        const nlohmann::json& combo = j["epd"];
        if (!combo.is_array()) throw ValidationError("config: 'epd' must be an array of terms");
        EpdCombination terms;
        for (const auto& term : combo) {
            terms.push_back(
                {require_number(term, "weight"), epd_basis_from_name(require_key(term, "basis").get<std::string>())});
        }
        s.epd = std::move(terms);
    }
    const nlohmann::json& grid = require_key(j, "grid");
    s.grid.f_min = require_number(grid, "f_min");
    s.grid.f_max = require_number(grid, "f_max");
    s.grid.f_count = require_int(grid, "f_count");
    s.grid.g_min = require_number(grid, "g_min");
    s.grid.g_max = require_number(grid, "g_max");
    s.grid.g_count = require_int(grid, "g_count");
    if (j.contains("transforms")) {
        for (const auto& t : j["transforms"]) s.transforms.push_back(transform_from_json(t));
    }
    if (j.contains("outputs")) s.outputs = j["outputs"].get<std::vector<std::string>>();
    if (j.contains("tolerance")) s.tolerance = require_number(j, "tolerance");
    validate(s);
    return s;
}

nlohmann::json scenario_to_json(const Scenario& s) {
    nlohmann::json j;
    j["schema"] = s.schema;
    if (s.family) {
        j["family"] = {{"tag", s.family->tag},
                       {"A", s.family->params.A},
                       {"B", s.family->params.B},
                       {"C", s.family->params.C}};
    }
    if (s.epd) {
        nlohmann::json combo = nlohmann::json::array();
        for (const EpdTerm& t : *s.epd)
            combo.push_back({{"weight", t.weight}, {"basis", epd_basis_name(t.basis)}});
        j["epd"] = std::move(combo);
    }
    j["grid"] = {{"f_min", s.grid.f_min}, {"f_max", s.grid.f_max}, {"f_count", s.grid.f_count},
                 {"g_min", s.grid.g_min}, {"g_max", s.grid.g_max}, {"g_count", s.grid.g_count}};
    nlohmann::json transforms = nlohmann::json::array();
    for (const TransformStep& step : s.transforms) transforms.push_back(transform_to_json(step));
    j["transforms"] = std::move(transforms);
    j["outputs"] = s.outputs;
    j["tolerance"] = s.tolerance;
    return j;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config: JSON parse error: ") + e.what());
    }
    return scenario_from_json(j);
}

PotentialField build_field(const Scenario& s) {
    validate(s);
    PotentialField field;
    if (s.family) {
        field = s.family->tag == "x1" ? make_x1_field(s.family->params) : make_x2_field(s.family->params);
    } else {
        field = make_epd_field(*s.epd);
    }
    for (const TransformStep& step : s.transforms) {
        switch (step.kind) {
            case TransformStep::Kind::Coordinate:
                field = with_coordinate_action({step.scale, step.shift}, std::move(field));
                break;
            case TransformStep::Kind::ShiftScale:
                field = with_shift_scale(step.gamma, step.delta, std::move(field));
                break;
            case TransformStep::Kind::X5:
                field = with_x5(step.epsilon, std::move(field));
                break;
            case TransformStep::Kind::Moebius:
                field = with_moebius(MoebiusMatrix::normalized(step.a, step.b, step.c, step.d),
                                     std::move(field));
                break;
            case TransformStep::Kind::MoebiusFromParams:
                field = with_moebius(moebius_from_params(step.gamma, step.delta, step.epsilon),
                                     std::move(field));
                break;
        }
    }
    return field;
}

namespace {

std::vector<InvariantCheck> run_invariant_checks(const Scenario& s) {
    std::vector<InvariantCheck> checks;
    const GridSpec& grid = s.grid;

    auto max_over_grid = [&](const std::function<double(double, double)>& fn) {
        double worst = 0.0;
        for (int i = 0; i < grid.f_count; ++i)
            for (int j = 0; j < grid.g_count; ++j)
                worst = std::max(worst, std::abs(fn(grid.f_at(i), grid.g_at(j))));
        return worst;
    };

    if (s.family) {
        const FamilyParams& p = s.family->params;
        const PotentialField base =
            s.family->tag == "x1" ? make_x1_field(p) : make_x2_field(p);
        const double radius2 = (p.A / p.B) * (p.A / p.B);

        InvariantCheck circle;
        circle.name = "circle-identity";
        circle.tolerance = 1e-12;
        circle.max_abs = max_over_grid([&](double f, double g) {
            const PotentialSample sample = sample_at(base, f, g);
            const double K = sample.K.value, L = sample.L.value;
            return (K * K + (L - p.C) * (L - p.C) - radius2) / radius2;
        });
        circle.pass = circle.max_abs <= circle.tolerance;
        checks.push_back(circle);

        InvariantCheck surface;
        const SurfaceGenerator gen =
            s.family->tag == "x1" ? SurfaceGenerator::X1 : SurfaceGenerator::X2;
        surface.name = s.family->tag == "x1" ? "invariant-surface-x1" : "invariant-surface-x2";
        surface.tolerance = 1e-12;
        surface.max_abs = max_over_grid([&](double f, double g) {
            const Residual r = invariant_surface_residual(base, gen, f, g);
            return std::max(std::abs(r.resK), std::abs(r.resL));
        });
        surface.pass = surface.max_abs <= surface.tolerance;
        checks.push_back(surface);
    }

    if (s.epd) {
        InvariantCheck epd;
        epd.name = "epd-residual";
        epd.tolerance = 1e-12;
        epd.max_abs = max_over_grid([&](double f, double g) {
            const Jet2d F = epd_combination_eval(*s.epd, Jet2d::lift_f(f), Jet2d::lift_g(g));
            return epd_residual(F, f, g);
        });
        epd.pass = epd.max_abs <= epd.tolerance;
        checks.push_back(epd);
    }

    return checks;
}

}  // namespace

ScenarioResult run_scenario(const Scenario& s) {
    validate(s);
    ScenarioResult result;
    const PotentialField field = build_field(s);
    result.records = sweep_parallel(field, s.grid);
    for (const FieldRecord& r : result.records) {
        if (!std::isfinite(r.K) || !std::isfinite(r.L) || !std::isfinite(r.resK) ||
            !std::isfinite(r.resL)) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "non-finite field value at (f, g) = (%.17g, %.17g)", r.f,
                          r.g);
            throw DomainError(buf);
        }
    }
    result.residuals = summarize(result.records);
    if (s.wants("invariants")) result.invariants = run_invariant_checks(s);

    bool pass = result.residuals.max_abs_resK <= s.tolerance &&
                result.residuals.max_abs_resL <= s.tolerance;
    for (const InvariantCheck& c : result.invariants) pass = pass && c.pass;
    result.pass = pass;
    return result;
}

nlohmann::json summary_to_json(const Scenario& s, const ScenarioResult& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["tolerance"] = s.tolerance;
    if (s.wants("residuals")) {
        j["max_abs_resK"] = r.residuals.max_abs_resK;
        j["max_abs_resL"] = r.residuals.max_abs_resL;
    }
    if (s.wants("invariants")) {
        nlohmann::json checks = nlohmann::json::array();
        for (const InvariantCheck& c : r.invariants) {
            checks.push_back({{"name", c.name},
                              {"max_abs", c.max_abs},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass}});
        }
        j["invariant_checks"] = std::move(checks);
    }
    j["pass"] = r.pass;
    return j;
}

void write_csv(const std::vector<FieldRecord>& records, std::ostream& os) {
    os << "f,g,K,L,resK,resL\n";
    for (const FieldRecord& r : records) {
        os << format_double(r.f) << ',' << format_double(r.g) << ',' << format_double(r.K) << ','
           << format_double(r.L) << ',' << format_double(r.resK) << ',' << format_double(r.resL)
           << '\n';
    }
}

std::vector<FieldRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "f,g,K,L,resK,resL")
        throw ValidationError("csv: bad header");
    std::vector<FieldRecord> records;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::array<double, 6> vals{};
        for (int i = 0; i < 6; ++i) {
            if (!std::getline(row, cell, ',')) throw ValidationError("csv: short row");
            vals[i] = std::stod(cell);
        }
        records.push_back({vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]});
    }
    return records;
}

}  // namespace ernst
