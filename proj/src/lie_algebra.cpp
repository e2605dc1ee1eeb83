#include "ernst/lie_algebra.hpp"

#include <cmath>
#include <sstream>

namespace ernst {

namespace {

const char* var_name(int v) {
    static const char* names[4] = {"f", "g", "K", "L"};
    return names[v];
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

Poly4 Poly4::constant(const Rational& c) { return monomial(c, {0, 0, 0, 0}); }

Poly4 Poly4::variable(Var v) {
    Exponents e{0, 0, 0, 0};
    e[static_cast<int>(v)] = 1;
    return monomial(Rational(1), e);
}

Poly4 Poly4::monomial(const Rational& c, const Exponents& e) {
    Poly4 p;
    p.insert(e, c);
    return p;
}

Rational Poly4::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly4::insert(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly4 Poly4::operator-() const {
    Poly4 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly4& Poly4::operator+=(const Poly4& other) {
    for (const auto& [e, c] : other.terms_) insert(e, c);
    return *this;
}

Poly4 operator*(const Poly4& a, const Poly4& b) {
    Poly4 r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Poly4::Exponents e;
            for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
            r.insert(e, ca * cb);
        }
    }
    return r;
}

Poly4 operator*(const Rational& c, const Poly4& p) {
    Poly4 r;
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

Poly4 Poly4::partial(Var v) const {
    const int idx = static_cast<int>(v);
    Poly4 r;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents d = e;
        d[idx] -= 1;
        r.insert(d, c * e[idx]);
    }
    return r;
}

double Poly4::evaluate(const std::array<double, 4>& point) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = rational_to_double(c);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        sum += term;
    }
    return sum;
}

std::string Poly4::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < 4; ++i) {
            for (int k = 0; k < e[i]; ++k) os << "*" << var_name(i);
        }
    }
    return os.str();
}

const Poly4& VectorField4::component(Var v) const {
    switch (v) {
        case Var::f: return xi_f;
        case Var::g: return xi_g;
        case Var::K: return eta_K;
        case Var::L: return eta_L;
    }
    throw std::logic_error("bad Var");
}

VectorField4 VectorField4::operator-() const { return {-xi_f, -xi_g, -eta_K, -eta_L}; }

VectorField4 operator+(const VectorField4& a, const VectorField4& b) {
    return {a.xi_f + b.xi_f, a.xi_g + b.xi_g, a.eta_K + b.eta_K, a.eta_L + b.eta_L};
}

VectorField4 operator-(const VectorField4& a, const VectorField4& b) {
    return {a.xi_f - b.xi_f, a.xi_g - b.xi_g, a.eta_K - b.eta_K, a.eta_L - b.eta_L};
}

VectorField4 operator*(const Rational& c, const VectorField4& v) {
    return {c * v.xi_f, c * v.xi_g, c * v.eta_K, c * v.eta_L};
}

const std::array<VectorField4, 5>& symmetry_basis() {
    static const std::array<VectorField4, 5> basis = [] {
        const Poly4 zero;
        const Poly4 one = Poly4::constant(1);
        const Poly4 f = Poly4::variable(Var::f);
        const Poly4 g = Poly4::variable(Var::g);
        const Poly4 K = Poly4::variable(Var::K);
        const Poly4 L = Poly4::variable(Var::L);

        std::array<VectorField4, 5> b;
        b[0] = {one, -one, zero, zero};                              // X1
        b[1] = {f, g, zero, zero};                                   // X2
        b[2] = {zero, zero, zero, one};                              // X3
        b[3] = {zero, zero, K, L};                                   // X4
        b[4] = {zero, zero, Rational(2) * (K * L), L * L - K * K};   // X5
        return b;
    }();
    return basis;
}

Poly4 poly_partial(const Poly4& p, Var v) { return p.partial(v); }

VectorField4 lie_bracket(const VectorField4& X, const VectorField4& Y) {
    static const std::array<Var, 4> vars = {Var::f, Var::g, Var::K, Var::L};
    VectorField4 r;
    auto bracket_component = [&](Var i) {
        Poly4 out;
        for (Var j : vars) {
            out += X.component(j) * Y.component(i).partial(j);
            out += -(Y.component(j) * X.component(i).partial(j));
        }
        return out;
    };
    r.xi_f = bracket_component(Var::f);
    r.xi_g = bracket_component(Var::g);
    r.eta_K = bracket_component(Var::K);
    r.eta_L = bracket_component(Var::L);
    return r;
}

std::array<Rational, 5> decompose_in_basis(const VectorField4& V) {
    // the basis coefficients sit on distinct monomials, so read them off
    // and confirm by exact reconstruction
    std::array<Rational, 5> coeffs;
    coeffs[0] = V.xi_f.coefficient({0, 0, 0, 0});
    coeffs[1] = V.xi_f.coefficient({1, 0, 0, 0});
    coeffs[2] = V.eta_L.coefficient({0, 0, 0, 0});
    coeffs[3] = V.eta_K.coefficient({0, 0, 1, 0});
    coeffs[4] = V.eta_K.coefficient({0, 0, 1, 1}) / 2;

    const auto& basis = symmetry_basis();
    VectorField4 residual = V;
    for (int i = 0; i < 5; ++i) residual = residual - coeffs[i] * basis[i];
    if (!residual.is_zero()) {
        throw NotInSpanError("vector field not in span{X1..X5}; residual: xi_f=" +
                             residual.xi_f.to_string() + ", xi_g=" + residual.xi_g.to_string() +
                             ", eta_K=" + residual.eta_K.to_string() +
                             ", eta_L=" + residual.eta_L.to_string());
    }
    return coeffs;
}

CommutatorTable commutator_table() {
    const auto& basis = symmetry_basis();
    CommutatorTable table;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            table.coeff[i][j] = decompose_in_basis(lie_bracket(basis[i], basis[j]));
        }
    }
    return table;
}

std::string render_combination(const std::array<Rational, 5>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) os << mag.str() << " ";
        os << "X" << (i + 1);
    }
    return first ? "0" : os.str();
}

std::string table_to_text(const CommutatorTable& table) {
    std::array<std::array<std::string, 6>, 6> cells;
    cells[0][0] = "[.,.]";
    for (int i = 0; i < 5; ++i) {
        cells[0][i + 1] = "X" + std::to_string(i + 1);
        cells[i + 1][0] = "X" + std::to_string(i + 1);
        for (int j = 0; j < 5; ++j) cells[i + 1][j + 1] = render_combination(table.coeff[i][j]);
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : cells)
        for (int j = 0; j < 6; ++j) width[j] = std::max(width[j], row[j].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (int j = 0; j < 6; ++j) {
            os << (j == 0 ? "" : " | ");
            os << row[j];
            os << std::string(width[j] - row[j].size(), ' ');
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json table_to_json(const CommutatorTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < 5; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 5; ++j) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (int k = 0; k < 5; ++k) coeffs.push_back(table.coeff[i][j][k].str());
            row.push_back(std::move(coeffs));
        }
        entries.push_back(std::move(row));
    }
    return nlohmann::json{{"basis", {"X1", "X2", "X3", "X4", "X5"}}, {"entries", std::move(entries)}};
}

StructureReport structure_check() {
    const auto& basis = symmetry_basis();
    const auto& X1 = basis[0];
    const auto& X2 = basis[1];
    const auto& X3 = basis[2];
    const auto& X4 = basis[3];
    const auto& X5 = basis[4];

    StructureReport report;

    report.aff1_closed = lie_bracket(X1, X2) == X1;

    report.sl2_closed = lie_bracket(X3, X4) == X3 && lie_bracket(X3, X5) == Rational(2) * X4 &&
                        lie_bracket(X4, X5) == X5;

    report.cross_brackets_zero = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 5; ++j)
            report.cross_brackets_zero =
                report.cross_brackets_zero && lie_bracket(basis[i], basis[j]).is_zero();

    // h = -2 X4, e = X3, f = -X5
    const VectorField4 h = Rational(-2) * X4;
    const VectorField4 e = X3;
    const VectorField4 fv = -X5;
    report.sl2_standard_triple = lie_bracket(h, e) == Rational(2) * e &&
                                 lie_bracket(h, fv) == Rational(-2) * fv && lie_bracket(e, fv) == h;

    report.antisymmetry = true;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            report.antisymmetry =
                report.antisymmetry && (lie_bracket(basis[i], basis[j]) + lie_bracket(basis[j], basis[i])).is_zero();

    report.jacobi_identity = true;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k) {
                const VectorField4 cyc = lie_bracket(lie_bracket(basis[i], basis[j]), basis[k]) +
                                         lie_bracket(lie_bracket(basis[j], basis[k]), basis[i]) +
                                         lie_bracket(lie_bracket(basis[k], basis[i]), basis[j]);
                report.jacobi_identity = report.jacobi_identity && cyc.is_zero();
            }

    return report;
}

}  // namespace ernst
