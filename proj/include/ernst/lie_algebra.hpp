#pragma once

#include <array>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ernst/errors.hpp"

#include "json.hpp"

namespace ernst {

/// Exact rational scalar for all symbolic vector-field work; no floating
/// point enters this module.
using Rational = boost::multiprecision::cpp_rational;

/// Coordinates of the combined base/target space, in bracket order.
enum class Var { f = 0, g = 1, K = 2, L = 3 };

struct NotInSpanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse polynomial in (f, g, K, L) with exact rational coefficients.
/// Zero coefficients are never stored.
class Poly4 {
  public:
    using Exponents = std::array<int, 4>;

    Poly4() = default;

    static Poly4 constant(const Rational& c);
    static Poly4 variable(Var v);
    static Poly4 monomial(const Rational& c, const Exponents& e);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coefficient(const Exponents& e) const;

    Poly4 operator-() const;
    Poly4& operator+=(const Poly4& other);
    friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
    friend Poly4 operator-(Poly4 a, const Poly4& b) { return a += -b; }
    friend Poly4 operator*(const Poly4& a, const Poly4& b);
    friend Poly4 operator*(const Rational& c, const Poly4& p);

    /// Exact formal partial derivative.
    Poly4 partial(Var v) const;

    double evaluate(const std::array<double, 4>& point) const;

    std::string to_string() const;

    bool operator==(const Poly4&) const = default;

  private:
    void insert(const Exponents& e, const Rational& c);

    std::map<Exponents, Rational> terms_;
};

/// Vector field xi_f d/df + xi_g d/dg + eta_K d/dK + eta_L d/dL with
/// polynomial coefficients.
struct VectorField4 {
    Poly4 xi_f, xi_g, eta_K, eta_L;

    const Poly4& component(Var v) const;
    bool is_zero() const { return xi_f.is_zero() && xi_g.is_zero() && eta_K.is_zero() && eta_L.is_zero(); }

    VectorField4 operator-() const;
    friend VectorField4 operator+(const VectorField4& a, const VectorField4& b);
    friend VectorField4 operator-(const VectorField4& a, const VectorField4& b);
    friend VectorField4 operator*(const Rational& c, const VectorField4& v);

    bool operator==(const VectorField4&) const = default;
};

/// The five symmetry generators:
/// X1 = d/df - d/dg, X2 = f d/df + g d/dg, X3 = d/dL,
/// X4 = K d/dK + L d/dL, X5 = 2KL d/dK + (L^2 - K^2) d/dL.
const std::array<VectorField4, 5>& symmetry_basis();

Poly4 poly_partial(const Poly4& p, Var v);

/// [X, Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i), exact.
VectorField4 lie_bracket(const VectorField4& X, const VectorField4& Y);

/// Exact coefficients of V in the basis X1..X5; throws NotInSpanError with
/// the residual polynomial when V does not lie in the span.
std::array<Rational, 5> decompose_in_basis(const VectorField4& V);

/// coeff[i][j] holds [X_{i+1}, X_{j+1}] expressed in the basis.
struct CommutatorTable {
    std::array<std::array<std::array<Rational, 5>, 5>, 5> coeff{};
};

CommutatorTable commutator_table();

/// Render a coefficient 5-vector like "0", "X1", "-2 X4", "1/2 X3 + X5".
std::string render_combination(const std::array<Rational, 5>& coeffs);

std::string table_to_text(const CommutatorTable& table);
nlohmann::json table_to_json(const CommutatorTable& table);

/// Structural facts about the algebra: the two-dimensional non-abelian
/// block, the three-dimensional block, vanishing cross brackets, and the
/// standard sl(2) triple h = -2 X4, e = X3, f = -X5.
struct StructureReport {
    bool aff1_closed = false;
    bool sl2_closed = false;
    bool cross_brackets_zero = false;
    bool sl2_standard_triple = false;
    bool jacobi_identity = false;
    bool antisymmetry = false;

    bool all() const {
        return aff1_closed && sl2_closed && cross_brackets_zero && sl2_standard_triple &&
               jacobi_identity && antisymmetry;
    }
};

StructureReport structure_check();

}  // namespace ernst
