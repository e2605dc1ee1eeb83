#pragma once

#include <complex>
#include <utility>

#include "ernst/jets.hpp"
#include "ernst/potentials.hpp"

namespace ernst {

/// Parameters of the five one-parameter symmetry actions:
/// alpha scales coordinates, beta translates along f-g, gamma shifts L,
/// delta scales Z, epsilon drives the fractional-linear action.
struct GroupParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
};

/// Combined coordinate action (f, g) -> (scale f + shift, scale g - shift).
/// Note f+g -> scale (f+g).
struct CoordinateAction {
    double scale = 1.0;
    double shift = 0.0;

    bool operator==(const CoordinateAction&) const = default;
};

void validate(const CoordinateAction& act);

std::pair<double, double> apply_coordinate_action(const CoordinateAction& act, double f, double g);

/// Real 2x2 matrix with unit determinant acting on the potential by
/// Z -> i (a Z + i b) / (c Z + i d).
class MoebiusMatrix {
  public:
    /// Validates ad - bc = 1 to 1e-12; entries are kept as given.
    MoebiusMatrix(double a, double b, double c, double d);

    /// Accepts a matrix up to global sign (a scalar multiple of -1 gives the
    /// same map) and canonicalizes to a > 0 (or c > 0 when a = 0).
    static MoebiusMatrix normalized(double a, double b, double c, double d);

    static MoebiusMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    double det() const { return a_ * d_ - b_ * c_; }

    /// Adjugate; exact inverse for a unit-determinant matrix.
    MoebiusMatrix inverse() const { return {d_, -b_, -c_, a_}; }

    bool operator==(const MoebiusMatrix&) const = default;

  private:
    double a_, b_, c_, d_;
};

/// One-parameter subgroup parameters (gamma: L shift, delta: scale,
/// epsilon: fractional-linear) combined into a single unit-determinant matrix:
/// a = e^{delta/2}, b = gamma e^{-delta/2}, c = -epsilon e^{delta/2},
/// d = (1 - epsilon gamma) e^{-delta/2}.
MoebiusMatrix moebius_from_params(double gamma, double delta, double epsilon);

/// Matrix product m2 * m1; applying the result equals applying m1 then m2.
MoebiusMatrix compose_moebius(const MoebiusMatrix& m2, const MoebiusMatrix& m1);

std::complex<double> apply_moebius(const MoebiusMatrix& m, std::complex<double> Z);
CJet2 apply_moebius(const MoebiusMatrix& m, const CJet2& Z);

/// Z -> Z / (1 + i epsilon Z); equals the matrix (1, 0, -epsilon, 1).
std::complex<double> apply_x5_action(double epsilon, std::complex<double> Z);
CJet2 apply_x5_action(double epsilon, const CJet2& Z);

/// Z -> e^delta Z + i gamma.
std::complex<double> shift_scale(double gamma, double delta, std::complex<double> Z);
CJet2 shift_scale(double gamma, double delta, const CJet2& Z);

/// Z = (1 + i Zo) / (i + Zo) for a real potential Zo > 0. Equals
/// sech(F) + i tanh(F) with F = ln Zo, and coincides with the matrix from
/// moebius_from_params(-1/2, -ln 2, -1).
std::complex<double> ehlers_from_real(double Zo);

enum class TargetGenerator { X3, X4, X5 };

/// Central difference (step 1e-6) of the one-parameter action at parameter 0
/// minus the generator coefficients (eta_K, eta_L) at Z; near-zero for a
/// correct action/generator pair. Packed as (dK_err + i dL_err).
std::complex<double> generator_derivative_check(TargetGenerator gen, std::complex<double> Z);

// -- whole-field transforms ---------------------------------------------------

/// Samples the base field at the transformed coordinates; jets pick up the
/// coordinate Jacobian automatically.
PotentialField with_coordinate_action(const CoordinateAction& act, PotentialField base);

/// Pointwise target-space maps; jets propagate through the complex chain rule.
PotentialField with_moebius(const MoebiusMatrix& m, PotentialField base);
PotentialField with_shift_scale(double gamma, double delta, PotentialField base);
PotentialField with_x5(double epsilon, PotentialField base);

/// Z = K + iL as a complex jet, and back.
CJet2 to_complex_jet(const PotentialSample& s);
PotentialSample from_complex_jet(const CJet2& z);

}  // namespace ernst
