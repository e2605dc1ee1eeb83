#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ernst/jets.hpp"

namespace ernst {

/// Point of the reduced-equation jet space with coordinates
/// (f, K, K1, K2[, K3]); g enters as a parameter through f+g.
struct JetPoint {
    double f = 0.0;
    double g = 0.0;
    double K = 1.0;
    double K1 = 0.0;
    double K2 = 0.0;
    std::optional<double> K3;
};

void validate(const JetPoint& p);

/// Right-hand side of the third-order reduced equation K_fff = F:
/// F = -4 K1^3/K^2 - 3 K2/(f+g) - K1/(f+g)^2 + 5 K1 K2/K + 5 K1^2/(K(f+g)).
double rhs_F(const JetPoint& p);

/// The two integrating factors of the reduced equation:
/// Lambda1 = (f+g)^2/K, Lambda2 = (f+g)^2/K^3.
enum class IntegratingFactor { Lambda1, Lambda2 };

double integrating_factor(IntegratingFactor tag, double f, double g, double K);

/// First integrals paired with Lambda1/Lambda2:
///   psi1 = (f+g)/K^2 { K1 [K - 2(f+g) K1] + (f+g) K K2 }
///   psi2 = (f+g)/K^4 { K1 [K -  (f+g) K1] + (f+g) K K2 }
std::pair<double, double> psi_values(const JetPoint& p);

/// psi1 = c1 and psi2 = c2 collapse the third-order equation to first order;
/// returns (c1 K^2 + (f+g)^2 K1^2)/K^4 - c2.
double reduced_ode_residual(const JetPoint& p, double c1, double c2);

/// The identity psi2 K^4 - psi1 K^2 - (f+g)^2 K1^2 == 0 (exact algebra);
/// returns the floating evaluation of the left side.
double psi_algebraic_identity(const JetPoint& p);

/// Off-shell check of the integrating-factor relation
/// d(psi)/df == Lambda (K3 - F) along an arbitrary smooth trajectory K(f).
/// K_traj holds the Taylor coefficients of K about f; the total derivative
/// of psi is computed independently with Taylor arithmetic. Returns the
/// difference, which must vanish for any trajectory, solution or not.
double first_integral_identity_check(const Taylor3d& K_traj, double f, double g,
                                     IntegratingFactor tag);

/// One separable term of an integrating-factor ansatz:
/// coeff * (f+g)^fg_pow * K^K_pow.
struct AlphaTerm {
    double coeff = 0.0;
    int fg_pow = 0;
    int K_pow = 0;
};

/// alpha(f, K) = c1 (f+g)^2/K + c2 (f+g)^2/K^3, the full solution space of
/// the determining system below.
struct AlphaAnsatz {
    double c1 = 0.0;
    double c2 = 0.0;

    std::vector<AlphaTerm> terms() const;
};

void validate(const AlphaAnsatz& a);

/// Residuals of the six linear determining equations for a zeroth-order
/// integrating factor alpha(f, K), with the per-equation term scale
/// (sum of summand magnitudes). The residuals cancel exactly in real
/// arithmetic on the solution space, so roundoff must be judged against
/// the scale when K is small.
struct DeterminingSystem {
    std::array<double, 6> residual{};
    std::array<double, 6> scale{};
};

DeterminingSystem determining_system(const std::vector<AlphaTerm>& alpha, double f, double g,
                                     double K);

/// Residuals of the six equations, evaluated with exact symbolic partials of
/// the separable ansatz.
std::array<double, 6> determining_system_residuals(const std::vector<AlphaTerm>& alpha, double f,
                                                   double g, double K);
std::array<double, 6> determining_system_residuals(const AlphaAnsatz& a, double f, double g, double K);

/// Reconstructs the first integral by quadrature of the exact 1-form along
/// the axis-parallel path (0, Ktilde, 0, 0) -> (f, Ktilde, 0, 0) ->
/// (f, K, 0, 0) -> (f, K, K1, 0) -> (f, K, K1, K2). Adaptive quadrature to
/// tolerance 1e-8. Independent of psi_values by construction.
double line_integral_first_integral(const JetPoint& endpoint, IntegratingFactor tag, double Ktilde);

/// Default start value sign(K) * 1 keeping the path clear of K = 0.
double default_Ktilde(const JetPoint& endpoint);

}  // namespace ernst
