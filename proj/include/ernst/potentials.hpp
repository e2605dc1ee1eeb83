#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "ernst/jets.hpp"

namespace ernst {

/// Constants of the two real closed-form solution families.
/// A = 0 collapses K to zero and B appears as a divisor, so both are rejected.
struct FamilyParams {
    double A = 1.0;
    double B = 1.0;
    double C = 0.0;

    bool operator==(const FamilyParams&) const = default;
};

void validate(const FamilyParams& p);

/// One sample of the complex potential Z = K + iL with full second-order jets.
struct PotentialSample {
    Jet2d K;
    Jet2d L;

    std::complex<double> z() const { return {K.value, L.value}; }
    /// True on the admissible branch where the Ernst denominator 2K stays positive.
    bool k_positive() const { return K.value > 0.0; }
};

/// A potential field maps coordinate jets to a sample. Evaluating on lifted
/// coordinates gives plain partials; evaluating on transformed coordinate
/// jets gives the chain rule for free.
using PotentialField = std::function<PotentialSample(const Jet2d& f, const Jet2d& g)>;

PotentialSample sample_at(const PotentialField& field, double f, double g);

// -- translation-invariant family: depends on f+g only ----------------------

/// K = (2A/B)(f+g)^A / (1+(f+g)^{2A}), L = (A/B)(1-(f+g)^{2A})/(1+(f+g)^{2A}) + C.
/// Equivalently K = (A/B) sech(A ln(f+g)) and L - C = -(A/B) tanh(A ln(f+g)):
/// the family is the sech/tanh image of F = -A ln(f+g) scaled by A/B. Note
/// the minus sign on the tanh relative to epd_to_ernst.
PotentialSample eval_x1_family(const FamilyParams& p, const Jet2d& f, const Jet2d& g);
PotentialSample eval_x1_family(const FamilyParams& p, double f, double g);
PotentialField make_x1_field(const FamilyParams& p);

// -- dilation-invariant family: depends on f/g only --------------------------

PotentialSample eval_x2_family(const FamilyParams& p, const Jet2d& f, const Jet2d& g);
PotentialSample eval_x2_family(const FamilyParams& p, double f, double g);
PotentialField make_x2_field(const FamilyParams& p);

// -- general csc/cot quadrature family, complex-valued -----------------------

/// Constants of the csc/cot family. The two branch signs choose the sign of
/// K and of L - c4 independently; c1 and c2 must be nonzero.
struct TrigFamilyParams {
    std::complex<double> c1{1.0, 0.0};
    std::complex<double> c2{1.0, 0.0};
    std::complex<double> c3{0.0, 0.0};
    std::complex<double> c4{0.0, 0.0};
    int branch_K = +1;
    int branch_L = +1;
};

enum class TrigVariant { I, II };  ///< I: c3 - ln(f+g), II: c3 + ln(f+g)

void validate(const TrigFamilyParams& p);

std::pair<std::complex<double>, std::complex<double>> eval_trig_family(const TrigFamilyParams& p,
                                                                       TrigVariant variant, double f,
                                                                       double g);

// -- Euler-Poisson-Darboux potentials ----------------------------------------

/// Closed-form solutions of 2(f+g) F_fg + F_f + F_g = 0 used as building
/// blocks; the equation is linear, so weighted sums stay solutions.
enum class EpdBasis { Constant, LogSum, ArctanRatio, Antisym };

const char* epd_basis_name(EpdBasis tag);
EpdBasis epd_basis_from_name(const std::string& name);

struct EpdTerm {
    double weight = 0.0;
    EpdBasis basis = EpdBasis::Constant;

    bool operator==(const EpdTerm&) const = default;
};

/// Empty combination means F == 0.
using EpdCombination = std::vector<EpdTerm>;

Jet2d epd_basis_eval(EpdBasis tag, const Jet2d& f, const Jet2d& g);
Jet2d epd_combination_eval(const EpdCombination& combo, const Jet2d& f, const Jet2d& g);

/// 2(f+g) F_fg + F_f + F_g at a point, from the jet of F.
double epd_residual(const Jet2d& F, double f, double g);

/// Z = sech(F) + i tanh(F); an Ernst solution whenever F solves the EPD
/// equation.
PotentialSample epd_to_ernst(const Jet2d& F);
PotentialField make_epd_field(EpdCombination combo);

// -- residuals ----------------------------------------------------------------

struct Residual {
    double resK = 0.0;
    double resL = 0.0;
};

/// Residuals of the real split of the hyperbolic Ernst equation:
///   resK = K[2 K_fg + (K_f+K_g)/(f+g)] - 2(K_f K_g - L_f L_g)
///   resL = K[2 L_fg + (L_f+L_g)/(f+g)] - 2(K_f L_g + K_g L_f)
Residual ernst_residual(const PotentialSample& s, double f, double g);

enum class SurfaceGenerator { X1, X2 };

/// Invariant-surface conditions: X1 checks K_g - K_f (translation
/// invariance along f-g), X2 checks f K_f + g K_g (scale invariance).
Residual invariant_surface_residual(const PotentialField& field, SurfaceGenerator gen, double f,
                                    double g);

}  // namespace ernst
