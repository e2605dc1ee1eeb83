#include "ernst/potentials.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace ernst {

namespace {

[[noreturn]] void point_domain_fail(const char* what, double f, double g) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s at (f, g) = (%.17g, %.17g)", what, f, g);
    throw DomainError(buf);
}

Jet2d require_positive_sum(const Jet2d& f, const Jet2d& g) {
    Jet2d s = f + g;
    if (!(s.value > 0.0)) point_domain_fail("requires f+g > 0", f.value, g.value);
    return s;
}

void require_positive_coords(const Jet2d& f, const Jet2d& g) {
    if (!(f.value > 0.0 && g.value > 0.0))
        point_domain_fail("requires f > 0 and g > 0", f.value, g.value);
}

}  // namespace

void validate(const FamilyParams& p) {
    if (p.A == 0.0) throw ValidationError("family parameter A must be nonzero");
    if (p.B == 0.0) throw ValidationError("family parameter B must be nonzero");
    if (!(std::isfinite(p.A) && std::isfinite(p.B) && std::isfinite(p.C)))
        throw ValidationError("family parameters must be finite");
}

PotentialSample sample_at(const PotentialField& field, double f, double g) {
    return field(Jet2d::lift_f(f), Jet2d::lift_g(g));
}

PotentialSample eval_x1_family(const FamilyParams& p, const Jet2d& f, const Jet2d& g) {
    validate(p);
    const Jet2d s = require_positive_sum(f, g);
    const Jet2d t = pow(s, p.A);         // (f+g)^A
    const Jet2d t2 = t * t;              // (f+g)^(2A)
    const Jet2d den = reciprocal(t2 + 1.0);
    PotentialSample out;
    out.K = (2.0 * p.A / p.B) * (t * den);
    out.L = (p.A / p.B) * ((1.0 - t2) * den) + p.C;
    return out;
}

PotentialSample eval_x1_family(const FamilyParams& p, double f, double g) {
    return eval_x1_family(p, Jet2d::lift_f(f), Jet2d::lift_g(g));
}

PotentialField make_x1_field(const FamilyParams& p) {
    validate(p);
    return [p](const Jet2d& f, const Jet2d& g) { return eval_x1_family(p, f, g); };
}

PotentialSample eval_x2_family(const FamilyParams& p, const Jet2d& f, const Jet2d& g) {
    validate(p);
    require_positive_coords(f, g);
    const Jet2d ratio = f / g;
    const Jet2d F = (2.0 * p.A) * atan(sqrt(ratio));
    PotentialSample out;
    out.K = (p.A / p.B) * sech(F);
    out.L = (p.A / p.B) * tanh(F) + p.C;
    return out;
}

PotentialSample eval_x2_family(const FamilyParams& p, double f, double g) {
    return eval_x2_family(p, Jet2d::lift_f(f), Jet2d::lift_g(g));
}

PotentialField make_x2_field(const FamilyParams& p) {
    validate(p);
    return [p](const Jet2d& f, const Jet2d& g) { return eval_x2_family(p, f, g); };
}

void validate(const TrigFamilyParams& p) {
    if (p.c1 == std::complex<double>(0.0)) throw ValidationError("trig family: c1 must be nonzero");
    if (p.c2 == std::complex<double>(0.0)) throw ValidationError("trig family: c2 must be nonzero");
    if (p.branch_K != 1 && p.branch_K != -1) throw ValidationError("trig family: branch_K must be +-1");
    if (p.branch_L != 1 && p.branch_L != -1) throw ValidationError("trig family: branch_L must be +-1");
}

std::pair<std::complex<double>, std::complex<double>> eval_trig_family(const TrigFamilyParams& p,
                                                                       TrigVariant variant, double f,
                                                                       double g) {
    validate(p);
    const double s = f + g;
    if (!(s > 0.0)) point_domain_fail("trig family requires f+g > 0", f, g);

    using cpx = std::complex<double>;
    const cpx root_c1 = std::sqrt(p.c1);
    const double sign = (variant == TrigVariant::I) ? -1.0 : 1.0;
    const cpx arg = root_c1 * (p.c3 + sign * std::log(s));
    const cpx sn = std::sin(arg);
    if (std::abs(sn) < detail::kTrigPoleTol) point_domain_fail("trig family: pole of csc/cot", f, g);

    // square roots of c1/c2 and -c1/c2 assembled from the principal roots of
    // c1 and c2; the branch flags absorb the remaining sign freedom (signed
    // zeros make sqrt of a ratio land on either side of the cut)
    const cpx root_ratio = root_c1 / std::sqrt(p.c2);
    const cpx root_neg_ratio = cpx(0.0, 1.0) * root_ratio;

    const cpx K = double(p.branch_K) * root_ratio / sn;
    const cpx L = double(p.branch_L) * root_neg_ratio * std::cos(arg) / sn + p.c4;
    return {K, L};
}

const char* epd_basis_name(EpdBasis tag) {
    switch (tag) {
        case EpdBasis::Constant: return "const";
        case EpdBasis::LogSum: return "log-sum";
        case EpdBasis::ArctanRatio: return "arctan-ratio";
        case EpdBasis::Antisym: return "antisym";
    }
    return "?";
}

EpdBasis epd_basis_from_name(const std::string& name) {
    if (name == "const") return EpdBasis::Constant;
    if (name == "log-sum") return EpdBasis::LogSum;
    if (name == "arctan-ratio") return EpdBasis::ArctanRatio;
    if (name == "antisym") return EpdBasis::Antisym;
    throw ValidationError("unknown EPD basis tag: " + name);
}

Jet2d epd_basis_eval(EpdBasis tag, const Jet2d& f, const Jet2d& g) {
    switch (tag) {
        case EpdBasis::Constant:
            return Jet2d::constant(1.0);
        case EpdBasis::LogSum:
            return log(require_positive_sum(f, g));
        case EpdBasis::ArctanRatio:
            require_positive_coords(f, g);
            return atan(sqrt(f / g));
        case EpdBasis::Antisym:
            return f - g;
    }
    throw ValidationError("unknown EPD basis tag");
}

Jet2d epd_combination_eval(const EpdCombination& combo, const Jet2d& f, const Jet2d& g) {
    Jet2d F = Jet2d::constant(0.0);
    for (const EpdTerm& term : combo) {
        if (!std::isfinite(term.weight)) throw ValidationError("EPD combination weight must be finite");
        F = F + term.weight * epd_basis_eval(term.basis, f, g);
    }
    return F;
}

double epd_residual(const Jet2d& F, double f, double g) {
    return 2.0 * (f + g) * F.d_fg + F.d_f + F.d_g;
}

PotentialSample epd_to_ernst(const Jet2d& F) {
    PotentialSample out;
    out.K = sech(F);
    out.L = tanh(F);
    return out;
}

PotentialField make_epd_field(EpdCombination combo) {
    return [combo = std::move(combo)](const Jet2d& f, const Jet2d& g) {
        return epd_to_ernst(epd_combination_eval(combo, f, g));
    };
}

Residual ernst_residual(const PotentialSample& s, double f, double g) {
    const double sum = f + g;
    if (sum == 0.0) point_domain_fail("ernst_residual requires f+g != 0", f, g);
    const Jet2d& K = s.K;
    const Jet2d& L = s.L;
    Residual r;
    r.resK = K.value * (2.0 * K.d_fg + (K.d_f + K.d_g) / sum) - 2.0 * (K.d_f * K.d_g - L.d_f * L.d_g);
    r.resL = K.value * (2.0 * L.d_fg + (L.d_f + L.d_g) / sum) - 2.0 * (K.d_f * L.d_g + K.d_g * L.d_f);
    return r;
}

Residual invariant_surface_residual(const PotentialField& field, SurfaceGenerator gen, double f,
                                    double g) {
    const PotentialSample s = sample_at(field, f, g);
    Residual r;
    switch (gen) {
        case SurfaceGenerator::X1:
            r.resK = s.K.d_g - s.K.d_f;
            r.resL = s.L.d_g - s.L.d_f;
            break;
        case SurfaceGenerator::X2:
            r.resK = g * s.K.d_g + f * s.K.d_f;
            r.resL = g * s.L.d_g + f * s.L.d_f;
            break;
    }
    return r;
}

}  // namespace ernst
