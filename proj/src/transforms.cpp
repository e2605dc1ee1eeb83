#include "ernst/transforms.hpp"

#include <cmath>
#include <cstdio>

namespace ernst {

namespace {

using cpx = std::complex<double>;
constexpr cpx kI{0.0, 1.0};

double magnitude(const cpx& z) { return std::abs(z); }
double magnitude(const CJet2& z) { return std::abs(z.value); }

// i (a Z + i b) / (c Z + i d), generic over complex scalars and complex jets
template <typename ZT>
ZT moebius_map(const MoebiusMatrix& m, const ZT& Z) {
    const ZT num = Z * cpx(m.a()) + cpx(0.0, m.b());
    const ZT den = Z * cpx(m.c()) + cpx(0.0, m.d());
    if (magnitude(den) < 1e-12 * (1.0 + magnitude(Z))) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "moebius map: pole, |cZ+id| = %.3g", magnitude(den));
        throw PoleError(buf);
    }
    return num * kI / den;
}

template <typename ZT>
ZT x5_map(double epsilon, const ZT& Z) {
    const ZT den = Z * (kI * epsilon) + cpx(1.0);
    if (magnitude(den) < 1e-12 * (1.0 + magnitude(Z))) throw PoleError("x5 action: pole, 1 + i eps Z = 0");
    return Z / den;
}

template <typename ZT>
ZT shift_scale_map(double gamma, double delta, const ZT& Z) {
    return Z * cpx(std::exp(delta)) + cpx(0.0, gamma);
}

}  // namespace

void validate(const CoordinateAction& act) {
    if (!(act.scale > 0.0)) throw ValidationError("coordinate action: scale must be positive");
    if (!std::isfinite(act.shift)) throw ValidationError("coordinate action: shift must be finite");
}

std::pair<double, double> apply_coordinate_action(const CoordinateAction& act, double f, double g) {
    validate(act);
    return {act.scale * f + act.shift, act.scale * g - act.shift};
}

MoebiusMatrix::MoebiusMatrix(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    const double det = a * d - b * c;
    if (!(std::abs(det - 1.0) <= 1e-12)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "moebius matrix: determinant %.17g != 1", det);
        throw ValidationError(buf);
    }
}

MoebiusMatrix MoebiusMatrix::normalized(double a, double b, double c, double d) {
    const bool flip = a < 0.0 || (a == 0.0 && c < 0.0);
    return flip ? MoebiusMatrix(-a, -b, -c, -d) : MoebiusMatrix(a, b, c, d);
}

MoebiusMatrix moebius_from_params(double gamma, double delta, double epsilon) {
    const double ep = std::exp(delta / 2.0);
    const double em = std::exp(-delta / 2.0);
    return {ep, gamma * em, -epsilon * ep, (1.0 - epsilon * gamma) * em};
}

MoebiusMatrix compose_moebius(const MoebiusMatrix& m2, const MoebiusMatrix& m1) {
    return {m2.a() * m1.a() + m2.b() * m1.c(), m2.a() * m1.b() + m2.b() * m1.d(),
            m2.c() * m1.a() + m2.d() * m1.c(), m2.c() * m1.b() + m2.d() * m1.d()};
}

std::complex<double> apply_moebius(const MoebiusMatrix& m, std::complex<double> Z) {
    return moebius_map(m, Z);
}

CJet2 apply_moebius(const MoebiusMatrix& m, const CJet2& Z) { return moebius_map(m, Z); }

std::complex<double> apply_x5_action(double epsilon, std::complex<double> Z) {
    return x5_map(epsilon, Z);
}

CJet2 apply_x5_action(double epsilon, const CJet2& Z) { return x5_map(epsilon, Z); }

std::complex<double> shift_scale(double gamma, double delta, std::complex<double> Z) {
    return shift_scale_map(gamma, delta, Z);
}

CJet2 shift_scale(double gamma, double delta, const CJet2& Z) {
    return shift_scale_map(gamma, delta, Z);
}

std::complex<double> ehlers_from_real(double Zo) {
    if (!(Zo > 0.0)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "ehlers_from_real: requires Zo > 0, got %.17g", Zo);
        throw DomainError(buf);
    }
    return (1.0 + kI * Zo) / (kI + Zo);
}

std::complex<double> generator_derivative_check(TargetGenerator gen, std::complex<double> Z) {
    const double h = 1e-6;
    cpx plus, minus, expected;
    const double K = Z.real(), L = Z.imag();
    switch (gen) {
        case TargetGenerator::X3:
            plus = shift_scale(h, 0.0, Z);
            minus = shift_scale(-h, 0.0, Z);
            expected = {0.0, 1.0};
            break;
        case TargetGenerator::X4:
            plus = shift_scale(0.0, h, Z);
            minus = shift_scale(0.0, -h, Z);
            expected = {K, L};
            break;
        case TargetGenerator::X5:
            plus = apply_x5_action(h, Z);
            minus = apply_x5_action(-h, Z);
            expected = {2.0 * K * L, L * L - K * K};
            break;
    }
    const cpx numeric = (plus - minus) / (2.0 * h);
    return numeric - expected;
}

CJet2 to_complex_jet(const PotentialSample& s) {
    CJet2 z;
    z.value = {s.K.value, s.L.value};
    z.d_f = {s.K.d_f, s.L.d_f};
    z.d_g = {s.K.d_g, s.L.d_g};
    z.d_ff = {s.K.d_ff, s.L.d_ff};
    z.d_fg = {s.K.d_fg, s.L.d_fg};
    z.d_gg = {s.K.d_gg, s.L.d_gg};
    return z;
}

PotentialSample from_complex_jet(const CJet2& z) {
    PotentialSample s;
    s.K = {z.value.real(), z.d_f.real(), z.d_g.real(), z.d_ff.real(), z.d_fg.real(), z.d_gg.real()};
    s.L = {z.value.imag(), z.d_f.imag(), z.d_g.imag(), z.d_ff.imag(), z.d_fg.imag(), z.d_gg.imag()};
    return s;
}

PotentialField with_coordinate_action(const CoordinateAction& act, PotentialField base) {
    validate(act);
    return [act, base = std::move(base)](const Jet2d& f, const Jet2d& g) {
        return base(act.scale * f + act.shift, act.scale * g - act.shift);
    };
}

PotentialField with_moebius(const MoebiusMatrix& m, PotentialField base) {
    return [m, base = std::move(base)](const Jet2d& f, const Jet2d& g) {
        return from_complex_jet(apply_moebius(m, to_complex_jet(base(f, g))));
    };
}

PotentialField with_shift_scale(double gamma, double delta, PotentialField base) {
    return [gamma, delta, base = std::move(base)](const Jet2d& f, const Jet2d& g) {
        return from_complex_jet(shift_scale(gamma, delta, to_complex_jet(base(f, g))));
    };
}

PotentialField with_x5(double epsilon, PotentialField base) {
    return [epsilon, base = std::move(base)](const Jet2d& f, const Jet2d& g) {
        return from_complex_jet(apply_x5_action(epsilon, to_complex_jet(base(f, g))));
    };
}

}  // namespace ernst
