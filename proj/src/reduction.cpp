#include "ernst/reduction.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

namespace ernst {

namespace {

double ipow(double base, int n) {
    if (n < 0) return 1.0 / ipow(base, -n);
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

// falling factorial q (q-1) ... (q-k+1)
double falling(int q, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= double(q - i);
    return r;
}

[[noreturn]] void jet_domain_fail(const char* what, const JetPoint& p) {
    char buf[200];
    std::snprintf(buf, sizeof(buf), "%s (f=%.17g, g=%.17g, K=%.17g, K1=%.17g, K2=%.17g)", what, p.f,
                  p.g, p.K, p.K1, p.K2);
    throw DomainError(buf);
}

int factor_K_power(IntegratingFactor tag) { return tag == IntegratingFactor::Lambda1 ? -1 : -3; }

// partials of Lambda = s^2 K^p needed by the exact 1-form
struct LambdaPartials {
    double v, f, ff, K, KK, fK;
};

LambdaPartials lambda_partials(IntegratingFactor tag, double s, double K) {
    const int p = factor_K_power(tag);
    const double Kp = ipow(K, p);
    const double Kp1 = ipow(K, p - 1);
    const double Kp2 = ipow(K, p - 2);
    LambdaPartials L;
    L.v = s * s * Kp;
    L.f = 2.0 * s * Kp;
    L.ff = 2.0 * Kp;
    L.K = double(p) * s * s * Kp1;
    L.KK = double(p) * double(p - 1) * s * s * Kp2;
    L.fK = 2.0 * double(p) * s * Kp1;
    return L;
}

// partials of the right-hand side F entering the 1-form; F is linear in K2
struct RhsPartials {
    double F, F_K1, F_K2, F_K2f, F_K2K, F_K2K1;
};

RhsPartials rhs_partials(double s, double K, double K1, double K2) {
    RhsPartials r;
    r.F = -4.0 * K1 * K1 * K1 / (K * K) - 3.0 * K2 / s - K1 / (s * s) + 5.0 * K1 * K2 / K +
          5.0 * K1 * K1 / (K * s);
    r.F_K1 = -12.0 * K1 * K1 / (K * K) - 1.0 / (s * s) + 5.0 * K2 / K + 10.0 * K1 / (K * s);
    r.F_K2 = -3.0 / s + 5.0 * K1 / K;
    r.F_K2f = 3.0 / (s * s);
    r.F_K2K = -5.0 * K1 / (K * K);
    r.F_K2K1 = 5.0 / K;
    return r;
}

// coefficient of (dK - K1 df) in the exact 1-form
double one_form_P(IntegratingFactor tag, double f, double g, double K, double K1, double K2) {
    const double s = f + g;
    const LambdaPartials lp = lambda_partials(tag, s, K);
    const RhsPartials rp = rhs_partials(s, K, K1, K2);
    return -rp.F_K1 * lp.v + (rp.F_K2f * lp.v + rp.F_K2 * lp.f) +
           K1 * (rp.F_K2K * lp.v + rp.F_K2 * lp.K) + K2 * rp.F_K2K1 * lp.v + K2 * lp.K + lp.ff +
           K1 * K1 * lp.KK + 2.0 * K1 * lp.fK;
}

// coefficient of -(dK1 - K2 df); F is linear in K2, so K2 drops out
double one_form_Q(IntegratingFactor tag, double f, double g, double K, double K1) {
    const double s = f + g;
    const LambdaPartials lp = lambda_partials(tag, s, K);
    const RhsPartials rp = rhs_partials(s, K, K1, 0.0);
    return rp.F_K2 * lp.v + lp.f + K1 * lp.K;
}

double adaptive_simpson_step(const std::function<double(double)>& fn, double a, double fa, double b,
                             double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = fn(lm), frm = fn(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
    if (depth <= 0) throw ToleranceError("adaptive quadrature: subdivision cap reached");
    return adaptive_simpson_step(fn, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_step(fn, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

// adaptive composite Simpson rule; 2^20 subinterval cap = recursion depth 20
double adaptive_simpson(const std::function<double(double)>& fn, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = fn(a), fb = fn(b), fm = fn(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_step(fn, a, fa, b, fb, m, fm, whole, tol, 20);
}

}  // namespace

void validate(const JetPoint& p) {
    if (p.K == 0.0) jet_domain_fail("jet point requires K != 0", p);
    if (!(p.f + p.g > 0.0)) jet_domain_fail("jet point requires f+g > 0", p);
}

double rhs_F(const JetPoint& p) {
    validate(p);
    return rhs_partials(p.f + p.g, p.K, p.K1, p.K2).F;
}

double integrating_factor(IntegratingFactor tag, double f, double g, double K) {
    if (K == 0.0) throw DomainError("integrating factor: K must be nonzero");
    const double s = f + g;
    return s * s * ipow(K, factor_K_power(tag));
}

std::pair<double, double> psi_values(const JetPoint& p) {
    validate(p);
    const double s = p.f + p.g;
    const double K = p.K, K1 = p.K1, K2 = p.K2;
    const double psi1 = s / (K * K) * (K1 * (K - 2.0 * s * K1) + s * K * K2);
    const double psi2 = s / (K * K * K * K) * (K1 * (K - s * K1) + s * K * K2);
    return {psi1, psi2};
}

double reduced_ode_residual(const JetPoint& p, double c1, double c2) {
    validate(p);
    const double s = p.f + p.g;
    const double K2sq = p.K * p.K;
    return (c1 * K2sq + s * s * p.K1 * p.K1) / (K2sq * K2sq) - c2;
}

double psi_algebraic_identity(const JetPoint& p) {
    const auto [psi1, psi2] = psi_values(p);
    const double s = p.f + p.g;
    const double K2sq = p.K * p.K;
    return psi2 * K2sq * K2sq - psi1 * K2sq - s * s * p.K1 * p.K1;
}

double first_integral_identity_check(const Taylor3d& K_traj, double f, double g,
                                     IntegratingFactor tag) {
    const double K = K_traj.c[0];
    const double K1 = K_traj.c[1];
    const double K2 = 2.0 * K_traj.c[2];
    const double K3 = 6.0 * K_traj.c[3];
    const JetPoint p{f, g, K, K1, K2, K3};
    validate(p);

    // total derivative of psi along the trajectory, by Taylor arithmetic:
    // feed psi the series of f, K(f), K1(f), K2(f) and read the linear term
    const Taylor3d f_t = Taylor3d::variable(f);
    const Taylor3d s_t = f_t + g;
    const Taylor3d K_t = K_traj;
    const Taylor3d K1_t = K_traj.derivative();
    const Taylor3d K2_t = K1_t.derivative();

    Taylor3d psi_t;
    const Taylor3d brace1 = K1_t * (K_t - 2.0 * (s_t * K1_t)) + s_t * K_t * K2_t;
    const Taylor3d brace2 = K1_t * (K_t - s_t * K1_t) + s_t * K_t * K2_t;
    if (tag == IntegratingFactor::Lambda1) {
        psi_t = s_t / (K_t * K_t) * brace1;
    } else {
        psi_t = s_t / (K_t * K_t * K_t * K_t) * brace2;
    }
    const double dpsi_df = psi_t.c[1];

    const double lambda = integrating_factor(tag, f, g, K);
    return dpsi_df - lambda * (K3 - rhs_F(p));
}

std::vector<AlphaTerm> AlphaAnsatz::terms() const {
    return {{c1, 2, -1}, {c2, 2, -3}};
}

void validate(const AlphaAnsatz& a) {
    if (a.c1 == 0.0 && a.c2 == 0.0)
        throw ValidationError("integrating-factor ansatz: c1 and c2 must not both vanish");
}

DeterminingSystem determining_system(const std::vector<AlphaTerm>& alpha, double f, double g,
                                     double K) {
    if (K == 0.0) throw DomainError("determining system: K must be nonzero");
    const double s = f + g;
    if (!(s > 0.0)) throw DomainError("determining system: f+g must be positive");

    // exact partial d^df d^dK of the separable ansatz
    auto part = [&](int df, int dK) {
        double sum = 0.0;
        for (const AlphaTerm& t : alpha) {
            sum += t.coeff * falling(t.fg_pow, df) * falling(t.K_pow, dK) * ipow(s, t.fg_pow - df) *
                   ipow(K, t.K_pow - dK);
        }
        return sum;
    };

    const double a = part(0, 0);
    const double a_K = part(0, 1), a_KK = part(0, 2), a_KKK = part(0, 3);
    const double a_f = part(1, 0), a_ff = part(2, 0), a_fff = part(3, 0);
    const double a_fK = part(1, 1), a_fKK = part(1, 2), a_ffK = part(2, 1);

    DeterminingSystem out;
    auto equation = [&out](int i, std::initializer_list<double> summands) {
        double sum = 0.0, scale = 0.0;
        for (double term : summands) {
            sum += term;
            scale += std::abs(term);
        }
        out.residual[i] = sum;
        out.scale[i] = scale;
    };

    equation(0, {9.0 / (K * K) * a, 15.0 / K * a_K, 3.0 * a_KK});
    equation(1, {-6.0 / (K * K * K) * a, -2.0 / (K * K) * a_K, 5.0 / K * a_KK, a_KKK});
    equation(2, {-10.0 / (s * K) * a, -6.0 / s * a_K, 5.0 / K * a_f, 3.0 * a_fK});
    equation(3, {-8.0 / (s * s * s) * a, 7.0 / (s * s) * a_f, -3.0 / s * a_ff, a_fff});
    equation(4, {5.0 / (s * K * K) * a, -5.0 / (s * K) * a_K, -3.0 / s * a_KK, 2.0 / (K * K) * a_f,
                 10.0 / K * a_fK, 3.0 * a_fKK});
    equation(5, {10.0 / (s * s * K) * a, 6.0 / (s * s) * a_K, -10.0 / (s * K) * a_f, -6.0 / s * a_fK,
                 5.0 / K * a_ff, 3.0 * a_ffK});
    return out;
}

std::array<double, 6> determining_system_residuals(const std::vector<AlphaTerm>& alpha, double f,
                                                   double g, double K) {
    return determining_system(alpha, f, g, K).residual;
}

std::array<double, 6> determining_system_residuals(const AlphaAnsatz& a, double f, double g,
                                                   double K) {
    validate(a);
    return determining_system_residuals(a.terms(), f, g, K);
}

double default_Ktilde(const JetPoint& endpoint) { return endpoint.K >= 0.0 ? 1.0 : -1.0; }

double line_integral_first_integral(const JetPoint& endpoint, IntegratingFactor tag, double Ktilde) {
    validate(endpoint);
    if (Ktilde == 0.0 || (Ktilde > 0.0) != (endpoint.K > 0.0))
        jet_domain_fail("line integral: Ktilde must share the sign of the endpoint K", endpoint);

    const double f = endpoint.f, g = endpoint.g;
    const double K = endpoint.K, K1 = endpoint.K1, K2 = endpoint.K2;
    const double tol = 1e-8;

    // leg 1: f' from 0 to f at (Ktilde, 0, 0); only -Lambda F df survives
    const double leg_f = adaptive_simpson(
        [&](double x) {
            return -integrating_factor(tag, x, g, Ktilde) *
                   rhs_partials(x + g, Ktilde, 0.0, 0.0).F;
        },
        0.0, f, tol);

    // leg 2: K' from Ktilde to K at (f, ., 0, 0); P dK
    const double leg_K = adaptive_simpson(
        [&](double kappa) { return one_form_P(tag, f, g, kappa, 0.0, 0.0); }, Ktilde, K, tol);

    // leg 3: K1' from 0 to K1; -Q dK1
    const double leg_K1 =
        adaptive_simpson([&](double u) { return -one_form_Q(tag, f, g, K, u); }, 0.0, K1, tol);

    // leg 4: K2' from 0 to K2; Lambda dK2, a constant integrand
    const double leg_K2 = integrating_factor(tag, f, g, K) * K2;

    return leg_f + leg_K + leg_K1 + leg_K2;
}

}  // namespace ernst
