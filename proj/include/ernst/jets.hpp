#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <type_traits>

#include "ernst/errors.hpp"

namespace ernst {

/// Bivariate truncated Taylor value: carries the value of a field of two
/// coordinates (f, g) together with its partials through the mixed second
/// derivative. Arithmetic is the truncated Taylor algebra, so evaluating a
/// closed-form expression on lifted coordinates yields exact derivatives.
template <typename T>
struct Jet2 {
    T value{};
    T d_f{}, d_g{};
    T d_ff{}, d_fg{}, d_gg{};

    Jet2() = default;
    Jet2(T v) : value(v) {}
    Jet2(T v, T df, T dg, T dff, T dfg, T dgg)
        : value(v), d_f(df), d_g(dg), d_ff(dff), d_fg(dfg), d_gg(dgg) {}

    static Jet2 constant(T v) { return Jet2(v); }
    /// Coordinate lift: d_f = 1, every other derivative slot 0.
    static Jet2 lift_f(T v) {
        Jet2 j(v);
        j.d_f = T(1);
        return j;
    }
    static Jet2 lift_g(T v) {
        Jet2 j(v);
        j.d_g = T(1);
        return j;
    }

    bool operator==(const Jet2&) const = default;
};

using Jet2d = Jet2<double>;
using CJet2 = Jet2<std::complex<double>>;

template <typename T>
Jet2<T> operator+(const Jet2<T>& x) {
    return x;
}

template <typename T>
Jet2<T> operator-(const Jet2<T>& x) {
    return {-x.value, -x.d_f, -x.d_g, -x.d_ff, -x.d_fg, -x.d_gg};
}

template <typename T>
Jet2<T> operator+(const Jet2<T>& x, const Jet2<T>& y) {
    return {x.value + y.value, x.d_f + y.d_f,   x.d_g + y.d_g,
            x.d_ff + y.d_ff,   x.d_fg + y.d_fg, x.d_gg + y.d_gg};
}

template <typename T>
Jet2<T> operator-(const Jet2<T>& x, const Jet2<T>& y) {
    return {x.value - y.value, x.d_f - y.d_f,   x.d_g - y.d_g,
            x.d_ff - y.d_ff,   x.d_fg - y.d_fg, x.d_gg - y.d_gg};
}

/// Truncated product rule; the mixed slot picks up both first-order
/// cross terms: (xy).d_fg = x v·y_fg + x_f·y_g + x_g·y_f + x_fg·y v.
template <typename T>
Jet2<T> operator*(const Jet2<T>& x, const Jet2<T>& y) {
    Jet2<T> r;
    r.value = x.value * y.value;
    r.d_f = x.d_f * y.value + x.value * y.d_f;
    r.d_g = x.d_g * y.value + x.value * y.d_g;
    r.d_ff = x.d_ff * y.value + T(2) * x.d_f * y.d_f + x.value * y.d_ff;
    r.d_gg = x.d_gg * y.value + T(2) * x.d_g * y.d_g + x.value * y.d_gg;
    r.d_fg = x.d_fg * y.value + x.d_f * y.d_g + x.d_g * y.d_f + x.value * y.d_fg;
    return r;
}

/// Chain rule through second order: maps x to fn(x) given the value and the
/// first two derivatives of fn at x.value.
template <typename T>
Jet2<T> jet2_compose(const Jet2<T>& x, const T& w0, const T& w1, const T& w2) {
    Jet2<T> r;
    r.value = w0;
    r.d_f = w1 * x.d_f;
    r.d_g = w1 * x.d_g;
    r.d_ff = w2 * x.d_f * x.d_f + w1 * x.d_ff;
    r.d_gg = w2 * x.d_g * x.d_g + w1 * x.d_gg;
    r.d_fg = w2 * x.d_f * x.d_g + w1 * x.d_fg;
    return r;
}

template <typename T>
Jet2<T> reciprocal(const Jet2<T>& x) {
    if (x.value == T(0)) throw PoleError("reciprocal: zero value in jet division");
    const T w0 = T(1) / x.value;
    const T w1 = -w0 * w0;
    const T w2 = T(2) * w0 * w0 * w0;
    return jet2_compose(x, w0, w1, w2);
}

template <typename T>
Jet2<T> operator/(const Jet2<T>& x, const Jet2<T>& y) {
    return x * reciprocal(y);
}

// scalar mixed forms; the scalar parameter is a non-deduced context so that
// e.g. complex jets accept double literals
template <typename T>
Jet2<T> operator+(const Jet2<T>& x, std::type_identity_t<T> s) {
    Jet2<T> r = x;
    r.value += s;
    return r;
}
template <typename T>
Jet2<T> operator+(std::type_identity_t<T> s, const Jet2<T>& x) {
    return x + s;
}
template <typename T>
Jet2<T> operator-(const Jet2<T>& x, std::type_identity_t<T> s) {
    Jet2<T> r = x;
    r.value -= s;
    return r;
}
template <typename T>
Jet2<T> operator-(std::type_identity_t<T> s, const Jet2<T>& x) {
    return (-x) + s;
}
template <typename T>
Jet2<T> operator*(const Jet2<T>& x, std::type_identity_t<T> s) {
    return {x.value * s, x.d_f * s, x.d_g * s, x.d_ff * s, x.d_fg * s, x.d_gg * s};
}
template <typename T>
Jet2<T> operator*(std::type_identity_t<T> s, const Jet2<T>& x) {
    return x * s;
}
template <typename T>
Jet2<T> operator/(const Jet2<T>& x, std::type_identity_t<T> s) {
    return x * (T(1) / s);
}
template <typename T>
Jet2<T> operator/(std::type_identity_t<T> s, const Jet2<T>& x) {
    return reciprocal(x) * s;
}

// ---------------------------------------------------------------------------
// Elementary functions
// ---------------------------------------------------------------------------

enum class Func {
    Exp,
    Log,
    Sqrt,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tanh,
    Sech,
    Atan,
    Csc,
    Cot,
    Reciprocal,
};

inline const char* func_name(Func fn) {
    switch (fn) {
        case Func::Exp: return "exp";
        case Func::Log: return "log";
        case Func::Sqrt: return "sqrt";
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Sinh: return "sinh";
        case Func::Cosh: return "cosh";
        case Func::Tanh: return "tanh";
        case Func::Sech: return "sech";
        case Func::Atan: return "atan";
        case Func::Csc: return "csc";
        case Func::Cot: return "cot";
        case Func::Reciprocal: return "reciprocal";
    }
    return "?";
}

inline double sech(double v) { return 1.0 / std::cosh(v); }

namespace detail {

[[noreturn]] inline void domain_fail(const char* fn, double v, const char* why) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: %s (argument %.17g)", fn, why, v);
    throw DomainError(buf);
}

// |sin| below this counts as a pole of csc/cot
inline constexpr double kTrigPoleTol = 1e-12;

}  // namespace detail

/// Value and first three derivatives of an elementary function at v.
/// Real-argument branch rules: log and sqrt require a strictly positive
/// argument, csc/cot fail within kTrigPoleTol of a pole.
inline std::array<double, 4> scalar_derivatives(Func fn, double v) {
    using detail::domain_fail;
    switch (fn) {
        case Func::Exp: {
            const double e = std::exp(v);
            return {e, e, e, e};
        }
        case Func::Log: {
            if (!(v > 0.0)) domain_fail("log", v, "argument must be positive");
            const double w = 1.0 / v;
            return {std::log(v), w, -w * w, 2.0 * w * w * w};
        }
        case Func::Sqrt: {
            if (!(v > 0.0)) domain_fail("sqrt", v, "argument must be positive");
            const double s = std::sqrt(v);
            return {s, 0.5 / s, -0.25 / (v * s), 0.375 / (v * v * s)};
        }
        case Func::Sin: {
            const double s = std::sin(v), c = std::cos(v);
            return {s, c, -s, -c};
        }
        case Func::Cos: {
            const double s = std::sin(v), c = std::cos(v);
            return {c, -s, -c, s};
        }
        case Func::Sinh: {
            const double s = std::sinh(v), c = std::cosh(v);
            return {s, c, s, c};
        }
        case Func::Cosh: {
            const double s = std::sinh(v), c = std::cosh(v);
            return {c, s, c, s};
        }
        case Func::Tanh: {
            const double t = std::tanh(v);
            const double u = 1.0 - t * t;
            return {t, u, -2.0 * t * u, u * (6.0 * t * t - 2.0)};
        }
        case Func::Sech: {
            const double s = sech(v), t = std::tanh(v);
            return {s, -s * t, s * (2.0 * t * t - 1.0), s * t * (5.0 - 6.0 * t * t)};
        }
        case Func::Atan: {
            const double w = 1.0 / (1.0 + v * v);
            return {std::atan(v), w, -2.0 * v * w * w, w * w * (8.0 * v * v * w - 2.0)};
        }
        case Func::Csc: {
            const double s = std::sin(v);
            if (std::abs(s) < detail::kTrigPoleTol) domain_fail("csc", v, "pole of csc");
            const double c = 1.0 / s, ct = std::cos(v) / s;
            return {c, -c * ct, c * (ct * ct + c * c), -c * ct * (ct * ct + 5.0 * c * c)};
        }
        case Func::Cot: {
            const double s = std::sin(v);
            if (std::abs(s) < detail::kTrigPoleTol) domain_fail("cot", v, "pole of cot");
            const double c = 1.0 / s, ct = std::cos(v) / s;
            return {ct, -c * c, 2.0 * c * c * ct, -2.0 * c * c * (2.0 * ct * ct + c * c)};
        }
        case Func::Reciprocal: {
            if (v == 0.0) domain_fail("reciprocal", v, "division by zero");
            const double w = 1.0 / v;
            return {w, -w * w, 2.0 * w * w * w, -6.0 * w * w * w * w};
        }
    }
    domain_fail("?", v, "unknown function tag");
}

/// Composition fn(x) with exact chain rule through the mixed second order.
inline Jet2d jet2_apply(Func fn, const Jet2d& x) {
    const auto d = scalar_derivatives(fn, x.value);
    return jet2_compose(x, d[0], d[1], d[2]);
}

inline Jet2d exp(const Jet2d& x) { return jet2_apply(Func::Exp, x); }
inline Jet2d log(const Jet2d& x) { return jet2_apply(Func::Log, x); }
inline Jet2d sqrt(const Jet2d& x) { return jet2_apply(Func::Sqrt, x); }
inline Jet2d sin(const Jet2d& x) { return jet2_apply(Func::Sin, x); }
inline Jet2d cos(const Jet2d& x) { return jet2_apply(Func::Cos, x); }
inline Jet2d sinh(const Jet2d& x) { return jet2_apply(Func::Sinh, x); }
inline Jet2d cosh(const Jet2d& x) { return jet2_apply(Func::Cosh, x); }
inline Jet2d tanh(const Jet2d& x) { return jet2_apply(Func::Tanh, x); }
inline Jet2d sech(const Jet2d& x) { return jet2_apply(Func::Sech, x); }
inline Jet2d atan(const Jet2d& x) { return jet2_apply(Func::Atan, x); }
inline Jet2d csc(const Jet2d& x) { return jet2_apply(Func::Csc, x); }
inline Jet2d cot(const Jet2d& x) { return jet2_apply(Func::Cot, x); }

/// x^r with real exponent; real branch, requires x.value > 0.
inline Jet2d pow(const Jet2d& x, double r) {
    if (!(x.value > 0.0)) detail::domain_fail("pow", x.value, "base must be positive");
    const double p = std::pow(x.value, r);
    const double w1 = r * p / x.value;
    const double w2 = r * (r - 1.0) * p / (x.value * x.value);
    return jet2_compose(x, p, w1, w2);
}

// ---------------------------------------------------------------------------
// Univariate truncated Taylor numbers of order 3
// ---------------------------------------------------------------------------

/// Coefficients c0..c3 of a truncated expansion c0 + c1 t + c2 t^2 + c3 t^3.
/// Derivatives at the base point: y = c0, y' = c1, y'' = 2 c2, y''' = 6 c3.
template <typename T>
struct Taylor3 {
    std::array<T, 4> c{};

    Taylor3() = default;
    Taylor3(T c0) : c{c0, T(0), T(0), T(0)} {}
    Taylor3(T c0, T c1, T c2, T c3) : c{c0, c1, c2, c3} {}

    static Taylor3 variable(T x) { return {x, T(1), T(0), T(0)}; }

    /// Series of the derivative: d/dt (c0 + c1 t + c2 t^2 + c3 t^3),
    /// top coefficient unknown and set to zero.
    Taylor3 derivative() const { return {c[1], T(2) * c[2], T(3) * c[3], T(0)}; }

    bool operator==(const Taylor3&) const = default;
};

using Taylor3d = Taylor3<double>;

template <typename T>
Taylor3<T> operator+(const Taylor3<T>& x) {
    return x;
}
template <typename T>
Taylor3<T> operator-(const Taylor3<T>& x) {
    return {-x.c[0], -x.c[1], -x.c[2], -x.c[3]};
}
template <typename T>
Taylor3<T> operator+(const Taylor3<T>& x, const Taylor3<T>& y) {
    return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
}
template <typename T>
Taylor3<T> operator-(const Taylor3<T>& x, const Taylor3<T>& y) {
    return {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]};
}

/// Cauchy product truncated at degree 3.
template <typename T>
Taylor3<T> operator*(const Taylor3<T>& x, const Taylor3<T>& y) {
    Taylor3<T> r;
    r.c[0] = x.c[0] * y.c[0];
    r.c[1] = x.c[0] * y.c[1] + x.c[1] * y.c[0];
    r.c[2] = x.c[0] * y.c[2] + x.c[1] * y.c[1] + x.c[2] * y.c[0];
    r.c[3] = x.c[0] * y.c[3] + x.c[1] * y.c[2] + x.c[2] * y.c[1] + x.c[3] * y.c[0];
    return r;
}

template <typename T>
Taylor3<T> operator+(const Taylor3<T>& x, std::type_identity_t<T> s) {
    Taylor3<T> r = x;
    r.c[0] += s;
    return r;
}
template <typename T>
Taylor3<T> operator+(std::type_identity_t<T> s, const Taylor3<T>& x) {
    return x + s;
}
template <typename T>
Taylor3<T> operator-(const Taylor3<T>& x, std::type_identity_t<T> s) {
    Taylor3<T> r = x;
    r.c[0] -= s;
    return r;
}
template <typename T>
Taylor3<T> operator-(std::type_identity_t<T> s, const Taylor3<T>& x) {
    return (-x) + s;
}
template <typename T>
Taylor3<T> operator*(const Taylor3<T>& x, std::type_identity_t<T> s) {
    return {x.c[0] * s, x.c[1] * s, x.c[2] * s, x.c[3] * s};
}
template <typename T>
Taylor3<T> operator*(std::type_identity_t<T> s, const Taylor3<T>& x) {
    return x * s;
}

/// Composition fn(x) from the derivatives d1..d3 of fn at the constant term:
/// the truncated Faa di Bruno rule.
template <typename T>
Taylor3<T> taylor3_compose(const Taylor3<T>& x, const std::array<T, 4>& d) {
    const T c1 = x.c[1], c2 = x.c[2], c3 = x.c[3];
    Taylor3<T> r;
    r.c[0] = d[0];
    r.c[1] = d[1] * c1;
    r.c[2] = d[1] * c2 + d[2] * c1 * c1 / T(2);
    r.c[3] = d[1] * c3 + d[2] * c1 * c2 + d[3] * c1 * c1 * c1 / T(6);
    return r;
}

inline Taylor3d taylor3_apply(Func fn, const Taylor3d& x) {
    return taylor3_compose(x, scalar_derivatives(fn, x.c[0]));
}

inline Taylor3d reciprocal(const Taylor3d& x) {
    return taylor3_apply(Func::Reciprocal, x);
}
template <typename T>
Taylor3<T> operator/(const Taylor3<T>& x, const Taylor3<T>& y) {
    return x * reciprocal(y);
}
template <typename T>
Taylor3<T> operator/(const Taylor3<T>& x, std::type_identity_t<T> s) {
    return x * (T(1) / s);
}

inline Taylor3d exp(const Taylor3d& x) { return taylor3_apply(Func::Exp, x); }
inline Taylor3d log(const Taylor3d& x) { return taylor3_apply(Func::Log, x); }
inline Taylor3d sqrt(const Taylor3d& x) { return taylor3_apply(Func::Sqrt, x); }
inline Taylor3d sin(const Taylor3d& x) { return taylor3_apply(Func::Sin, x); }
inline Taylor3d cos(const Taylor3d& x) { return taylor3_apply(Func::Cos, x); }
inline Taylor3d tanh(const Taylor3d& x) { return taylor3_apply(Func::Tanh, x); }
inline Taylor3d sech(const Taylor3d& x) { return taylor3_apply(Func::Sech, x); }
inline Taylor3d atan(const Taylor3d& x) { return taylor3_apply(Func::Atan, x); }

inline Taylor3d pow(const Taylor3d& x, double r) {
    const double v = x.c[0];
    if (!(v > 0.0)) detail::domain_fail("pow", v, "base must be positive");
    const double p = std::pow(v, r);
    return taylor3_compose(
        x, {p, r * p / v, r * (r - 1.0) * p / (v * v), r * (r - 1.0) * (r - 2.0) * p / (v * v * v)});
}

// ---------------------------------------------------------------------------
// Finite-difference oracle
// ---------------------------------------------------------------------------

using ScalarField = std::function<double(double, double)>;

struct FdOptions {
    double h = 1e-4;          ///< central-difference step, truncation O(h^2)
    bool richardson = false;  ///< one extrapolation level (h and h/2), O(h^4)
};

namespace detail {

inline Jet2d fd_stencil(const ScalarField& field, double f, double g, double h) {
    const double c = field(f, g);
    const double fp = field(f + h, g), fm = field(f - h, g);
    const double gp = field(f, g + h), gm = field(f, g - h);
    const double pp = field(f + h, g + h), pm = field(f + h, g - h);
    const double mp = field(f - h, g + h), mm = field(f - h, g - h);
    Jet2d r;
    r.value = c;
    r.d_f = (fp - fm) / (2.0 * h);
    r.d_g = (gp - gm) / (2.0 * h);
    r.d_ff = (fp - 2.0 * c + fm) / (h * h);
    r.d_gg = (gp - 2.0 * c + gm) / (h * h);
    r.d_fg = (pp - pm - mp + mm) / (4.0 * h * h);
    return r;
}

}  // namespace detail

/// Central-difference estimate of a scalar field's jet. Oracle quality only:
/// production residuals always come from exact jet arithmetic.
inline Jet2d fd_partials(const ScalarField& field, double f, double g, FdOptions opt = {}) {
    const double h = opt.h;
    if (!(h > 0.0)) throw ValidationError("fd_partials: step must be positive");
    if (!((f - h) + (g - h) > 0.0)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "fd_partials: stencil leaves f+g > 0 at (%.17g, %.17g), h=%.3g", f,
                      g, h);
        throw DomainError(buf);
    }
    const Jet2d coarse = detail::fd_stencil(field, f, g, h);
    if (!opt.richardson) return coarse;
    const Jet2d fine = detail::fd_stencil(field, f, g, 0.5 * h);
    auto rich = [](double a, double b) { return (4.0 * b - a) / 3.0; };
    Jet2d r;
    r.value = coarse.value;
    r.d_f = rich(coarse.d_f, fine.d_f);
    r.d_g = rich(coarse.d_g, fine.d_g);
    r.d_ff = rich(coarse.d_ff, fine.d_ff);
    r.d_fg = rich(coarse.d_fg, fine.d_fg);
    r.d_gg = rich(coarse.d_gg, fine.d_gg);
    return r;
}

}  // namespace ernst
