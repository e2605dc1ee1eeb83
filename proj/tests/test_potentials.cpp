#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "ernst/potentials.hpp"
#include "test_support.hpp"

using namespace ernst;
using namespace ernst::testing;

namespace {

constexpr double kPi = 3.14159265358979323846;

PotentialField non_solution_field() {
    // K = f, L = g: deliberately not a solution
    return [](const Jet2d& f, const Jet2d& g) {
        PotentialSample s;
        s.K = f;
        s.L = g;
        return s;
    };
}

}  // namespace

TEST_CASE("translation-invariant family values") {
    SUBCASE("A=1, B=1, C=0 at (1,1)") {
        const PotentialSample s = eval_x1_family({1.0, 1.0, 0.0}, 1.0, 1.0);
        CHECK(s.K.value == doctest::Approx(0.8).epsilon(1e-14));
        CHECK(s.L.value == doctest::Approx(-0.6).epsilon(1e-14));
        CHECK(s.k_positive());
    }
    SUBCASE("f+g = 1 pins Z = 1") {
        for (double f : {0.2, 0.5, 0.9}) {
            const PotentialSample s = eval_x1_family({1.0, 1.0, 0.0}, f, 1.0 - f);
            CHECK(s.K.value == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(s.L.value == doctest::Approx(0.0).epsilon(1e-14));
        }
    }
    SUBCASE("domain error outside f+g > 0") {
        CHECK_THROWS_AS(eval_x1_family({1.0, 1.0, 0.0}, -1.0, 0.5), DomainError);
    }
    SUBCASE("invalid parameters are rejected") {
        CHECK_THROWS_AS(eval_x1_family({0.0, 1.0, 0.0}, 1.0, 1.0), ValidationError);
        CHECK_THROWS_AS(eval_x1_family({1.0, 0.0, 0.0}, 1.0, 1.0), ValidationError);
    }
}

TEST_CASE("dilation-invariant family values") {
    const double K_expect = 1.0 / std::cosh(kPi / 2.0);
    const double L_expect = std::tanh(kPi / 2.0);
    SUBCASE("A=1, B=1, C=0 on the diagonal f = g") {
        for (double f : {0.5, 1.0, 1.7}) {
            const PotentialSample s = eval_x2_family({1.0, 1.0, 0.0}, f, f);
            CHECK(s.K.value == doctest::Approx(K_expect).epsilon(1e-13));
            CHECK(s.L.value == doctest::Approx(L_expect).epsilon(1e-13));
        }
    }
    SUBCASE("A=1, B=2, C=1 halves the radius and shifts L") {
        const PotentialSample s = eval_x2_family({1.0, 2.0, 1.0}, 1.3, 1.3);
        CHECK(s.K.value == doctest::Approx(0.5 * K_expect).epsilon(1e-13));
        CHECK(s.L.value == doctest::Approx(0.5 * L_expect + 1.0).epsilon(1e-13));
    }
    SUBCASE("f -> 0+ limit approaches Z = 1") {
        const PotentialSample s = eval_x2_family({1.0, 1.0, 0.0}, 1e-14, 0.7);
        CHECK(std::abs(s.K.value - 1.0) <= 1e-10);
        CHECK(std::abs(s.L.value) <= 1e-6);
    }
    SUBCASE("domain errors off the open quadrant") {
        CHECK_THROWS_AS(eval_x2_family({1.0, 1.0, 0.0}, 0.0, 1.0), DomainError);
        CHECK_THROWS_AS(eval_x2_family({1.0, 1.0, 0.0}, 1.0, -0.1), DomainError);
    }
}

TEST_CASE("circle identity K^2 + (L-C)^2 = (A/B)^2") {
    Rng rng(17);
    const FamilyParams p{2.0, 1.0, 3.0};
    for (int trial = 0; trial < 50; ++trial) {
        const double f = rng.uniform(0.1, 2.0);
        const double g = rng.uniform(0.1, 2.0);
        for (const auto& s : {eval_x1_family(p, f, g), eval_x2_family(p, f, g)}) {
            const double r2 = s.K.value * s.K.value + (s.L.value - p.C) * (s.L.value - p.C);
            CHECK(std::abs(r2 - 4.0) / 4.0 <= 1e-12);
        }
    }
}

TEST_CASE("csc/cot family") {
    SUBCASE("purely imaginary constants reproduce the translation family") {
        // sqrt(c1) = i A, sqrt(c2) = i B, c3 = (1/sqrt(c1)) pi/2, c4 = C
        TrigFamilyParams p;
        p.c1 = {-1.0, 0.0};
        p.c2 = {-1.0, 0.0};
        p.c3 = std::complex<double>(0.0, -kPi / 2.0);  // (pi/2) / (i)
        p.c4 = {0.0, 0.0};
        const auto [K, L] = eval_trig_family(p, TrigVariant::I, 1.0, 1.0);
        CHECK(K.real() == doctest::Approx(0.8).epsilon(1e-12));
        CHECK(std::abs(K.imag()) <= 1e-12);
        CHECK(L.real() == doctest::Approx(-0.6).epsilon(1e-12));
        CHECK(std::abs(L.imag()) <= 1e-12);
    }
    SUBCASE("unit constants at f+g = 1") {
        TrigFamilyParams p;
        p.c1 = {1.0, 0.0};
        p.c2 = {1.0, 0.0};
        p.c3 = {kPi / 2.0, 0.0};
        const auto [K, L] = eval_trig_family(p, TrigVariant::I, 0.4, 0.6);
        CHECK(K.real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(K.imag()) <= 1e-14);
        CHECK(std::abs(L) <= 1e-14);

        TrigFamilyParams minus = p;
        minus.branch_K = -1;
        const auto [Km, Lm] = eval_trig_family(minus, TrigVariant::I, 0.4, 0.6);
        CHECK(Km.real() == doctest::Approx(-1.0).epsilon(1e-14));
    }
    SUBCASE("variants agree where the log vanishes") {
        Rng rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            TrigFamilyParams p;
            p.c1 = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
            p.c2 = {rng.uniform(0.5, 2.0), rng.uniform(-2.0, 2.0)};
            p.c3 = {rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0)};
            p.c4 = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            const double f = rng.uniform(0.1, 0.9);
            const auto one = eval_trig_family(p, TrigVariant::I, f, 1.0 - f);
            const auto two = eval_trig_family(p, TrigVariant::II, f, 1.0 - f);
            CHECK(std::abs(one.first - two.first) <= 1e-12);
            CHECK(std::abs(one.second - two.second) <= 1e-12);
        }
    }
    SUBCASE("pole of csc is a domain error") {
        TrigFamilyParams p;
        p.c1 = {1.0, 0.0};
        p.c2 = {1.0, 0.0};
        p.c3 = {0.0, 0.0};  // argument vanishes at f+g = 1
        CHECK_THROWS_AS(eval_trig_family(p, TrigVariant::I, 0.5, 0.5), DomainError);
    }
}

TEST_CASE("ernst residual") {
    SUBCASE("constant Z = 1 annihilates both equations") {
        PotentialSample s;
        s.K = Jet2d::constant(1.0);
        s.L = Jet2d::constant(0.0);
        const Residual r = ernst_residual(s, 0.7, 0.4);
        CHECK(r.resK == 0.0);
        CHECK(r.resL == 0.0);
    }
    SUBCASE("K = f, L = g at (1,1) is off-shell by (0.5, -1.5)") {
        const Residual r = ernst_residual(sample_at(non_solution_field(), 1.0, 1.0), 1.0, 1.0);
        CHECK(r.resK == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.resL == doctest::Approx(-1.5).epsilon(1e-12));
    }
    SUBCASE("closed-form families solve the equations") {
        Rng rng(23);
        for (int trial = 0; trial < 100; ++trial) {
            const double f = rng.uniform(0.1, 2.0);
            const double g = rng.uniform(0.1, 2.0);
            const Residual r1 = ernst_residual(eval_x1_family({1.0, 1.0, 0.0}, f, g), f, g);
            CHECK(std::abs(r1.resK) <= 1e-12);
            CHECK(std::abs(r1.resL) <= 1e-12);
            const Residual r2 = ernst_residual(eval_x2_family({1.5, 2.0, -0.5}, f, g), f, g);
            CHECK(std::abs(r2.resK) <= 1e-12);
            CHECK(std::abs(r2.resL) <= 1e-12);
        }
    }
}

TEST_CASE("invariant surface conditions") {
    const PotentialField x1 = make_x1_field({1.0, 1.0, 0.0});
    const PotentialField x2 = make_x2_field({1.0, 1.0, 0.0});
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const double f = rng.uniform(0.2, 1.8);
        const double g = rng.uniform(0.2, 1.8);
        const Residual r1 = invariant_surface_residual(x1, SurfaceGenerator::X1, f, g);
        CHECK(std::abs(r1.resK) <= 1e-12);
        CHECK(std::abs(r1.resL) <= 1e-12);
        const Residual r2 = invariant_surface_residual(x2, SurfaceGenerator::X2, f, g);
        CHECK(std::abs(r2.resK) <= 1e-12);
        CHECK(std::abs(r2.resL) <= 1e-12);
    }
    // f/g dependence is not translation invariant
    const Residual cross = invariant_surface_residual(x2, SurfaceGenerator::X1, 1.0, 2.0);
    CHECK(std::abs(cross.resK) > 0.1);
}

TEST_CASE("EPD basis members") {
    SUBCASE("antisymmetric member is linear") {
        const Jet2d F = epd_basis_eval(EpdBasis::Antisym, Jet2d::lift_f(3.0), Jet2d::lift_g(1.0));
        CHECK(F.value == 2.0);
        CHECK(F.d_f == 1.0);
        CHECK(F.d_g == -1.0);
        CHECK(F.d_fg == 0.0);
    }
    SUBCASE("log member matches the hand jet") {
        const Jet2d F = epd_basis_eval(EpdBasis::LogSum, Jet2d::lift_f(1.0), Jet2d::lift_g(1.0));
        CHECK(F.value == doctest::Approx(std::log(2.0)).epsilon(1e-15));
        CHECK(F.d_fg == doctest::Approx(-0.25).epsilon(1e-15));
    }
    SUBCASE("arctan-ratio member on the diagonal") {
        const Jet2d F =
            epd_basis_eval(EpdBasis::ArctanRatio, Jet2d::lift_f(1.3), Jet2d::lift_g(1.3));
        CHECK(F.value == doctest::Approx(kPi / 4.0).epsilon(1e-15));
        CHECK(std::abs(epd_residual(F, 1.3, 1.3)) <= 1e-14);
    }
    SUBCASE("every member solves the EPD equation") {
        Rng rng(41);
        for (int trial = 0; trial < 100; ++trial) {
            const double f = rng.uniform(0.1, 2.0);
            const double g = rng.uniform(0.1, 2.0);
            for (EpdBasis tag : {EpdBasis::Constant, EpdBasis::LogSum, EpdBasis::ArctanRatio,
                                 EpdBasis::Antisym}) {
                const Jet2d F = epd_basis_eval(tag, Jet2d::lift_f(f), Jet2d::lift_g(g));
                CHECK(std::abs(epd_residual(F, f, g)) <= 1e-13);
            }
        }
    }
}

TEST_CASE("EPD residual examples and linearity") {
    SUBCASE("F = f - g vanishes exactly") {
        const Jet2d F = Jet2d::lift_f(0.9) - Jet2d::lift_g(0.4);
        CHECK(epd_residual(F, 0.9, 0.4) == 0.0);
    }
    SUBCASE("F = f g at (1,1) gives 6") {
        const Jet2d F = Jet2d::lift_f(1.0) * Jet2d::lift_g(1.0);
        CHECK(epd_residual(F, 1.0, 1.0) == doctest::Approx(6.0).epsilon(1e-15));
    }
    SUBCASE("the reference combination stays on-shell") {
        const EpdCombination combo = {{0.7, EpdBasis::LogSum},
                                      {1.3, EpdBasis::ArctanRatio},
                                      {0.5, EpdBasis::Antisym}};
        Rng rng(43);
        for (int trial = 0; trial < 100; ++trial) {
            const double f = rng.uniform(0.1, 2.0);
            const double g = rng.uniform(0.1, 2.0);
            const Jet2d F = epd_combination_eval(combo, Jet2d::lift_f(f), Jet2d::lift_g(g));
            CHECK(std::abs(epd_residual(F, f, g)) <= 1e-12);
        }
    }
    SUBCASE("residual is linear in the field") {
        Rng rng(47);
        for (int trial = 0; trial < 100; ++trial) {
            const Jet2d F1 = random_jet(rng);
            const Jet2d F2 = random_jet(rng);
            const double w1 = rng.uniform(-2.0, 2.0), w2 = rng.uniform(-2.0, 2.0);
            const double f = rng.uniform(0.2, 1.8), g = rng.uniform(0.2, 1.8);
            const double combined = epd_residual(w1 * F1 + w2 * F2, f, g);
            const double separate = w1 * epd_residual(F1, f, g) + w2 * epd_residual(F2, f, g);
            CHECK(close_ulp(combined, separate,
                            16.0 * (std::abs(w1) * jet_norm(F1) + std::abs(w2) * jet_norm(F2))));
        }
    }
}

TEST_CASE("sech/tanh image of an EPD potential") {
    SUBCASE("F = 0 maps to Z = 1") {
        const PotentialSample s = epd_to_ernst(Jet2d::constant(0.0));
        CHECK(s.K.value == 1.0);
        CHECK(s.L.value == 0.0);
    }
    SUBCASE("F = log(f+g) at (1,1) maps to 0.8 + 0.6i") {
        const Jet2d F = log(Jet2d::lift_f(1.0) + Jet2d::lift_g(1.0));
        const PotentialSample s = epd_to_ernst(F);
        CHECK(s.K.value == doctest::Approx(0.8).epsilon(1e-14));
        CHECK(s.L.value == doctest::Approx(0.6).epsilon(1e-14));
    }
    SUBCASE("EPD solutions map to Ernst solutions") {
        const EpdCombination combo = {{0.7, EpdBasis::LogSum},
                                      {1.3, EpdBasis::ArctanRatio},
                                      {0.5, EpdBasis::Antisym}};
        const PotentialField field = make_epd_field(combo);
        Rng rng(53);
        for (int trial = 0; trial < 100; ++trial) {
            const double f = rng.uniform(0.1, 2.0);
            const double g = rng.uniform(0.1, 2.0);
            const Residual r = ernst_residual(sample_at(field, f, g), f, g);
            CHECK(std::abs(r.resK) <= 1e-10);
            CHECK(std::abs(r.resL) <= 1e-10);
        }
    }
}

TEST_CASE("families are sech/tanh images of EPD potentials") {
    Rng rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        const double f = rng.uniform(0.2, 1.8);
        const double g = rng.uniform(0.2, 1.8);
        const Jet2d fj = Jet2d::lift_f(f), gj = Jet2d::lift_g(g);

        // x1 family with A = B = 1, C = 0 is the image of F = -log(f+g):
        // same K, but L carries the opposite tanh sign
        const PotentialSample x1 = eval_x1_family({1.0, 1.0, 0.0}, fj, gj);
        const PotentialSample image1 = epd_to_ernst(-1.0 * epd_basis_eval(EpdBasis::LogSum, fj, gj));
        CHECK(jets_close_ulp(x1.K, image1.K, 1.0, 16.0));
        CHECK(jets_close_ulp(x1.L, image1.L, 1.0, 16.0));

        // x2 family with A = B = 1, C = 0 is the image of
        // F = +2 arctan sqrt(f/g), with the plus tanh sign
        const PotentialSample x2 = eval_x2_family({1.0, 1.0, 0.0}, fj, gj);
        const PotentialSample image2 =
            epd_to_ernst(2.0 * epd_basis_eval(EpdBasis::ArctanRatio, fj, gj));
        CHECK(jets_close_ulp(x2.K, image2.K, 1.0, 16.0));
        CHECK(jets_close_ulp(x2.L, image2.L, 1.0, 16.0));
    }
}

TEST_CASE("jet residuals agree with finite-difference residuals") {
    const PotentialField fields[] = {make_x1_field({1.0, 1.0, 0.0}), make_x2_field({2.0, 1.5, 0.3}),
                                     make_epd_field({{0.7, EpdBasis::LogSum},
                                                     {1.3, EpdBasis::ArctanRatio},
                                                     {0.5, EpdBasis::Antisym}})};
    Rng rng(61);
    for (const PotentialField& field : fields) {
        for (int trial = 0; trial < 100; ++trial) {
            const double f = rng.uniform(0.4, 1.8);
            const double g = rng.uniform(0.4, 1.8);

            PotentialSample fd;
            fd.K = fd_partials(
                [&](double ff, double gg) { return sample_at(field, ff, gg).K.value; }, f, g);
            fd.L = fd_partials(
                [&](double ff, double gg) { return sample_at(field, ff, gg).L.value; }, f, g);

            const Residual exact = ernst_residual(sample_at(field, f, g), f, g);
            const Residual approx = ernst_residual(fd, f, g);
            CHECK(std::abs(exact.resK - approx.resK) <= 1e-5);
            CHECK(std::abs(exact.resL - approx.resL) <= 1e-5);
        }
    }
}
