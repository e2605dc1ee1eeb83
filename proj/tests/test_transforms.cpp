#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "ernst/transforms.hpp"
#include "test_support.hpp"

using namespace ernst;
using namespace ernst::testing;
using cpx = std::complex<double>;

namespace {

cpx random_Z(Rng& rng) { return {rng.uniform(0.2, 2.5), rng.uniform(-2.0, 2.0)}; }

MoebiusMatrix random_matrix(Rng& rng) {
    return moebius_from_params(rng.uniform(-1.5, 1.5), rng.uniform(-1.0, 1.0),
                               rng.uniform(-1.5, 1.5));
}

}  // namespace

TEST_CASE("coordinate action") {
    SUBCASE("identity") {
        const auto [f, g] = apply_coordinate_action({1.0, 0.0}, 0.7, 0.4);
        CHECK(f == 0.7);
        CHECK(g == 0.4);
    }
    SUBCASE("pure dilation") {
        const auto [f, g] = apply_coordinate_action({2.0, 0.0}, 1.0, 1.0);
        CHECK(f == 2.0);
        CHECK(g == 2.0);
    }
    SUBCASE("pure translation preserves f+g") {
        const auto [f, g] = apply_coordinate_action({1.0, 0.5}, 1.0, 1.0);
        CHECK(f == 1.5);
        CHECK(g == 0.5);
        CHECK(f + g == 2.0);
    }
    SUBCASE("nonpositive scale is rejected") {
        CHECK_THROWS_AS(apply_coordinate_action({0.0, 0.0}, 1.0, 1.0), ValidationError);
    }
}

TEST_CASE("matrix from subgroup parameters") {
    SUBCASE("zero parameters give the identity") {
        const MoebiusMatrix m = moebius_from_params(0.0, 0.0, 0.0);
        CHECK(m.a() == 1.0);
        CHECK(m.b() == 0.0);
        CHECK(m.c() == 0.0);
        CHECK(m.d() == 1.0);
    }
    SUBCASE("(-1/2, -ln 2, -1) gives the sqrt-half rotation-like matrix") {
        const MoebiusMatrix m = moebius_from_params(-0.5, -std::log(2.0), -1.0);
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(m.a() == doctest::Approx(r).epsilon(1e-15));
        CHECK(m.b() == doctest::Approx(-r).epsilon(1e-15));
        CHECK(m.c() == doctest::Approx(r).epsilon(1e-15));
        CHECK(m.d() == doctest::Approx(r).epsilon(1e-15));
    }
    SUBCASE("(1, 0, 0) is the unit shear") {
        const MoebiusMatrix m = moebius_from_params(1.0, 0.0, 0.0);
        CHECK(m.a() == 1.0);
        CHECK(m.b() == 1.0);
        CHECK(m.c() == 0.0);
        CHECK(m.d() == 1.0);
        CHECK(m.det() == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("random parameters keep determinant 1") {
        Rng rng(7);
        for (int trial = 0; trial < 100; ++trial) {
            CHECK(std::abs(random_matrix(rng).det() - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("matrix validation and normalization") {
    CHECK_THROWS_AS(MoebiusMatrix(1.0, 0.0, 0.0, 2.0), ValidationError);
    const MoebiusMatrix flipped = MoebiusMatrix::normalized(-1.0, 0.0, 0.0, -1.0);
    CHECK(flipped.a() == 1.0);
    CHECK(flipped.d() == 1.0);
    const MoebiusMatrix zero_a = MoebiusMatrix::normalized(0.0, 1.0, -1.0, 0.0);
    CHECK(zero_a.c() == 1.0);
    CHECK(zero_a.b() == -1.0);
}

TEST_CASE("fractional-linear application") {
    SUBCASE("identity matrix fixes every Z") {
        Rng rng(13);
        for (int trial = 0; trial < 50; ++trial) {
            const cpx Z = random_Z(rng);
            CHECK(std::abs(apply_moebius(MoebiusMatrix::identity(), Z) - Z) <= 1e-15);
        }
    }
    SUBCASE("the special matrix fixes Z = 1") {
        const MoebiusMatrix m = moebius_from_params(-0.5, -std::log(2.0), -1.0);
        CHECK(std::abs(apply_moebius(m, cpx(1.0, 0.0)) - cpx(1.0, 0.0)) <= 1e-15);
    }
    SUBCASE("unit shear shifts L by one") {
        const MoebiusMatrix m(1.0, 1.0, 0.0, 1.0);
        CHECK(std::abs(apply_moebius(m, cpx(1.0, 0.0)) - cpx(1.0, 1.0)) <= 1e-15);
    }
    SUBCASE("pole raises") {
        // normalized (0,1,-1,0) -> (0,-1,1,0), whose denominator is Z itself
        const MoebiusMatrix m = MoebiusMatrix::normalized(0.0, 1.0, -1.0, 0.0);
        CHECK_THROWS_AS(apply_moebius(m, cpx(0.0, 0.0)), PoleError);
    }
}

TEST_CASE("composition is the matrix product") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const MoebiusMatrix m1 = random_matrix(rng);
        const MoebiusMatrix m2 = random_matrix(rng);
        const MoebiusMatrix prod = compose_moebius(m2, m1);
        CHECK(std::abs(prod.det() - 1.0) <= 1e-12);

        const cpx Z = random_Z(rng);
        const cpx chained = apply_moebius(m2, apply_moebius(m1, Z));
        const cpx direct = apply_moebius(prod, Z);
        CHECK(std::abs(chained - direct) <= 1e-12);
    }

    SUBCASE("identity and inverse") {
        const MoebiusMatrix m = moebius_from_params(0.3, -0.4, 0.8);
        const MoebiusMatrix with_id = compose_moebius(m, MoebiusMatrix::identity());
        CHECK(with_id == m);
        const MoebiusMatrix id = compose_moebius(m, m.inverse());
        CHECK(id.a() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(id.b()) <= 1e-14);
        CHECK(std::abs(id.c()) <= 1e-14);
        CHECK(id.d() == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("one-parameter fractional-linear action") {
    SUBCASE("epsilon = 0 is the identity") {
        CHECK(apply_x5_action(0.0, cpx(0.7, -0.3)) == cpx(0.7, -0.3));
    }
    SUBCASE("Z = 1, epsilon = 1") {
        const cpx r = apply_x5_action(1.0, cpx(1.0, 0.0));
        CHECK(r.real() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(r.imag() == doctest::Approx(-0.5).epsilon(1e-15));
    }
    SUBCASE("parameters add under composition") {
        Rng rng(19);
        for (int trial = 0; trial < 100; ++trial) {
            const double e1 = rng.uniform(-0.5, 0.5), e2 = rng.uniform(-0.5, 0.5);
            const cpx Z = random_Z(rng);
            const cpx chained = apply_x5_action(e2, apply_x5_action(e1, Z));
            const cpx direct = apply_x5_action(e1 + e2, Z);
            CHECK(std::abs(chained - direct) <= 1e-12);
        }
    }
    SUBCASE("equals the matrix (1, 0, -eps, 1)") {
        Rng rng(23);
        for (int trial = 0; trial < 100; ++trial) {
            const double eps = rng.uniform(-0.8, 0.8);
            const cpx Z = random_Z(rng);
            const MoebiusMatrix m(1.0, 0.0, -eps, 1.0);
            CHECK(std::abs(apply_x5_action(eps, Z) - apply_moebius(m, Z)) <= 1e-12);
        }
    }
    SUBCASE("component form matches the complex form") {
        Rng rng(27);
        for (int trial = 0; trial < 100; ++trial) {
            const double eps = rng.uniform(-0.8, 0.8);
            const cpx Z = random_Z(rng);
            const double K = Z.real(), L = Z.imag();
            const double den = 1.0 - 2.0 * L * eps + (K * K + L * L) * eps * eps;
            const cpx expected(K / den, (L - (K * K + L * L) * eps) / den);
            CHECK(std::abs(apply_x5_action(eps, Z) - expected) <= 1e-13);
        }
    }
}

TEST_CASE("shift and scale of the potential") {
    CHECK(shift_scale(0.0, 0.0, cpx(0.4, 0.2)) == cpx(0.4, 0.2));
    CHECK(std::abs(shift_scale(2.0, 0.0, cpx(1.0, 0.0)) - cpx(1.0, 2.0)) <= 1e-15);
    CHECK(std::abs(shift_scale(0.0, std::log(3.0), cpx(1.0, 1.0)) - cpx(3.0, 3.0)) <= 1e-14);
}

TEST_CASE("real-potential map") {
    SUBCASE("Zo = 1 is a fixed point") {
        CHECK(std::abs(ehlers_from_real(1.0) - cpx(1.0, 0.0)) <= 1e-15);
    }
    SUBCASE("Zo = 4 lands on sech + i tanh of ln 4") {
        // (1 + 4i)/(i + 4) = (8 + 15i)/17
        const cpx r = ehlers_from_real(4.0);
        CHECK(r.real() == doctest::Approx(8.0 / 17.0).epsilon(1e-15));
        CHECK(r.imag() == doctest::Approx(15.0 / 17.0).epsilon(1e-15));
        const double F = std::log(4.0);
        CHECK(r.real() == doctest::Approx(sech(F)).epsilon(1e-14));
        CHECK(r.imag() == doctest::Approx(std::tanh(F)).epsilon(1e-14));
    }
    SUBCASE("sech/tanh potentials of any exponent are reproduced") {
        Rng rng(29);
        for (int trial = 0; trial < 100; ++trial) {
            const double F = rng.uniform(-1.5, 1.5);
            const cpx expected(sech(F), std::tanh(F));
            CHECK(std::abs(ehlers_from_real(std::exp(F)) - expected) <= 1e-14);
        }
    }
    SUBCASE("agrees with the special matrix") {
        const MoebiusMatrix m = moebius_from_params(-0.5, -std::log(2.0), -1.0);
        Rng rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            const double Zo = rng.uniform(0.1, 10.0);
            CHECK(std::abs(ehlers_from_real(Zo) - apply_moebius(m, cpx(Zo, 0.0))) <= 1e-12);
        }
    }
    SUBCASE("requires a positive argument") {
        CHECK_THROWS_AS(ehlers_from_real(0.0), DomainError);
        CHECK_THROWS_AS(ehlers_from_real(-1.0), DomainError);
    }
}

TEST_CASE("actions differentiate to their generators") {
    SUBCASE("L shift") {
        CHECK(std::abs(generator_derivative_check(TargetGenerator::X3, cpx(0.8, -0.4))) <= 1e-9);
    }
    SUBCASE("scaling at Z = 2 + 3i") {
        CHECK(std::abs(generator_derivative_check(TargetGenerator::X4, cpx(2.0, 3.0))) <= 1e-9);
    }
    SUBCASE("fractional-linear at Z = 1 + i") {
        CHECK(std::abs(generator_derivative_check(TargetGenerator::X5, cpx(1.0, 1.0))) <= 1e-9);
    }
    SUBCASE("random points") {
        Rng rng(37);
        for (int trial = 0; trial < 50; ++trial) {
            const cpx Z = random_Z(rng);
            for (TargetGenerator gen :
                 {TargetGenerator::X3, TargetGenerator::X4, TargetGenerator::X5}) {
                CHECK(std::abs(generator_derivative_check(gen, Z)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("every one-parameter action preserves solutions") {
    const PotentialField bases[] = {make_x1_field({1.0, 1.0, 0.0}), make_x2_field({1.0, 1.0, 0.0}),
                                    make_epd_field({{0.7, EpdBasis::LogSum},
                                                    {1.3, EpdBasis::ArctanRatio},
                                                    {0.5, EpdBasis::Antisym}})};

    auto max_residual = [](const PotentialField& field, double lo, double hi) {
        double worst = 0.0;
        for (int i = 0; i < 32; ++i) {
            for (int j = 0; j < 32; ++j) {
                const double f = lo + (hi - lo) * i / 31.0;
                const double g = lo + (hi - lo) * j / 31.0;
                const Residual r = ernst_residual(sample_at(field, f, g), f, g);
                worst = std::max({worst, std::abs(r.resK), std::abs(r.resL)});
            }
        }
        return worst;
    };

    for (const PotentialField& base : bases) {
        // translation moves g down by 0.3; keep the window inside the domain
        CHECK(max_residual(with_coordinate_action({1.0, 0.3}, base), 0.6, 1.8) <= 1e-9);
        CHECK(max_residual(with_coordinate_action({std::exp(0.4), 0.0}, base), 0.2, 1.8) <= 1e-9);
        CHECK(max_residual(with_shift_scale(0.7, 0.0, base), 0.2, 1.8) <= 1e-9);   // L shift
        CHECK(max_residual(with_shift_scale(0.0, -0.2, base), 0.2, 1.8) <= 1e-9);  // scaling
        CHECK(max_residual(with_x5(0.3, base), 0.2, 1.8) <= 1e-9);
        CHECK(max_residual(with_moebius(moebius_from_params(0.2, 0.3, -0.4), base), 0.2, 1.8) <= 1e-9);
    }
}

TEST_CASE("jets transform through the complex chain rule") {
    // transformed jets must equal finite differences of the transformed field
    const PotentialField base = make_x1_field({1.0, 1.0, 0.0});
    const PotentialField transformed = with_x5(0.4, base);
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const double f = rng.uniform(0.4, 1.6);
        const double g = rng.uniform(0.4, 1.6);
        const PotentialSample s = sample_at(transformed, f, g);
        const Jet2d K_fd = fd_partials(
            [&](double ff, double gg) { return sample_at(transformed, ff, gg).K.value; }, f, g);
        CHECK(close_rel(s.K.d_f, K_fd.d_f, 1e-6));
        CHECK(close_rel(s.K.d_fg, K_fd.d_fg, 1e-6));
        CHECK(close_rel(s.K.d_gg, K_fd.d_gg, 1e-6));
    }
}
