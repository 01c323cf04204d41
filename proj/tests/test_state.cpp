#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "twofluid/state.hpp"

using namespace twofluid;

TEST_CASE("to_primitive matches direct substitution") {
    const PressureLaw poly = PressureLaw::two_phase_polytropic(2.0);
    ConservativeState w;
    w.m = 1.0;
    w.n = 1.0;
    w.q = Vec{3, {1.0, 0.0, 0.0}};
    const PrimitiveState prim = to_primitive(poly, w);
    CHECK(prim.p == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(prim.u[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(prim.u[1] == 0.0);
    CHECK(prim.s == 1.0);
    CHECK(prim.rho == 1.0);

    const PressureLaw bi = PressureLaw::bi_fluid(1.0, 2.0, 1.0);
    ConservativeState wb;
    wb.m = 1.0;
    wb.n = 1.0;
    wb.q = Vec{2, {2.0, 0.0}};
    const PrimitiveState pb = to_primitive(bi, wb);
    CHECK(pb.p == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(pb.u[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pb.rho == 2.0);
    CHECK(pb.s == 1.0);

    const PressureLaw lf = PressureLaw::two_phase_liquid_fraction(1.0, 2.0, 10.0);
    ConservativeState wl;
    wl.m = 2.0;
    wl.n = 1.0;
    wl.q = Vec{2, {0.0, 0.0}};
    const PrimitiveState pl = to_primitive(lf, wl);
    CHECK(pl.p == doctest::Approx(4.0 / 81.0).epsilon(1e-14));
    CHECK(pl.s == 2.0);
    CHECK(pl.rho == 1.0);
}

TEST_CASE("to_primitive rejects invalid masses") {
    const PressureLaw poly = PressureLaw::two_phase_polytropic(2.0);
    ConservativeState w;
    w.m = 0.0;
    w.n = 1.0;
    w.q = Vec{1, {0.0}};
    CHECK_THROWS_AS(to_primitive(poly, w), DomainError);
}

TEST_CASE("to_conservative inverts the pressure against analytic solutions") {
    // gamma = 2 polytropic: P = rho^2 (S+1)^2, so rho = sqrt(P)/(S+1).
    const PressureLaw poly = PressureLaw::two_phase_polytropic(2.0);
    PrimitiveState prim;
    prim.p = 4.0;
    prim.u = Vec{1, {0.0}};
    prim.s = 1.0;
    prim.rho = 0.0;  // intentionally stale; P is the source of truth
    const ConservativeState w = to_conservative(poly, prim);
    CHECK(w.n == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.m == doctest::Approx(1.0).epsilon(1e-12));

    // bi-fluid alpha=1, gamma=2, A=1 at S=1: rho/2 + rho^2/4 = P.
    const PressureLaw bi = PressureLaw::bi_fluid(1.0, 2.0, 1.0);
    PrimitiveState pb;
    pb.p = 2.0;
    pb.u = Vec{1, {0.0}};
    pb.s = 1.0;
    const ConservativeState wb = to_conservative(bi, pb);
    CHECK(wb.m + wb.n == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(wb.m == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wb.n == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("roundtrip is the identity on randomized states") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> vel(-3.0, 3.0);
    for (const PressureLaw& law : oracle::canonical_laws()) {
        for (int k = 0; k < 1000; ++k) {
            const auto [rho, s] = oracle::random_rho_s(law, rng);
            const PrimitiveState prim =
                make_primitive(law, rho, Vec{2, {vel(rng), vel(rng)}}, s);

            const ConservativeState w = to_conservative(law, prim);
            const PrimitiveState back = to_primitive(law, w);
            REQUIRE(back.rho == doctest::Approx(prim.rho).epsilon(1e-12));
            REQUIRE(back.p == doctest::Approx(prim.p).epsilon(1e-12));
            REQUIRE(back.s == doctest::Approx(prim.s).epsilon(1e-12));
            REQUIRE(back.u[0] == doctest::Approx(prim.u[0]).epsilon(1e-12));

            // Opposite order: conservative -> primitive -> conservative.
            const ConservativeState again = to_conservative(law, back);
            REQUIRE(again.m == doctest::Approx(w.m).epsilon(1e-12));
            REQUIRE(again.n == doctest::Approx(w.n).epsilon(1e-12));
        }
    }
}

TEST_CASE("density inversion honors the bracket guard") {
    const PressureLaw poly = PressureLaw::two_phase_polytropic(2.0);
    // Attainable range is (0, inf) for the polytropic law; zero and negative
    // targets have no bracket.
    CHECK_THROWS_AS(density_from_pressure(poly, 0.0, 1.0), NoBracketError);
    CHECK_THROWS_AS(density_from_pressure(poly, -1.0, 1.0), NoBracketError);

    // The liquid-fraction law saturates at rho -> rho_l; far larger targets
    // are unattainable.
    const PressureLaw lf = PressureLaw::two_phase_liquid_fraction(1.0, 2.0, 10.0);
    const double p_near_cap = pressure_rho_s(lf, 10.0 * (1.0 - 1e-12), 1.0);
    CHECK_THROWS_AS(density_from_pressure(lf, p_near_cap * 4.0, 1.0),
                    NoBracketError);

    // A warm start far from the answer still converges to the right root.
    const double rho = density_from_pressure(poly, 16.0, 1.0, 1e-6);
    CHECK(rho == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("liquid-fraction inversion stays below the liquid density") {
    const PressureLaw lf = PressureLaw::two_phase_liquid_fraction(1.0, 2.0, 10.0);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const double target_rho = 0.2 + 9.5 * unit(rng);
        if (target_rho >= 10.0) continue;
        const double s = 0.1 + 3.0 * unit(rng);
        const double p = pressure_rho_s(lf, target_rho, s);
        const double rho = density_from_pressure(lf, p, s);
        REQUIRE(rho < 10.0);
        REQUIRE(rho == doctest::Approx(target_rho).epsilon(1e-10));
    }
}

TEST_CASE("vector helpers") {
    const Vec a{3, {1.0, 2.0, 3.0}};
    const Vec b{3, {-1.0, 0.5, 2.0}};
    CHECK(dot(a, b) == doctest::Approx(6.0));
    CHECK(norm(Vec{2, {3.0, 4.0}}) == doctest::Approx(5.0));
    const Vec c = 2.0 * a;
    CHECK(c[2] == doctest::Approx(6.0));
}
