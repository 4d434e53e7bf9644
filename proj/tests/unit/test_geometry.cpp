#include "gen.hpp"

#include "halfstrip/geometry.hpp"

#include <doctest.h>

using namespace halfstrip;

TEST_CASE("classify sorts points into regions, legs and corners") {
    const StripGeometry g(1.0);
    CHECK(classify({0.0, 1.0}, g) == Region::OmegaPlus);
    CHECK(classify({0.0, -1.0}, g) == Region::OmegaMinus);
    CHECK(classify({2.0, 1.0}, g) == Region::OmegaMinus);
    CHECK(classify({-1.0, 3.0}, g) == Region::Gamma1);
    CHECK(classify({0.3, 0.0}, g) == Region::Gamma2);
    CHECK(classify({1.0, 3.0}, g) == Region::Gamma3);
    CHECK(classify({-1.0, 0.0}, g) == Region::CornerMinus);
    CHECK(classify({1.0, 0.0}, g) == Region::CornerPlus);
    CHECK(classify({1.0, -2.0}, g) == Region::OmegaMinus);
    CHECK(classify({2.0, 0.0}, g) == Region::OmegaMinus);
}

TEST_CASE("far up the legs the snap stays componentwise") {
    const StripGeometry g(1.0);
    CHECK(classify({-0.5, 5e12}, g) == Region::OmegaPlus);
    CHECK(classify({1.0, 5e12}, g) == Region::Gamma3);
    CHECK(classify({1.0 + 1e-9, 5e12}, g) == Region::OmegaMinus);
}

TEST_CASE("geometry rejects non-positive sigma") {
    CHECK_THROWS_AS(StripGeometry(0.0), ParameterError);
    CHECK_THROWS_AS(StripGeometry(-1.0), ParameterError);
}

TEST_CASE("contour_point and contour_parameter are inverse on Gamma_{s,t}") {
    gen::Source src(11);
    for (int k = 0; k < 200; ++k) {
        const ContourSpec c{src.real(0.2, 3.0), src.real(-1.0, 2.0), true, 0b111};
        const double b = src.real(-20.0, 20.0);
        const cplx z = contour_point(b, c);
        CHECK(contour_parameter(z, c) == doctest::Approx(b).epsilon(1e-12));
    }
    const ContourSpec c{1.0, 0.0, true, 0b111};
    CHECK(contour_point(0.0, c) == cplx(0.0, 0.0));
    CHECK(contour_point(3.0, c) == cplx(1.0, 2.0));
    CHECK(contour_point(-3.0, c) == cplx(-1.0, 2.0));
    CHECK_THROWS_AS(contour_parameter({0.0, 1.0}, c), DomainError);
}

TEST_CASE("property: chord-arc inequality |zeta(b) - zeta(b0)| >= C |b - b0|") {
    gen::Source src(12);
    const StripGeometry g(1.3);
    const ContourSpec c = ContourSpec::boundary(g);
    for (int k = 0; k < 2000; ++k) {
        double b0 = src.real(-10.0, 10.0);
        if (std::abs(std::abs(b0) - g.sigma) < 1e-6) continue;
        const double b = src.real(-30.0, 30.0);
        const double C = chord_arc_constant(b0, g);
        CHECK(std::abs(contour_point(b, c) - contour_point(b0, c)) >= C * std::abs(b - b0) * (1.0 - 1e-12));
    }
    CHECK_THROWS_AS(chord_arc_constant(1.3, g), DomainError);
}

TEST_CASE("translate_P maps gamma_{s,t} onto Gamma_{s,t} and back") {
    const StripGeometry g(1.0);
    gen::Source src(13);
    for (int k = 0; k < 100; ++k) {
        const double s = src.real(0.1, 0.99);
        const double t = src.real(0.01, 2.0);
        const cplx on_leg(k % 2 ? 1.0 : -1.0, t + src.real(0.01, 5.0));
        const cplx on_seg(src.real(-s, s), 0.0);
        for (cplx z : {on_leg, on_seg}) {
            const cplx w = translate_P(z, s, t, g);
            CHECK(std::abs(translate_P_inv(w, s, t, g) - z) < 1e-14);
        }
    }
    CHECK_THROWS_AS(translate_P({0.0, 1.0}, 0.5, 0.5, g), DomainError);
}

TEST_CASE("gamma lines") {
    const StripGeometry g(2.0);
    CHECK(gamma_line(1, g).origin == cplx(-2.0, 0.0));
    CHECK(gamma_line(1, g).direction == cplx(0.0, -1.0));
    CHECK(gamma_line(3, g).direction == cplx(0.0, 1.0));
    CHECK_THROWS_AS(gamma_line(4, g), ParameterError);
}

TEST_CASE("property: cone points inside the approach radius lie on the cone's side") {
    gen::Source src(14);
    const StripGeometry g(1.0);
    for (int k = 0; k < 600; ++k) {
        const cplx z0 = src.boundary(g.sigma, 0.05);
        const double alpha = src.log_uniform(0.1, 10.0);
        const Side side = k % 2 ? Side::Plus : Side::Minus;
        const Cone cone(z0, alpha, side, g);
        const double r = approach_radius(z0, g) * src.real(0.01, 0.99);
        const double phi = src.real(-0.99, 0.99) * std::atan(alpha);
        const cplx w = z0 + r * cone.bisector() * std::polar(1.0, phi);
        REQUIRE(cone.contains(w));
        CHECK(classify(w, g) == (side == Side::Plus ? Region::OmegaPlus : Region::OmegaMinus));
    }
}

TEST_CASE("cone construction errors") {
    const StripGeometry g(1.0);
    CHECK_THROWS_AS(Cone({1.0, 0.0}, 1.0, Side::Plus, g), DomainError);
    CHECK_THROWS_AS(Cone({0.0, 1.0}, 1.0, Side::Plus, g), DomainError);
    CHECK_THROWS_AS(Cone({0.0, 0.0}, 0.0, Side::Plus, g), ParameterError);
    CHECK(approach_radius({0.0, 0.0}, g) == doctest::Approx(0.5));
    CHECK(approach_radius({1.0, 10.0}, g) == doctest::Approx(1.0));
}
