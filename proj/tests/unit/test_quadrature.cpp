#include "gen.hpp"

#include "halfstrip/quadrature.hpp"

#include <doctest.h>

using namespace halfstrip;

TEST_CASE("half-line integrals with algebraic and exponential tails") {
    QuadratureSpec q;
    q.tail = TailBound::algebraic(2.0);
    auto v = integrate_half_line([](double r) { return cplx(1.0 / ((1.0 + r) * (1.0 + r)), 0.0); }, q);
    CHECK(std::abs(v.value - 1.0) < 1e-10);
    CHECK(v.error_estimate < 1e-8);

    q.tail = TailBound::exponential(1.0);
    v = integrate_half_line([](double r) { return cplx(std::exp(-r), 0.0); }, q);
    CHECK(std::abs(v.value - 1.0) < 1e-10);

    q.tail = TailBound::none();
    v = integrate_half_line([](double r) { return cplx(std::exp(-r) * std::cos(r), 0.0); }, q);
    CHECK(std::abs(v.value - 0.5) < 1e-10);
}

TEST_CASE("slow tails are refused") {
    QuadratureSpec q;
    q.tail = TailBound::algebraic(1.0);
    CHECK_THROWS_AS(integrate_half_line([](double r) { return cplx(1.0 / (1.0 + r), 0.0); }, q), TruncationError);
    q.tail = TailBound::algebraic(2.0);
    // Declared 1/r^2 but decays like 1/r: the check at large heights notices.
    CHECK_THROWS_AS(integrate_half_line([](double r) { return cplx(1.0 / (1.0 + r), 0.0); }, q), TruncationError);
}

TEST_CASE("finite intervals with breakpoints") {
    QuadratureSpec q;
    auto v = integrate_interval([](double x) { return cplx(std::abs(x - 0.3), 0.0); }, 0.0, 1.0, q, {0.3});
    CHECK(std::abs(v.value - (0.09 + 0.49) / 2.0) < 1e-12);
    v = integrate_interval([](double x) { return cplx(x * x, 0.0); }, 2.0, 0.0, q);
    CHECK(std::abs(v.value + 8.0 / 3.0) < 1e-12);
    CHECK_THROWS_AS(integrate_interval([](double) { return cplx(1.0); }, 0.0, INFINITY, q), ParameterError);
}

TEST_CASE("full line: integral of 1/(1+x^2) is pi") {
    QuadratureSpec q;
    q.tail = TailBound::algebraic(2.0);
    const auto v = integrate_line([](cplx x) { return 1.0 / (1.0 + x * x); }, Line{0.0, 1.0}, q);
    CHECK(std::abs(v.value - kPi) < 1e-9);
}

TEST_CASE("property: contour integral of an exact derivative vanishes") {
    gen::Source src(21);
    const StripGeometry g(1.0);
    for (int k = 0; k < 20; ++k) {
        const cplx w = k % 2 ? src.omega_plus(1.0, 0.2) : src.omega_minus(1.0, 0.2);
        QuadratureSpec q;
        q.tail = TailBound::algebraic(2.0);
        q.focus = {w};
        const auto v = integrate_contour([w](cplx z) { return 1.0 / ((z - w) * (z - w)); }, ContourSpec::boundary(g), q);
        CHECK(std::abs(v.value) < 1e-9);
    }
}

TEST_CASE("arc-length L^p norm of a pole on Gamma matches a direct leg sum") {
    const StripGeometry g(1.0);
    const cplx a(2.0, 0.0);
    QuadratureSpec q;
    q.tail = TailBound::algebraic(1.0);
    const LpNorm n = lp_norm_on_contour([a](cplx z) { return 1.0 / (z - a); }, 2.0, ContourSpec::boundary(g), q);
    // Legs: integral dv/((u-2)^2+v^2) = pi/(2|u-2|); segment: integral_{-1}^{1} dx/(x-2)^2 = 2/3.
    const double exact = kPi / 6.0 + kPi / 2.0 + 2.0 / 3.0;
    CHECK(n.value * n.value == doctest::Approx(exact).epsilon(1e-9));
    CHECK(n.leg_pth[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK_FALSE(n.quasi_norm);
}

TEST_CASE("tail class algebra") {
    const auto a2 = TailBound::algebraic(2.0);
    const auto e1 = TailBound::exponential(1.0);
    CHECK(tail_product(a2, TailBound::algebraic(1.0)).rate == 3.0);
    CHECK(tail_product(a2, e1).kind == TailBound::Kind::Exponential);
    CHECK(tail_sum(a2, TailBound::algebraic(1.0)).rate == 1.0);
    CHECK(tail_sum(a2, e1).kind == TailBound::Kind::Algebraic);
    CHECK(tail_power(a2, 1.5).rate == doctest::Approx(3.0));
    CHECK(tail_power(e1, 2.0).rate == doctest::Approx(2.0));
}

TEST_CASE("quadrature spec validation") {
    QuadratureSpec q;
    q.rel_tol = 0.0;
    CHECK_THROWS_AS(q.validate(), ParameterError);
}
