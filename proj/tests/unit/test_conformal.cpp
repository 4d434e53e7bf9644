#include "gen.hpp"

#include "halfstrip/conformal.hpp"
#include "halfstrip/functions.hpp"

#include <doctest.h>

using namespace halfstrip;

TEST_CASE("property: Psi+ is the sine and inverts Phi+") {
    gen::Source src(61);
    for (double sigma : {0.5, 1.0, 2.5}) {
        const StripGeometry g(sigma);
        for (int k = 0; k < 50; ++k) {
            const cplx w = src.omega_plus(sigma, 1e-3);
            const cplx z = std::sin(kPi * w / (2.0 * sigma));
            CHECK(std::abs(psi_plus(w, g) - z) <= 1e-12 * std::max(1.0, std::abs(z)));
            CHECK(z.imag() > 0.0);
            CHECK(std::abs(phi_plus(z, g) - w) <= 1e-10 * std::max(1.0, std::abs(w)));
        }
    }
}

TEST_CASE("property: Phi- round trip and derivative against central differences") {
    gen::Source src(62);
    const StripGeometry g(1.0);
    for (int k = 0; k < 60; ++k) {
        const cplx z = src.lower(0.05, 3.0);
        const cplx w = phi_minus(z, g);
        CHECK(classify(w, g) == Region::OmegaMinus);
        CHECK(std::abs(psi_minus(w, g) - z) <= 1e-10 * std::max(1.0, std::abs(z)));
        const double h = 1e-5 * std::max(1.0, std::abs(z));
        const cplx fd = (phi_minus(z + h, g) - phi_minus(z - h, g)) / (2.0 * h);
        CHECK(std::abs(phi_minus_prime(z, g) - fd) <= 1e-6 * std::abs(fd));
        // d/dz [z sqrt(1-z^2) + arcsin z] = 2 sqrt(1-z^2)
        const cplx closed = 4.0 / kPi * std::sqrt(1.0 - z) * std::sqrt(1.0 + z);
        CHECK(std::abs(phi_minus_prime(z, g) - closed) <= 1e-12 * std::abs(closed));
        CHECK(std::abs(phi_minus_prime(z, g) * psi_minus_prime(w, g) - 1.0) < 1e-9);
    }
}

TEST_CASE("property: Schwarz-Christoffel quadrature matches the closed forms") {
    gen::Source src(63);
    const StripGeometry g(1.0);
    QuadratureSpec q;
    for (int k = 0; k < 20; ++k) {
        const cplx zp = src.upper(0.05, 3.0);
        const cplx zm = src.lower(0.05, 3.0);
        CHECK(std::abs(schwarz_christoffel_integral(Side::Plus, zp, g, q) - phi_plus(zp, g)) < 1e-9);
        CHECK(std::abs(schwarz_christoffel_integral(Side::Minus, zm, g, q) - phi_minus(zm, g)) < 1e-9);
    }
}

TEST_CASE("boundary correspondence") {
    const StripGeometry g(2.0);
    CHECK(std::abs(phi_plus({1.0, 0.0}, g) - cplx(2.0, 0.0)) < 1e-14);
    CHECK(std::abs(phi_plus({-1.0, 0.0}, g) - cplx(-2.0, 0.0)) < 1e-14);
    CHECK(std::abs(phi_minus({1.0, 0.0}, g) - cplx(2.0, 0.0)) < 1e-14);
    CHECK(std::abs(phi_minus({0.0, 0.0}, g)) < 1e-15);
    for (double x : {1.5, 3.0, 10.0}) {
        // arcsin x = pi/2 + i acosh x approached from above
        const cplx w = phi_plus({x, 0.0}, g);
        CHECK(w.real() == doctest::Approx(2.0));
        CHECK(w.imag() == doctest::Approx(4.0 / kPi * std::acosh(x)));
        CHECK(phi_plus({-x, 0.0}, g).real() == doctest::Approx(-2.0));
    }
    for (double x : {-0.9, -0.2, 0.4}) CHECK(std::abs(phi_plus({x, 0.0}, g).imag()) < 1e-15);
    for (double y : {0.1, 1.0, 7.0}) CHECK(phi_plus({0.0, y}, g).real() == 0.0);
}

TEST_CASE("derivative sign report") {
    gen::Source src(64);
    const StripGeometry g(1.0);
    std::vector<cplx> samples;
    for (int k = 0; k < 200; ++k) samples.push_back(k % 2 ? src.upper(1e-3, 10.0) : src.lower(1e-3, 10.0));
    for (double y : {0.5, 2.0}) {
        samples.emplace_back(0.0, y);
        samples.emplace_back(0.0, -y);
    }
    const DerivativeSignReport r = derivative_sign_report(samples, g);
    CHECK(r.samples == static_cast<int>(samples.size()));
    CHECK(r.violations == 0);
    CHECK(r.max_axis_imag == 0.0);
    CHECK_THROWS_AS(derivative_sign_report({cplx(0.5, 0.0)}, g), ParameterError);
}

TEST_CASE("conformal kernel integral stays under its bound") {
    const StripGeometry g(1.0);
    QuadratureSpec q;
    for (cplx alpha : {cplx(3.0, 0.0), cplx(0.0, 0.5), cplx(-2.0, 0.5)}) {
        const KernelBoundReport r = conformal_kernel_bound_check(alpha, 1.0, 2.0, {2.0, 0.5, 0.1}, g, q);
        CHECK(r.bound == doctest::Approx(24.0));
        CHECK(r.within_bound);
        CHECK(r.integrals.size() == 3);
    }
    CHECK_THROWS_AS(conformal_kernel_bound_check({3.0, 0.0}, 0.0, 2.0, {1.0}, g, q), ParameterError);
    CHECK_THROWS_AS(conformal_kernel_bound_check({3.0, 0.0}, 1.0, 1.0, {1.0}, g, q), ParameterError);
}

TEST_CASE("T then T^{-1} is the identity") {
    const StripGeometry g(1.0);
    gen::Source src(65);
    for (Side side : {Side::Plus, Side::Minus}) {
        const auto F = parse_function(side == Side::Plus ? "pole(2) + pole(-1-i)" : "pole(0.5i)").analytic(side, g);
        for (double p : {1.5, 2.0, 4.0}) {
            const AnalyticFunction back = transform_T_inv(transform_T(F, p, side), p, side, g);
            for (int k = 0; k < 10; ++k) {
                const cplx w = side == Side::Plus ? src.omega_plus(1.0, 0.05) : src.omega_minus(1.0, 0.05);
                CHECK(std::abs(back(w) - F(w)) <= 1e-10 * std::abs(F(w)));
            }
        }
    }
    const auto F = parse_function("pole(2)").analytic(Side::Plus, g);
    CHECK_THROWS_AS(transform_T(F, 2.0, Side::Minus), ParameterError);
    CHECK_THROWS_AS(transform_T(F, 0.0, Side::Plus), ParameterError);
}

TEST_CASE("transformed line norm equals the direct line integral") {
    const StripGeometry g(1.0);
    const auto F = parse_function("expw(1)").analytic(Side::Plus, g);
    const AnalyticFunction TF = transform_T(F, 2.0, Side::Plus);
    QuadratureSpec q;
    q.tail = TailBound::algebraic(2.0);
    for (double y : {0.25, 1.0}) {
        const auto direct = integrate_line([&](cplx x) { return cplx(std::norm(TF(x + cplx(0.0, y))), 0.0); },
                                           Line{0.0, 1.0}, q);
        CHECK(transformed_line_norm(F, 2.0, Side::Plus, y, {}) == doctest::Approx(std::sqrt(direct.value.real())).epsilon(1e-7));
    }
    CHECK_THROWS_AS(transformed_line_norm(F, 2.0, Side::Plus, -1.0, {}), DomainError);
}

TEST_CASE("domain errors") {
    const StripGeometry g(1.0);
    CHECK_THROWS_AS(psi_plus({3.0, 1.0}, g), DomainError);
    CHECK_THROWS_AS(psi_minus({0.0, 1.0}, g), DomainError);
    CHECK_THROWS_AS(phi_plus({0.0, -1.0}, g), DomainError);
    CHECK_THROWS_AS(phi_plus_prime({1.0, 0.0}, g), SingularityError);
    const BranchedMap m = conformal_map(Side::Minus, g);
    CHECK(std::abs(m.inverse(m.forward({0.3, -0.7})) - cplx(0.3, -0.7)) < 1e-12);
    CHECK_FALSE(m.branch_rule.empty());
}
