#include "gen.hpp"

#include "halfstrip/functions.hpp"
#include "halfstrip/hardy.hpp"

#include <doctest.h>

using namespace halfstrip;

TEST_CASE("grid estimate of exp(iw) approaches sqrt(3) from below") {
    const StripGeometry g(1.0);
    const auto F = parse_function("expw(1)").analytic(Side::Plus, g);
    const HpNormEstimate est = hp_norm_estimate(F, 2.0, Side::Plus, GridSpec{12, false}, {});
    // m(s,t)^2 = e^{-2t}(1 + 2s) on Gamma_{s,t}.
    for (const auto& gp : est.grid) CHECK(gp.m == doctest::Approx(std::sqrt(std::exp(-2.0 * gp.t) * (1.0 + 2.0 * gp.s))).epsilon(1e-9));
    CHECK(est.value <= std::sqrt(3.0));
    CHECK(est.value >= std::sqrt(3.0) - 1e-3);
    for (size_t j = 1; j < est.level_sup.size(); ++j) CHECK(est.level_sup[j] >= est.level_sup[j - 1]);
}

TEST_CASE("grid levels") {
    const StripGeometry g(1.0);
    const auto s = grid_s(Side::Plus, g, 4);
    const auto t = grid_t(Side::Plus, 4);
    REQUIRE(s.size() == 4);
    CHECK(s.back() == doctest::Approx(1.0 - 1.0 / 16.0));
    CHECK(t.back() == doctest::Approx(1.0 / 16.0));
    for (double x : grid_s(Side::Minus, g, 4)) CHECK(x > 1.0);
    for (double x : grid_t(Side::Minus, 4)) CHECK(x < 0.0);
}

TEST_CASE("a pole on Gamma shows divergence on the plus side") {
    const StripGeometry g(1.0);
    const auto F = parse_function("pole(0.3)").analytic(Side::Plus, g);
    const HpNormEstimate est = hp_norm_estimate(F, 2.0, Side::Plus, GridSpec{8, false}, {});
    CHECK(est.divergence_evidence);
    CHECK(est.refinement_trend == "divergent-evidence");
}

TEST_CASE("constants") {
    const Constants c2 = constants(2.0);
    CHECK(c2.A_p == doctest::Approx(std::sqrt(2.0)));
    CHECK(c2.B_p == doctest::Approx(std::sqrt(3.0) * 2.0));
    CHECK(c2.beta_half == doctest::Approx(kPi));
    CHECK(constants(3.0).beta_half == doctest::Approx(2.0));  // B(1/2, 1)
    CHECK(constants(4.0).A_p == doctest::Approx(std::pow(64.0, 0.25)));
    CHECK(strip_transform_bound(2.0, Side::Plus) == doctest::Approx(std::sqrt(2.5) * std::sqrt(2.0)));
    CHECK(strip_transform_bound(2.0, Side::Minus) == doctest::Approx(std::sqrt(3.0) * std::sqrt(2.0)));
    CHECK_THROWS_AS(constants(1.0), DomainError);
}

TEST_CASE("property: pointwise bound holds for corpus members") {
    const StripGeometry g(1.0);
    gen::Source src(51);
    for (const auto& f : test_corpus(g)) {
        if (f.side != Side::Plus || !f.member(2.0) || !f.exact_boundary_norm) continue;
        std::vector<cplx> samples;
        for (int k = 0; k < 30; ++k) samples.push_back(src.omega_plus(1.0, src.log_uniform(1e-4, 0.5)));
        const auto norm = f.exact_boundary_norm(2.0, g);
        if (!norm) continue;
        const PointwiseReport r = pointwise_bound_check(f.analytic(g), 2.0, Side::Plus, samples, {}, norm);
        CAPTURE(f.name);
        CHECK(r.violations == 0);
        CHECK(r.max_ratio <= 1.0);
    }
}

TEST_CASE("rho on both sides") {
    const StripGeometry g(1.0);
    CHECK(pointwise_rho({0.5, 2.0}, Side::Plus, g) == doctest::Approx(0.5));
    CHECK(pointwise_rho({0.0, 0.1}, Side::Plus, g) == doctest::Approx(0.1));
    CHECK(pointwise_rho({3.0, 1.0}, Side::Minus, g) == doctest::Approx(2.0));
    CHECK(pointwise_rho({0.5, -0.2}, Side::Minus, g) == doctest::Approx(0.2));
}

TEST_CASE("exact corpus norms agree with contour quadrature") {
    const StripGeometry g(1.5);
    for (const auto& f : test_corpus(g)) {
        if (!f.exact_boundary_norm) continue;
        for (double p : {1.5, 2.0, 3.0}) {
            const auto exact = f.exact_boundary_norm(p, g);
            if (!exact) continue;
            QuadratureSpec q;
            q.tail = f.form.decay;
            CAPTURE(f.name);
            CAPTURE(p);
            CHECK(lp_norm_on_contour(f.form.f, p, ContourSpec::boundary(g), q).value ==
                  doctest::Approx(*exact).epsilon(1e-8));
        }
    }
}

TEST_CASE("expw norm has the closed form (2 sigma + 2/(p lambda))^{1/p}") {
    const StripGeometry g(1.0);
    for (const auto& f : test_corpus(g)) {
        if (f.form.text != "expw(2)") continue;
        CHECK(*f.exact_boundary_norm(3.0, g) == doctest::Approx(std::pow(2.0 + 2.0 / 6.0, 1.0 / 3.0)));
    }
}

TEST_CASE("Laplace transform ratios with known values") {
    QuadratureSpec q;
    for (const auto& f : laplace_family(1)) {
        const LaplaceRatio r = laplace_bound_ratio(f, q);
        CAPTURE(f.name);
        CHECK(r.ratio <= std::sqrt(kPi) + 1e-9);
        if (f.name == "exp(-t)") CHECK(r.ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
        if (f.name == "1[0,1]") CHECK(r.ratio == doctest::Approx(std::sqrt(2.0 * std::log(2.0))).epsilon(1e-8));
    }
    CHECK(laplace_family(1).size() == 20);
    // g(y) = 1/(1+y) for f = e^{-t}.
    CHECK(std::abs(laplace_transform(laplace_family(1).front(), 3.0, q) - 0.25) < 1e-12);
}

TEST_CASE("line norm of 1/(x+i) on Im = t is sqrt(pi/(1+t))") {
    for (double t : {0.0, 0.5, 3.0}) {
        const double n = line_norm([](cplx z) { return 1.0 / (z + cplx(0.0, 1.0)); }, TailBound::algebraic(1.0), 2.0, t, {});
        CHECK(n == doctest::Approx(std::sqrt(kPi / (1.0 + t))).epsilon(1e-9));
    }
}
