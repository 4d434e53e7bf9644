#include "gen.hpp"

#include "halfstrip/functions.hpp"

#include <doctest.h>

using namespace halfstrip;

TEST_CASE("complex literals") {
    CHECK(parse_complex("2") == cplx(2.0, 0.0));
    CHECK(parse_complex("-0.5i") == cplx(0.0, -0.5));
    CHECK(parse_complex("1+2i") == cplx(1.0, 2.0));
    CHECK(parse_complex("3-0.5i") == cplx(3.0, -0.5));
    CHECK(parse_complex("i") == cplx(0.0, 1.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(parse_complex("2e-3-1e1i") == cplx(2e-3, -10.0));
    CHECK_THROWS_AS(parse_complex(""), ParameterError);
    CHECK_THROWS_AS(parse_complex("1+"), ParameterError);
    CHECK_THROWS_AS(parse_complex("abc"), ParameterError);

    const auto pts = parse_points("1, 2i; 3-i  4");
    REQUIRE(pts.size() == 4);
    CHECK(pts[2] == cplx(3.0, -1.0));
    CHECK_THROWS_AS(parse_points(" "), ParameterError);
}

TEST_CASE("mini-language evaluates like the written formula") {
    const ClosedForm f = parse_function("scale(2)*pole(1+i,2) + expw(0.5)*pole(-3) - pole(2i)");
    gen::Source src(31);
    for (int k = 0; k < 50; ++k) {
        const cplx w(src.real(-5.0, 5.0), src.real(-5.0, 5.0));
        const cplx I(0.0, 1.0);
        const cplx expect = 2.0 / ((w - (1.0 + I)) * (w - (1.0 + I))) + std::exp(I * 0.5 * w) / (w + 3.0) - 1.0 / (w - 2.0 * I);
        CHECK(std::abs(f(w) - expect) <= 1e-13 * std::max(1.0, std::abs(expect)));
    }
    CHECK(f.has_exponential);
    CHECK(f.poles.size() == 3);
}

TEST_CASE("decay class and membership") {
    const StripGeometry g(1.0);
    CHECK(parse_function("pole(2)").membership(g) == Membership::Plus);
    CHECK(parse_function("pole(0.5i)").membership(g) == Membership::Minus);
    CHECK(parse_function("pole(2)+pole(0.5i)").membership(g) == Membership::Mixed);
    CHECK(parse_function("pole(1)").membership(g) == Membership::None);
    CHECK(parse_function("expw(1)").membership(g) == Membership::Plus);
    CHECK(parse_function("expw(1)*pole(0.5i)").membership(g) == Membership::Mixed);
    CHECK(parse_function("pole(2)").p_min() == doctest::Approx(1.0));
    CHECK(parse_function("pole(2,3)").p_min() == doctest::Approx(1.0 / 3.0));
    CHECK(parse_function("pole(2)*pole(3)").p_min() == doctest::Approx(0.5));
    CHECK(parse_function("expw(2)").p_min() == 0.0);
}

TEST_CASE("malformed specs are parameter errors") {
    for (const char* bad : {"", "pole(", "pole()", "pole(2,0)", "expw(-1)", "foo(1)", "pole(2)+", "pole(2)**pole(3)",
                            "(pole(2)"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_function(bad), ParameterError);
    }
}
