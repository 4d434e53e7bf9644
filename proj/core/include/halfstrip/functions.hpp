#pragma once

#include "halfstrip/cauchy.hpp"
#include "halfstrip/common.hpp"
#include "halfstrip/geometry.hpp"
#include "halfstrip/quadrature.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace halfstrip {

struct Pole {
    cplx location;
    int order;
};

enum class Membership { Plus, Minus, Mixed, None };

std::string to_string(Membership m);

// Closed-form function built from the mini-language
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := pole(w0[,k]) | expw(lambda) | scale(c) | '(' expr ')'
// pole(w0,k) = (w - w0)^{-k}, expw(lambda) = exp(i lambda w) with lambda >= 0, scale(c) = c.
struct ClosedForm {
    std::string text;
    ComplexFn f;
    TailBound decay;          // of |f| along upward rays
    std::vector<Pole> poles;  // as written, without cancellation
    bool has_exponential = false;
    bool is_zero = false;

    cplx operator()(cplx w) const { return f(w); }
    // Rational pieces vanishing like |w|^{-d} are in L^p(Gamma) for p > 1/d.
    double p_min() const;
    Membership membership(const StripGeometry& g) const;
    BoundaryFunction boundary() const;
    AnalyticFunction analytic(Side side, const StripGeometry& g) const;
};

ClosedForm parse_function(std::string_view spec);

// "2", "-0.5i", "1+2i", "3-0.5i", "i", "2e-3-1e1i"
cplx parse_complex(std::string_view text);
// Comma, semicolon or whitespace separated complex literals.
std::vector<cplx> parse_points(std::string_view text);

}  // namespace halfstrip
