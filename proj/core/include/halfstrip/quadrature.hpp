#pragma once

#include "halfstrip/common.hpp"
#include "halfstrip/geometry.hpp"

#include <array>
#include <optional>
#include <vector>

namespace halfstrip {

// Decay of |integrand| along a ray, measured from the ray start r = 0:
// algebraic(q): C (1+r)^{-q}; exponential(lambda): C exp(-lambda r).
// Without an explicit constant, C is fitted from samples and then checked at larger heights.
struct TailBound {
    enum class Kind { None, Algebraic, Exponential };
    Kind kind = Kind::None;
    double rate = 0.0;
    std::optional<double> constant;

    static TailBound none() { return {}; }
    static TailBound algebraic(double q, std::optional<double> c = std::nullopt) { return {Kind::Algebraic, q, c}; }
    static TailBound exponential(double lambda, std::optional<double> c = std::nullopt) {
        return {Kind::Exponential, lambda, c};
    }
};

// Decay class of a product / sum / power of functions with the given classes.
TailBound tail_product(const TailBound& a, const TailBound& b);
TailBound tail_sum(const TailBound& a, const TailBound& b);
TailBound tail_power(const TailBound& a, double p);

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    TailBound tail = TailBound::none();
    // Lower bound for the reported truncation height of the rays.
    double min_truncation_height = 0.0;
    // Points near which the integrand is nearly singular; their projections become breakpoints.
    std::vector<cplx> focus;

    void validate() const;
};

struct QuadratureValue {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    std::array<cplx, 3> leg_values{};
    double truncation_height = 0.0;
    bool accuracy_warning = false;
    long evaluations = 0;
};

// A real-parameter piece of an integral: integral over [a, b] of g.
struct QuadraturePiece {
    std::function<cplx(double)> g;
    double a = 0.0;
    double b = 0.0;
    int slot = 0;  // which partial sum the piece contributes to
};

// Global adaptive Gauss-Kronrod 15 over a set of pieces. Panels are bisected in order of
// decreasing error until the total error meets max(abs_tol, rel_tol*|I|) - reserved.
struct AdaptiveResult {
    std::vector<cplx> slot_values;
    double error_estimate = 0.0;
    bool accuracy_warning = false;
    long evaluations = 0;
};
AdaptiveResult integrate_pieces(const std::vector<QuadraturePiece>& pieces, int slots, const QuadratureSpec& q,
                                double reserved_error = 0.0);

// Integral of h over [0, inf). Breakpoints (r > 0) mark near-singular locations.
// Returns the pieces realizing [0, R] plus the tail error beyond R.
struct RayPlan {
    std::vector<QuadraturePiece> pieces;
    double truncation = 0.0;  // R, in ray coordinates
    double tail_error = 0.0;
};
RayPlan plan_ray(const std::function<cplx(double)>& h, std::vector<double> breakpoints, const QuadratureSpec& q,
                 int slot);

// Integral over [0, inf) of a real-parameter function.
QuadratureValue integrate_half_line(const std::function<cplx(double)>& h, const QuadratureSpec& q,
                                    std::vector<double> breakpoints = {});

// Integral over [a, b].
QuadratureValue integrate_interval(const std::function<cplx(double)>& h, double a, double b, const QuadratureSpec& q,
                                   std::vector<double> breakpoints = {});

// Integral of f(zeta) dzeta along Gamma_{s,t} with the orientation of c.
// q.tail describes |f| on the vertical legs.
QuadratureValue integrate_contour(const ComplexFn& f, const ContourSpec& c, const QuadratureSpec& q);

// Integral of f(zeta) |dzeta| along Gamma_{s,t}.
QuadratureValue integrate_contour_arclength(const ComplexFn& f, const ContourSpec& c, const QuadratureSpec& q);

// Integral of f(zeta) dzeta along a full line (leg_values: tau<0, unused, tau>0).
QuadratureValue integrate_line(const ComplexFn& f, const Line& line, const QuadratureSpec& q);

struct LpNorm {
    double value = 0.0;
    double error_estimate = 0.0;  // on the p-th power
    std::array<double, 3> leg_pth{};
    double truncation_height = 0.0;
    bool quasi_norm = false;  // p < 1: the triangle inequality fails
    bool accuracy_warning = false;
};

// (integral over Gamma_{s,t} of |F|^p |dw|)^{1/p}; q.tail describes |F| (not |F|^p).
LpNorm lp_norm_on_contour(const ComplexFn& F, double p, const ContourSpec& c, const QuadratureSpec& q);

// Supremum of |F| on Gamma_{s,t}, sampled at quadrature nodes (p = infinity).
double sup_on_contour(const ComplexFn& F, const ContourSpec& c);

}  // namespace halfstrip
