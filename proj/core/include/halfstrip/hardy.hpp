#pragma once

#include "halfstrip/cauchy.hpp"
#include "halfstrip/common.hpp"
#include "halfstrip/functions.hpp"
#include "halfstrip/geometry.hpp"
#include "halfstrip/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace halfstrip {

// Plus side: s_j = sigma(1 - 2^{-j}), t_j = 2^{-j}; minus side: s_j = sigma(1 + 2^{-j}), t_j = -2^{-j}.
// `product` takes every (s_i, t_k) pair, otherwise only the diagonal (s_j, t_j).
struct GridSpec {
    int J = 16;
    bool product = true;
};

struct GridPoint {
    int i = 0;  // s level
    int k = 0;  // t level
    double s = 0.0;
    double t = 0.0;
    double m = 0.0;
};

struct HpNormEstimate {
    double p = 2.0;  // infinity allowed
    Side side = Side::Plus;
    double value = 0.0;
    std::vector<GridPoint> grid;
    std::vector<double> level_sup;  // running sup over grid levels 1..j
    std::string refinement_trend;   // "converging", "flat" or "divergent-evidence"
    bool divergence_evidence = false;
    bool accuracy_warning = false;
};

std::vector<double> grid_s(Side side, const StripGeometry& g, int J);
std::vector<double> grid_t(Side side, int J);

HpNormEstimate hp_norm_estimate(const AnalyticFunction& F, double p, Side side, const GridSpec& grid,
                                const QuadratureSpec& q);

struct PointwiseReport {
    double norm = 0.0;
    int samples = 0;
    int violations = 0;
    double max_ratio = 0.0;  // max |F(w)| / bound(w)
    double max_violation = 0.0;
};

// rho(w) = min{sigma - |u|, v} on Omega+; |u| - sigma when |u| > sigma, else |v|, on Omega-.
double pointwise_rho(cplx w, Side side, const StripGeometry& g);

// |F(w)| <= (2/pi)^{1/p} ||F|| rho(w)^{-1/p}. Uses `norm` when given, else hp_norm_estimate.
PointwiseReport pointwise_bound_check(const AnalyticFunction& F, double p, Side side, const std::vector<cplx>& samples,
                                      const QuadratureSpec& q, std::optional<double> norm = std::nullopt);

struct Constants {
    double A_p;              // A_p^p = max{p/(p-1), p^{p-1}}
    double B_p;              // 3^{1/p} p/(p-1)
    double beta_half;        // B(1/2, (p-1)/2)
    double five_halves_pow;  // (5/2)^{1/p}
    double three_pow;        // 3^{1/p}
};
Constants constants(double p);

// Bounds for the strip transform on Omega+ and Omega-.
double strip_transform_bound(double p, Side side);

// Function on [0, inf) with decay metadata and known breakpoints.
struct HalfLineFunction {
    std::string name;
    std::function<cplx(double)> f;
    TailBound decay = TailBound::algebraic(2.0);
    std::vector<double> breakpoints;
    std::optional<double> support_end;
    double singular_order = 0.0;  // |f(t)| ~ t^{-a} as t -> 0, a < 1/2; g then decays like y^{a-1}
};

// g(y) = integral over [0, inf) of exp(-y t) f(t) dt
cplx laplace_transform(const HalfLineFunction& f, double y, const QuadratureSpec& q);

struct LaplaceRatio {
    double ratio = 0.0;
    double norm_f = 0.0;
    double norm_g = 0.0;
};
LaplaceRatio laplace_bound_ratio(const HalfLineFunction& f, const QuadratureSpec& q);

// 20 decaying inputs with seeded parameters; includes exp(-t) and the indicator of [0,1].
std::vector<HalfLineFunction> laplace_family(unsigned long long seed);

struct TestFunction {
    std::string name;
    ClosedForm form;
    Side side;
    double p_min;  // member for p > p_min
    // Closed-form L^p(Gamma) norm of the boundary trace, where known.
    std::function<std::optional<double>(double p, const StripGeometry& g)> exact_boundary_norm;

    BoundaryFunction boundary() const { return form.boundary(); }
    AnalyticFunction analytic(const StripGeometry& g) const { return form.analytic(side, g); }
    bool member(double p) const { return p > p_min; }
};

std::vector<TestFunction> test_corpus(const StripGeometry& g);

// ||F||^p over the line {Im w = t}, i.e. (integral over R of |F(u+it)|^p du)^{1/p}.
double line_norm(const ComplexFn& F, const TailBound& decay, double p, double t, const QuadratureSpec& q);

}  // namespace halfstrip
