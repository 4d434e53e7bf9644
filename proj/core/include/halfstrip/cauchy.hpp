#pragma once

#include "halfstrip/common.hpp"
#include "halfstrip/geometry.hpp"
#include "halfstrip/quadrature.hpp"

#include <array>
#include <optional>
#include <vector>

namespace halfstrip {

// Boundary datum F(zeta) on Gamma with the decay of |F| along the vertical rays.
struct BoundaryFunction {
    ComplexFn eval;
    TailBound decay = TailBound::algebraic(1.0);
    std::vector<double> singular_params;
    double p_min = 1.0;  // F is in L^p(Gamma) for p > p_min

    static BoundaryFunction zero();
    static BoundaryFunction from_arclength(std::function<cplx(double)> by_b, const StripGeometry& g, TailBound decay);
    cplx operator()(cplx zeta) const { return eval(zeta); }
};

struct RegionTag {
    enum class Kind { OmegaPlus, OmegaMinus, UpperHalfPlane, LowerHalfPlane, RightOf, LeftOf, Plane };
    Kind kind = Kind::Plane;
    double a = 0.0;  // abscissa for RightOf / LeftOf

    static RegionTag omega(Side side) { return {side == Side::Plus ? Kind::OmegaPlus : Kind::OmegaMinus, 0.0}; }
    static RegionTag half_plane(Side side) {
        return {side == Side::Plus ? Kind::UpperHalfPlane : Kind::LowerHalfPlane, 0.0};
    }
    bool contains(cplx w, const StripGeometry& g) const;
    // Closure membership, for functions continuous up to the boundary.
    bool contains_closure(cplx w, const StripGeometry& g) const;
    std::string name() const;
};

struct AnalyticFunction {
    ComplexFn eval;
    RegionTag region;
    StripGeometry geometry;
    // Decay of |F| along vertical rays inside the region (used to truncate norm integrals).
    TailBound decay = TailBound::algebraic(1.0);
    bool continuous_to_boundary = false;

    // Checked evaluation: the point must lie in the region (or its closure when continuous).
    cplx operator()(cplx w) const;
};

// (1/2 pi i) integral over Gamma of F(zeta)/(zeta - w) dzeta
QuadratureValue cauchy_transform_value(const BoundaryFunction& F, cplx w, const StripGeometry& g,
                                       const QuadratureSpec& q);
cplx cauchy_transform(const BoundaryFunction& F, cplx w, const StripGeometry& g, const QuadratureSpec& q);

// The transform as an analytic function on one side.
AnalyticFunction cauchy_transform_function(const BoundaryFunction& F, Side side, const StripGeometry& g,
                                           const QuadratureSpec& q);

// (1/2 pi i) integral over the line of f(zeta)/(zeta - z) dzeta; `decay` describes |f|.
QuadratureValue cauchy_transform_line_value(const ComplexFn& f, const TailBound& decay, cplx z, const Line& line,
                                            const QuadratureSpec& q);
cplx cauchy_transform_line(const ComplexFn& f, const TailBound& decay, cplx z, const Line& line,
                           const QuadratureSpec& q);

// K_z(zeta, zeta0) = (1/(pi i)) z / ((zeta - zeta0)^2 - z^2)
cplx kernel_K(cplx z, cplx zeta, cplx zeta0);
QuadratureValue kernel_integral(cplx z, cplx zeta0, const StripGeometry& g, const QuadratureSpec& q);

// (1/pi) a / (a^2 + b^2)
double poisson_kernel(double a, double b);

struct LimitTableRow {
    double r;
    cplx value;
};
struct NontangentialLimit {
    cplx limit;
    std::vector<LimitTableRow> table;
    bool converged = true;
};

// r_k = r0 2^{-k}, k = 1..K, with r0 = min(0.1, delta(zeta0)/2).
std::vector<double> default_schedule(cplx zeta0, const StripGeometry& g, int K = 16);

// Approaches zeta0 along the bisector of the cone on G's side (Omega+ or Omega-).
NontangentialLimit nontangential_limit(const AnalyticFunction& G, cplx zeta0, double alpha,
                                       const std::vector<double>& schedule);

struct JumpComponents {
    AnalyticFunction plus;   // +CF on Omega+
    AnalyticFunction minus;  // -CF on Omega-
};
JumpComponents jump_decompose(const BoundaryFunction& F, const StripGeometry& g, const QuadratureSpec& q);

// F_1 on Re w > -sigma, F_2 on C+, F_3 on Re w < sigma.
std::array<AnalyticFunction, 3> decompose_into_halfplanes(const BoundaryFunction& F, const StripGeometry& g,
                                                          const QuadratureSpec& q);

struct MembershipResult {
    double max_abs = 0.0;
    std::vector<cplx> values;
};
MembershipResult boundary_membership_test(const BoundaryFunction& F, Side side, const std::vector<cplx>& probes,
                                          const StripGeometry& g, const QuadratureSpec& q);
// 8 reproducible probes at distance >= 0.5 from Gamma on the side opposite to `side`.
std::vector<cplx> default_membership_probes(Side side, const StripGeometry& g, unsigned long long seed);

QuadratureValue orthogonality_pairing(const BoundaryFunction& F, const BoundaryFunction& G, const ContourSpec& c,
                                      const QuadratureSpec& q);

}  // namespace halfstrip
