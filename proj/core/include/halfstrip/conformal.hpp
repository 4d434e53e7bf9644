#pragma once

#include "halfstrip/cauchy.hpp"
#include "halfstrip/common.hpp"
#include "halfstrip/geometry.hpp"
#include "halfstrip/quadrature.hpp"

#include <string>
#include <vector>

namespace halfstrip {

// Phi+ : C+ -> Omega+, Phi+(z) = (2 sigma/pi) arcsin z.
// Phi- : C- -> Omega-, Phi-(z) = (2 sigma/pi)(z sqrt(1-z^2) + arcsin z).
// Both send -1, 0, 1 to -sigma, 0, sigma. sqrt(1-z^2) = sqrt(1-z) sqrt(1+z) with the principal
// roots, continued to the real axis from the map's own half-plane.
cplx phi_plus(cplx z, const StripGeometry& g);
cplx phi_plus_prime(cplx z, const StripGeometry& g);
cplx psi_plus(cplx w, const StripGeometry& g);
cplx psi_plus_prime(cplx w, const StripGeometry& g);

cplx phi_minus(cplx z, const StripGeometry& g);
cplx phi_minus_prime(cplx z, const StripGeometry& g);
// Safeguarded Newton on Phi-; throws InversionError with the residual on failure.
cplx psi_minus(cplx w, const StripGeometry& g);
cplx psi_minus_prime(cplx w, const StripGeometry& g);

cplx phi(Side side, cplx z, const StripGeometry& g);
cplx phi_prime(Side side, cplx z, const StripGeometry& g);
cplx psi(Side side, cplx w, const StripGeometry& g);
cplx psi_prime(Side side, cplx w, const StripGeometry& g);

// The Schwarz-Christoffel integral from 0 to z along the segment, by quadrature.
cplx schwarz_christoffel_integral(Side side, cplx z, const StripGeometry& g, const QuadratureSpec& q);

struct BranchedMap {
    ComplexFn forward;
    ComplexFn derivative;
    ComplexFn inverse;
    ComplexFn inverse_derivative;
    RegionTag source;
    RegionTag target;
    std::string branch_rule;
};
BranchedMap conformal_map(Side side, const StripGeometry& g);

// T F(z) = F(Phi(z)) Phi'(z)^{1/p} on C+ or C-, principal power.
AnalyticFunction transform_T(const AnalyticFunction& F, double p, Side side);
// T^{-1} f(w) = f(Psi(w)) Psi'(w)^{1/p} on Omega+ or Omega-. `decay` describes |T^{-1} f| on vertical rays.
AnalyticFunction transform_T_inv(const AnalyticFunction& f, double p, Side side, const StripGeometry& g,
                                 TailBound decay = TailBound::algebraic(1.0));

// (integral over R of |T F(x + i y)|^p dx)^{1/p}, y > 0 on the plus side and y < 0 on the minus side.
// Equals the L^p norm of F over the image curve Phi({Im z = y}), which is how it is computed.
double transformed_line_norm(const AnalyticFunction& F, double p, Side side, double y, const QuadratureSpec& q);

struct DerivativeSignReport {
    int samples = 0;
    int violations = 0;
    int re_positive_failures = 0;
    int x_im_positive_failures = 0;
    int axis_failures = 0;
    double max_axis_imag = 0.0;  // |Im Phi'(i y)| relative to |Phi'|
};
// C+ samples test Phi+', C- samples test Phi-'. Real samples are a ParameterError.
DerivativeSignReport derivative_sign_report(const std::vector<cplx>& samples, const StripGeometry& g);

struct KernelBoundReport {
    double bound = 0.0;  // 3 2^{q+1} / ((q-1) eps^{q-1})
    std::vector<double> heights;
    std::vector<double> integrals;
    double max_integral = 0.0;
    double max_error_estimate = 0.0;
    bool within_bound = true;
};
// I(y) = integral over E_y of |Phi+'(t+iy)| / |Phi+(t+iy) - alpha|^q dt,
// E_y = {t : |Phi+(t+iy) - alpha| >= eps}.
KernelBoundReport conformal_kernel_bound_check(cplx alpha, double eps, double q_exp, const std::vector<double>& heights,
                                               const StripGeometry& g, const QuadratureSpec& q);

}  // namespace halfstrip
