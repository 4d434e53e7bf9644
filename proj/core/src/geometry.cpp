#include "halfstrip/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace halfstrip {

std::string to_string(Side side) { return side == Side::Plus ? "plus" : "minus"; }

std::string format_complex(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::string to_string(Region r) {
    switch (r) {
        case Region::OmegaPlus: return "Omega+";
        case Region::OmegaMinus: return "Omega-";
        case Region::Gamma1: return "Gamma1";
        case Region::Gamma2: return "Gamma2";
        case Region::Gamma3: return "Gamma3";
        case Region::CornerMinus: return "Corner(-sigma)";
        case Region::CornerPlus: return "Corner(+sigma)";
    }
    return "?";
}

bool is_boundary(Region r) { return r != Region::OmegaPlus && r != Region::OmegaMinus; }

bool is_corner(Region r) { return r == Region::CornerMinus || r == Region::CornerPlus; }

StripGeometry::StripGeometry(double sigma_) : sigma(sigma_) {
    if (!(sigma_ > 0.0) || !std::isfinite(sigma_)) throw ParameterError("sigma must be a positive finite number");
}

double default_snap(cplx w) { return 1e-12 * std::max(1.0, std::abs(w)); }

Region classify(cplx w, const StripGeometry& g) {
    // Each coordinate is compared at its own scale, so far-out points keep their distance to the legs.
    const double s = g.sigma;
    const double u = w.real();
    const double v = w.imag();
    const double su = 1e-12 * std::max(1.0, std::abs(u));
    const double sv = 1e-12 * std::max(1.0, std::abs(v));
    if (std::abs(w - cplx(-s, 0.0)) <= default_snap(w)) return Region::CornerMinus;
    if (std::abs(w - cplx(s, 0.0)) <= default_snap(w)) return Region::CornerPlus;
    if (std::abs(v) <= sv && std::abs(u) < s) return Region::Gamma2;
    if (v > 0.0 && std::abs(u + s) <= su) return Region::Gamma1;
    if (v > 0.0 && std::abs(u - s) <= su) return Region::Gamma3;
    if (std::abs(u) < s && v > 0.0) return Region::OmegaPlus;
    return Region::OmegaMinus;
}

Region classify(cplx w, const StripGeometry& g, double snap) {
    const double s = g.sigma;
    const double u = w.real();
    const double v = w.imag();
    if (std::abs(w - cplx(-s, 0.0)) <= snap) return Region::CornerMinus;
    if (std::abs(w - cplx(s, 0.0)) <= snap) return Region::CornerPlus;
    if (std::abs(v) <= snap && std::abs(u) < s) return Region::Gamma2;
    if (v > 0.0 && std::abs(u + s) <= snap) return Region::Gamma1;
    if (v > 0.0 && std::abs(u - s) <= snap) return Region::Gamma3;
    if (std::abs(u) < s && v > 0.0) return Region::OmegaPlus;
    return Region::OmegaMinus;
}

ContourSpec ContourSpec::boundary(const StripGeometry& g) { return ContourSpec{g.sigma, 0.0, true, 0b111}; }

void ContourSpec::validate() const {
    if (!(s > 0.0) || !std::isfinite(s) || !std::isfinite(t)) throw ParameterError("contour requires s > 0 and finite t");
}

cplx contour_point(double b, const ContourSpec& c) {
    if (b < -c.s) return {-c.s, c.t + (-b - c.s)};
    if (b > c.s) return {c.s, c.t + (b - c.s)};
    return {b, c.t};
}

int leg_of(cplx zeta, const ContourSpec& c, double snap) {
    const double u = zeta.real();
    const double v = zeta.imag();
    if (std::abs(v - c.t) <= snap && u >= -c.s - snap && u <= c.s + snap) return 2;
    if (v > c.t && std::abs(u + c.s) <= snap) return 1;
    if (v > c.t && std::abs(u - c.s) <= snap) return 3;
    return 0;
}

double contour_parameter(cplx zeta, const ContourSpec& c) {
    switch (leg_of(zeta, c, default_snap(zeta))) {
        case 1: return -(zeta.imag() - c.t) - c.s;
        case 2: return std::clamp(zeta.real(), -c.s, c.s);
        case 3: return (zeta.imag() - c.t) + c.s;
        default: throw DomainError("point " + format_complex(zeta) + " is not on the contour");
    }
}

Line gamma_line(int j, const StripGeometry& g) {
    switch (j) {
        case 1: return {cplx(-g.sigma, 0.0), cplx(0.0, -1.0)};
        case 2: return {cplx(0.0, 0.0), cplx(1.0, 0.0)};
        case 3: return {cplx(g.sigma, 0.0), cplx(0.0, 1.0)};
        default: throw ParameterError("line index must be 1, 2 or 3");
    }
}

namespace {

void check_st(double s, double t, const StripGeometry& g) {
    if (!(s > 0.0) || !std::isfinite(t)) throw ParameterError("translation requires s > 0 and finite t");
    (void)g;
}

}  // namespace

// gamma_{s,t} = {Re=-sigma, Im>t} u {Im=0, |Re|<=s} u {Re=sigma, Im>t}; ambiguous
// points resolve to the vertical legs.
cplx translate_P(cplx zeta, double s, double t, const StripGeometry& g) {
    check_st(s, t, g);
    const double snap = default_snap(zeta);
    const double u = zeta.real();
    const double v = zeta.imag();
    if (v > t && std::abs(u + g.sigma) <= snap) return {-s, v};
    if (v > t && std::abs(u - g.sigma) <= snap) return {s, v};
    if (std::abs(v) <= snap && std::abs(u) <= s + snap) return {u, t};
    throw DomainError("point " + format_complex(zeta) + " is not on gamma_{s,t}");
}

cplx translate_P_inv(cplx w, double s, double t, const StripGeometry& g) {
    check_st(s, t, g);
    const double snap = default_snap(w);
    const double u = w.real();
    const double v = w.imag();
    if (v > t + snap && std::abs(u + s) <= snap) return {-g.sigma, v};
    if (v > t + snap && std::abs(u - s) <= snap) return {g.sigma, v};
    if (std::abs(v - t) <= snap && std::abs(u) <= s + snap) return {u, 0.0};
    throw DomainError("point " + format_complex(w) + " is not on Gamma_{s,t}");
}

Cone::Cone(cplx vertex, double alpha, Side side, const StripGeometry& g) : vertex_(vertex), alpha_(alpha), side_(side) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("cone aperture must be positive");
    leg_ = classify(vertex, g);
    if (is_corner(leg_)) throw DomainError("cone vertex " + format_complex(vertex) + " is a corner");
    if (!is_boundary(leg_)) throw DomainError("cone vertex " + format_complex(vertex) + " is not on Gamma");
}

cplx Cone::bisector() const {
    const double sign = side_ == Side::Plus ? 1.0 : -1.0;
    switch (leg_) {
        case Region::Gamma1: return {sign, 0.0};
        case Region::Gamma2: return {0.0, sign};
        default: return {-sign, 0.0};
    }
}

bool Cone::contains(cplx w) const {
    cplx d = w - vertex_;
    if (side_ == Side::Minus) d = -d;
    const double x = d.real();
    const double y = d.imag();
    switch (leg_) {
        case Region::Gamma1: return x > 0.0 && std::abs(y) < alpha_ * x;
        case Region::Gamma2: return y > 0.0 && std::abs(x) < alpha_ * y;
        default: return x < 0.0 && std::abs(y) < -alpha_ * x;
    }
}

bool cone_contains(const Cone& k, cplx w) { return k.contains(w); }

double chord_arc_constant(double b0, const StripGeometry& g) {
    const double s = g.sigma;
    if (std::abs(std::abs(b0) - s) <= 1e-12 * std::max(1.0, s)) throw DomainError("chord-arc constant undefined at a corner");
    return std::min(s / std::sqrt(b0 * b0 + s * s), 1.0 / std::sqrt(2.0));
}

double approach_radius(cplx zeta0, const StripGeometry& g) {
    const Region r = classify(zeta0, g);
    if (is_corner(r)) throw DomainError("point " + format_complex(zeta0) + " is a corner");
    if (!is_boundary(r)) throw DomainError("point " + format_complex(zeta0) + " is not on Gamma");
    const double d = std::min(std::abs(zeta0 - cplx(-g.sigma, 0.0)), std::abs(zeta0 - cplx(g.sigma, 0.0)));
    return std::min(0.5 * d, g.sigma);
}

}  // namespace halfstrip
