#pragma once

#include "halfstrip/common.hpp"

#include <string>

namespace halfstrip {

enum class Region { OmegaPlus, OmegaMinus, Gamma1, Gamma2, Gamma3, CornerMinus, CornerPlus };

std::string to_string(Region r);
bool is_boundary(Region r);
bool is_corner(Region r);

struct StripGeometry {
    double sigma = 1.0;

    StripGeometry() = default;
    explicit StripGeometry(double sigma);
};

// 1e-12 * max(1, |w|)
double default_snap(cplx w);

// Default: corners within default_snap(w); legs within 1e-12 * max(1, |coordinate|) of the
// coordinate being compared.
Region classify(cplx w, const StripGeometry& g);
Region classify(cplx w, const StripGeometry& g, double snap);

// Gamma_{s,t}: leg 1 is {-s+iv : v>t} traversed downward, leg 2 the segment
// {u+it : |u|<=s} left to right, leg 3 {s+iv : v>t} upward.
struct ContourSpec {
    double s = 1.0;
    double t = 0.0;
    bool domain_on_left = true;
    unsigned leg_mask = 0b111;  // bit j-1 selects leg j

    static ContourSpec boundary(const StripGeometry& g);
    bool has_leg(int j) const { return (leg_mask >> (j - 1)) & 1u; }
    void validate() const;
};

// Corner-anchored signed arc length: b=0 at the midpoint of leg 2.
cplx contour_point(double b, const ContourSpec& c);
// Inverse of contour_point for a point on the contour (within snap).
double contour_parameter(cplx zeta, const ContourSpec& c);
// 1, 2, 3 for the leg containing zeta, 0 when zeta is off the contour.
int leg_of(cplx zeta, const ContourSpec& c, double snap);

// Full lines gamma_1 = {Re = -sigma} downward, gamma_2 = R, gamma_3 = {Re = sigma} upward,
// parametrized as origin + direction * tau.
struct Line {
    cplx origin;
    cplx direction;
};
Line gamma_line(int j, const StripGeometry& g);

// P_{s,t}: gamma_{s,t} -> Gamma_{s,t}, leg by leg.
cplx translate_P(cplx zeta, double s, double t, const StripGeometry& g);
cplx translate_P_inv(cplx w, double s, double t, const StripGeometry& g);

class Cone {
public:
    Cone(cplx vertex, double alpha, Side side, const StripGeometry& g);

    bool contains(cplx w) const;
    // Unit vector along the cone axis, pointing into the cone.
    cplx bisector() const;
    cplx vertex() const { return vertex_; }
    double alpha() const { return alpha_; }
    Side side() const { return side_; }
    Region leg() const { return leg_; }

private:
    cplx vertex_;
    double alpha_;
    Side side_;
    Region leg_;
};

bool cone_contains(const Cone& k, cplx w);

// min{sigma / sqrt(b0^2 + sigma^2), 1/sqrt(2)}
double chord_arc_constant(double b0, const StripGeometry& g);

// Half the distance from a non-corner boundary point to the nearest corner, capped by sigma.
double approach_radius(cplx zeta0, const StripGeometry& g);

}  // namespace halfstrip
