#include "halfstrip/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace halfstrip {

namespace {

const cplx kTwoPiI(0.0, 2.0 * kPi);

QuadratureSpec transform_spec(const QuadratureSpec& q, const TailBound& decay, cplx w) {
    QuadratureSpec out = q;
    out.tail = tail_product(decay, TailBound::algebraic(1.0));
    out.focus = {w};
    // The transform decays like 1/|w|; keep the absolute tolerance relative to that scale.
    const double scale = 1.0 + std::abs(w);
    out.abs_tol = q.abs_tol / (scale * scale);
    return out;
}

QuadratureValue scaled(QuadratureValue v, cplx factor) {
    v.value *= factor;
    for (auto& l : v.leg_values) l *= factor;
    v.error_estimate *= std::abs(factor);
    return v;
}

}  // namespace

BoundaryFunction BoundaryFunction::zero() {
    BoundaryFunction f;
    f.eval = [](cplx) { return cplx{}; };
    f.decay = TailBound::exponential(1.0);
    f.p_min = 0.0;
    return f;
}

BoundaryFunction BoundaryFunction::from_arclength(std::function<cplx(double)> by_b, const StripGeometry& g,
                                                  TailBound decay) {
    BoundaryFunction f;
    const ContourSpec c = ContourSpec::boundary(g);
    f.eval = [by_b = std::move(by_b), c](cplx zeta) { return by_b(contour_parameter(zeta, c)); };
    f.decay = decay;
    return f;
}

bool RegionTag::contains(cplx w, const StripGeometry& g) const {
    switch (kind) {
        case Kind::OmegaPlus: return classify(w, g) == Region::OmegaPlus;
        case Kind::OmegaMinus: return classify(w, g) == Region::OmegaMinus;
        case Kind::UpperHalfPlane: return w.imag() > 0.0;
        case Kind::LowerHalfPlane: return w.imag() < 0.0;
        case Kind::RightOf: return w.real() > a;
        case Kind::LeftOf: return w.real() < a;
        case Kind::Plane: return true;
    }
    return false;
}

bool RegionTag::contains_closure(cplx w, const StripGeometry& g) const {
    switch (kind) {
        case Kind::OmegaPlus: return classify(w, g) != Region::OmegaMinus;
        case Kind::OmegaMinus: return classify(w, g) != Region::OmegaPlus;
        case Kind::UpperHalfPlane: return w.imag() >= 0.0;
        case Kind::LowerHalfPlane: return w.imag() <= 0.0;
        case Kind::RightOf: return w.real() >= a;
        case Kind::LeftOf: return w.real() <= a;
        case Kind::Plane: return true;
    }
    return false;
}

std::string RegionTag::name() const {
    switch (kind) {
        case Kind::OmegaPlus: return "Omega+";
        case Kind::OmegaMinus: return "Omega-";
        case Kind::UpperHalfPlane: return "C+";
        case Kind::LowerHalfPlane: return "C-";
        case Kind::RightOf: return "HalfPlane(Re>" + std::to_string(a) + ")";
        case Kind::LeftOf: return "HalfPlane(Re<" + std::to_string(a) + ")";
        case Kind::Plane: return "C";
    }
    return "?";
}

cplx AnalyticFunction::operator()(cplx w) const {
    const bool ok = region.contains(w, geometry) || (continuous_to_boundary && region.contains_closure(w, geometry));
    if (!ok) throw DomainError("point " + format_complex(w) + " is outside " + region.name());
    return eval(w);
}

QuadratureValue cauchy_transform_value(const BoundaryFunction& F, cplx w, const StripGeometry& g,
                                       const QuadratureSpec& q) {
    if (is_boundary(classify(w, g))) throw SingularityError("Cauchy transform evaluated on Gamma at " + format_complex(w));
    const QuadratureSpec qt = transform_spec(q, F.decay, w);
    const auto& f = F.eval;
    auto integrand = [&f, w](cplx zeta) { return f(zeta) / (zeta - w); };
    return scaled(integrate_contour(integrand, ContourSpec::boundary(g), qt), 1.0 / kTwoPiI);
}

cplx cauchy_transform(const BoundaryFunction& F, cplx w, const StripGeometry& g, const QuadratureSpec& q) {
    return cauchy_transform_value(F, w, g, q).value;
}

AnalyticFunction cauchy_transform_function(const BoundaryFunction& F, Side side, const StripGeometry& g,
                                           const QuadratureSpec& q) {
    AnalyticFunction out;
    out.eval = [F, g, q](cplx w) { return cauchy_transform(F, w, g, q); };
    out.region = RegionTag::omega(side);
    out.geometry = g;
    out.decay = TailBound::algebraic(1.0);
    return out;
}

QuadratureValue cauchy_transform_line_value(const ComplexFn& f, const TailBound& decay, cplx z, const Line& line,
                                            const QuadratureSpec& q) {
    const cplx d = line.direction / std::abs(line.direction);
    const double dist = std::abs(((z - line.origin) / d).imag());
    if (dist <= 1e-12 * std::max(1.0, std::abs((z / d).imag()))) throw SingularityError("line transform evaluated on the line at " + format_complex(z));
    const QuadratureSpec qt = transform_spec(q, decay, z);
    auto integrand = [&f, z](cplx zeta) { return f(zeta) / (zeta - z); };
    return scaled(integrate_line(integrand, line, qt), 1.0 / kTwoPiI);
}

cplx cauchy_transform_line(const ComplexFn& f, const TailBound& decay, cplx z, const Line& line,
                           const QuadratureSpec& q) {
    return cauchy_transform_line_value(f, decay, z, line, q).value;
}

cplx kernel_K(cplx z, cplx zeta, cplx zeta0) {
    const cplx d = zeta - zeta0;
    const cplx den = d * d - z * z;
    if (den == cplx{}) throw SingularityError("kernel evaluated at zeta = zeta0 +/- z");
    return z / (cplx(0.0, kPi) * den);
}

QuadratureValue kernel_integral(cplx z, cplx zeta0, const StripGeometry& g, const QuadratureSpec& q) {
    if (!is_boundary(classify(zeta0, g))) throw DomainError("zeta0 = " + format_complex(zeta0) + " is not on Gamma");
    if (classify(zeta0 + z, g) != Region::OmegaPlus)
        throw DomainError("zeta0 + z = " + format_complex(zeta0 + z) + " is not in Omega+");
    if (classify(zeta0 - z, g) != Region::OmegaMinus)
        throw DomainError("zeta0 - z = " + format_complex(zeta0 - z) + " is not in Omega-");
    QuadratureSpec qk = q;
    qk.tail = TailBound::algebraic(2.0);
    qk.focus = {zeta0 + z, zeta0 - z};
    return integrate_contour([z, zeta0](cplx zeta) { return kernel_K(z, zeta, zeta0); }, ContourSpec::boundary(g), qk);
}

double poisson_kernel(double a, double b) {
    if (!(a > 0.0)) throw DomainError("Poisson kernel requires a > 0");
    return a / (kPi * (a * a + b * b));
}

std::vector<double> default_schedule(cplx zeta0, const StripGeometry& g, int K) {
    if (K < 3) throw ParameterError("schedule needs at least 3 radii");
    const double r0 = std::min(0.1, 0.5 * approach_radius(zeta0, g));
    std::vector<double> r;
    for (int k = 1; k <= K; ++k) r.push_back(std::ldexp(r0, -k));
    return r;
}

namespace {

// Quadratic (Neville) extrapolation of the last three samples to r = 0.
cplx extrapolate(const std::vector<LimitTableRow>& t) {
    const size_t n = t.size();
    const double r0 = t[n - 3].r, r1 = t[n - 2].r, r2 = t[n - 1].r;
    const cplx f0 = t[n - 3].value, f1 = t[n - 2].value, f2 = t[n - 1].value;
    const cplx p01 = (r1 * f0 - r0 * f1) / (r1 - r0);
    const cplx p12 = (r2 * f1 - r1 * f2) / (r2 - r1);
    return (r2 * p01 - r0 * p12) / (r2 - r0);
}

}  // namespace

NontangentialLimit nontangential_limit(const AnalyticFunction& G, cplx zeta0, double alpha,
                                       const std::vector<double>& schedule) {
    Side side;
    if (G.region.kind == RegionTag::Kind::OmegaPlus)
        side = Side::Plus;
    else if (G.region.kind == RegionTag::Kind::OmegaMinus)
        side = Side::Minus;
    else
        throw DomainError("non-tangential limits need a function on Omega+ or Omega-");
    const Cone cone(zeta0, alpha, side, G.geometry);
    if (schedule.size() < 3) throw ParameterError("schedule needs at least 3 radii");
    for (size_t k = 0; k < schedule.size(); ++k) {
        if (!(schedule[k] > 0.0)) throw ParameterError("schedule radii must be positive");
        if (k > 0 && !(schedule[k] < schedule[k - 1])) throw ParameterError("schedule radii must decrease strictly");
    }
    NontangentialLimit out;
    for (double r : schedule) {
        const cplx w = zeta0 + r * cone.bisector();
        if (!cone.contains(w) || !G.region.contains(w, G.geometry))
            throw DomainError("approach point " + format_complex(w) + " exits the cone or region");
        out.table.push_back({r, G.eval(w)});
    }
    out.limit = extrapolate(out.table);
    const size_t n = out.table.size();
    const double d_last = std::abs(out.table[n - 1].value - out.table[n - 2].value);
    const double d_prev = std::abs(out.table[n - 2].value - out.table[n - 3].value);
    out.converged = d_last <= d_prev || d_last <= 1e-10 * (1.0 + std::abs(out.limit));
    return out;
}

JumpComponents jump_decompose(const BoundaryFunction& F, const StripGeometry& g, const QuadratureSpec& q) {
    JumpComponents out{cauchy_transform_function(F, Side::Plus, g, q), cauchy_transform_function(F, Side::Minus, g, q)};
    out.minus.eval = [F, g, q](cplx w) { return -cauchy_transform(F, w, g, q); };
    return out;
}

std::array<AnalyticFunction, 3> decompose_into_halfplanes(const BoundaryFunction& F, const StripGeometry& g,
                                                          const QuadratureSpec& q) {
    std::array<AnalyticFunction, 3> out;
    const std::array<RegionTag, 3> regions = {RegionTag{RegionTag::Kind::RightOf, -g.sigma},
                                              RegionTag{RegionTag::Kind::UpperHalfPlane, 0.0},
                                              RegionTag{RegionTag::Kind::LeftOf, g.sigma}};
    for (int j = 1; j <= 3; ++j) {
        ContourSpec c = ContourSpec::boundary(g);
        c.leg_mask = 1u << (j - 1);
        out[j - 1].region = regions[j - 1];
        out[j - 1].geometry = g;
        out[j - 1].decay = TailBound::algebraic(1.0);
        out[j - 1].eval = [F, g, q, c, j](cplx w) {
            if (leg_of(w, ContourSpec::boundary(g), default_snap(w)) == j)
                throw SingularityError("half-plane component evaluated on its leg at " + format_complex(w));
            const QuadratureSpec qt = transform_spec(q, F.decay, w);
            const auto& f = F.eval;
            auto integrand = [&f, w](cplx zeta) { return f(zeta) / (zeta - w); };
            return integrate_contour(integrand, c, qt).value / kTwoPiI;
        };
    }
    return out;
}

MembershipResult boundary_membership_test(const BoundaryFunction& F, Side side, const std::vector<cplx>& probes,
                                          const StripGeometry& g, const QuadratureSpec& q) {
    const Region want = side == Side::Plus ? Region::OmegaMinus : Region::OmegaPlus;
    MembershipResult out;
    for (cplx a : probes) {
        if (classify(a, g) != want)
            throw DomainError("probe " + format_complex(a) + " is not in " + to_string(want));
        const cplx v = cauchy_transform(F, a, g, q);
        out.values.push_back(v);
        out.max_abs = std::max(out.max_abs, std::abs(v));
    }
    return out;
}

std::vector<cplx> default_membership_probes(Side side, const StripGeometry& g, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    const double s = g.sigma;
    std::vector<cplx> out;
    if (side == Side::Plus) {
        std::uniform_real_distribution<double> U(-s - 4.0, s + 4.0), V(-4.0, 4.0);
        while (out.size() < 8) {
            const cplx w(U(rng), V(rng));
            const double d = std::hypot(std::max(0.0, std::abs(w.real()) - s), std::max(0.0, -w.imag()));
            if (d >= 0.5) out.push_back(w);
        }
    } else {
        const double margin = std::min(0.5, 0.5 * s);
        std::uniform_real_distribution<double> U(-s + margin, s - margin), V(margin, margin + 4.0);
        while (out.size() < 8) out.emplace_back(U(rng), V(rng));
    }
    return out;
}

QuadratureValue orthogonality_pairing(const BoundaryFunction& F, const BoundaryFunction& G, const ContourSpec& c,
                                      const QuadratureSpec& q) {
    QuadratureSpec qp = q;
    qp.tail = tail_product(F.decay, G.decay);
    const auto& f = F.eval;
    const auto& h = G.eval;
    return integrate_contour([&f, &h](cplx zeta) { return f(zeta) * h(zeta); }, c, qp);
}

}  // namespace halfstrip
