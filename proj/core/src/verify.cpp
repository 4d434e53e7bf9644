#include "halfstrip/verify.hpp"

#include "halfstrip/blaschke.hpp"
#include "halfstrip/cauchy.hpp"
#include "halfstrip/conformal.hpp"
#include "halfstrip/functions.hpp"
#include "halfstrip/geometry.hpp"
#include "halfstrip/hardy.hpp"
#include "halfstrip/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace halfstrip {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

void CheckParams::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ParameterError("sigma must be a positive finite number");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw ParameterError("quadrature tolerances must be positive");
    if (J < 4 || J > 24) throw ParameterError("grid depth J must lie in [4, 24]");
    for (double v : p)
        if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError("p values must be positive and finite");
}

namespace {

const std::vector<double> kSweep = {1.25, 1.5, 2.0, 3.0, 4.0};
const std::vector<double> kSweepSmall = {0.5, 1.0, 1.25, 1.5, 2.0, 3.0, 4.0};

struct Outcome {
    double violation = 0.0;
    double tolerance = 0.0;
    double error = 0.0;
    long long samples = 0;
    std::string detail;
    std::vector<std::pair<std::string, ParamValue>> extra;

    void note(double v) {
        if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
        violation = std::max(violation, v);
    }
};

struct Ctx {
    const CheckParams& P;
    StripGeometry g;
    QuadratureSpec q;
    std::mt19937_64 rng;

    // Tolerances widen with the requested quadrature accuracy.
    double tol(double base) const { return std::max(base, 100.0 * P.rel_tol); }
    std::vector<double> sweep(const std::vector<double>& dflt) const { return P.p.empty() ? dflt : P.p; }
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

    cplx point_in(Side side, double dmin) {
        const double s = g.sigma;
        if (side == Side::Plus) return {uniform(-s + dmin, s - dmin), uniform(dmin, 4.0 * s + dmin)};
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0: return {uniform(-s - 4.0, -s - dmin), uniform(-3.0, 4.0)};
            case 1: return {uniform(s + dmin, s + 4.0), uniform(-3.0, 4.0)};
            default: return {uniform(-s - 2.0, s + 2.0), uniform(-3.0, -dmin)};
        }
    }

    // Boundary point on leg `leg` (0 picks one at random) at least `cdist` from the corners.
    cplx boundary_point(int leg, double cdist) {
        const double s = g.sigma;
        if (leg == 0) leg = std::uniform_int_distribution<int>(1, 3)(rng);
        switch (leg) {
            case 1: return {-s, uniform(cdist, 5.0 * s)};
            case 2: return {uniform(-s + cdist, s - cdist), 0.0};
            default: return {s, uniform(cdist, 5.0 * s)};
        }
    }

    void track(const QuadratureValue& v, Outcome& o) const { o.error = std::max(o.error, v.error_estimate); }
};

BoundaryFunction rational_boundary(std::vector<std::pair<cplx, cplx>> terms) {
    BoundaryFunction b;
    b.eval = [terms](cplx w) {
        cplx s = 0.0;
        for (const auto& [c, a] : terms) s += c / (w - a);
        return s;
    };
    b.decay = TailBound::algebraic(1.0);
    return b;
}

std::vector<TestFunction> corpus_side(const StripGeometry& g, Side side, bool rational_only) {
    std::vector<TestFunction> out;
    for (auto& f : test_corpus(g))
        if (f.side == side && (!rational_only || !f.form.has_exponential)) out.push_back(f);
    return out;
}

// Ten boundary data for the transform bounds: arc-length profiles and mixed rationals with 1/zeta^2 decay.
std::vector<BoundaryFunction> strip_data(const StripGeometry& g) {
    const double s = g.sigma;
    std::vector<BoundaryFunction> out;
    out.push_back(BoundaryFunction::from_arclength(
        [](double b) { return cplx(std::exp(-b * b) * std::cos(3.0 * b), 1.0 / (1.0 + b * b)); }, g,
        TailBound::algebraic(2.0)));
    out.push_back(BoundaryFunction::from_arclength([](double b) { return cplx(1.0 / std::cosh(b), 0.0); }, g,
                                                   TailBound::exponential(1.0)));
    out.push_back(BoundaryFunction::from_arclength([](double b) { return 1.0 / (cplx(1.0, b) * cplx(1.0, b)); }, g,
                                                   TailBound::algebraic(2.0)));
    out.push_back(BoundaryFunction::from_arclength(
        [](double b) { return cplx(0.0, 1.0) * std::exp(cplx(-0.5 * b * b, b)); }, g, TailBound::exponential(1.0)));
    const cplx I(0.0, 1.0);
    const std::vector<std::pair<cplx, cplx>> pairs = {
        {s + 1.0, 0.5 * s * I},          {-s - 0.5, 0.3 * s + 2.0 * I}, {-0.5 * I, 0.2 * s + 0.8 * I},
        {2.0 * s + I, -0.4 * s + 3.0 * I}, {0.3 * s - 1.5 * I, 0.6 * s * I}, {-2.0 * s - I, 0.5 * s + 1.5 * I}};
    for (const auto& [a, b] : pairs) {
        BoundaryFunction f = rational_boundary({{1.0, a}, {-1.0, b}});
        f.decay = TailBound::algebraic(2.0);
        out.push_back(f);
    }
    return out;
}

// Memoized evaluation: the p sweep revisits the same quadrature nodes.
ComplexFn memoized(ComplexFn f) {
    auto cache = std::make_shared<std::map<std::pair<double, double>, cplx>>();
    return [f = std::move(f), cache](cplx w) {
        const auto key = std::make_pair(w.real(), w.imag());
        auto it = cache->find(key);
        if (it != cache->end()) return it->second;
        const cplx v = f(w);
        cache->emplace(key, v);
        return v;
    };
}

// ---------------------------------------------------------------------------------------------

Outcome check_K1(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-8);
    for (int n = 0; n < 50; ++n) {
        const cplx z0 = c.boundary_point(n % 3 + 1, 0.1 * c.g.sigma);
        const Cone cone(z0, 1.0, Side::Plus, c.g);
        const double r = approach_radius(z0, c.g) * c.uniform(0.05, 0.9);
        const cplx z = r * cone.bisector() * std::polar(1.0, c.uniform(-0.7, 0.7));
        const QuadratureValue v = kernel_integral(z, z0, c.g, c.q);
        c.track(v, o);
        o.note(std::abs(v.value - 1.0));
        ++o.samples;
    }
    return o;
}

Outcome check_K2(Ctx& c) {
    Outcome o;
    o.tolerance = 1e-12;
    const ContourSpec gamma = ContourSpec::boundary(c.g);
    std::vector<double> bs;
    for (int k = -200; k <= 200; ++k) bs.push_back(std::sinh(k / 40.0) * c.g.sigma);
    for (double alpha : {0.5, 1.0, 2.0}) {
        const double C = 2.0 * (1.0 + alpha * alpha) / kPi;
        for (int n = 0; n < 12; ++n) {
            const cplx z0 = c.boundary_point(n % 3 + 1, 0.1 * c.g.sigma);
            const double b0 = contour_parameter(z0, gamma);
            const double delta = approach_radius(z0, c.g);
            for (Side side : {Side::Plus, Side::Minus}) {
                const Cone cone(z0, alpha, side, c.g);
                for (int m = 0; m < 6; ++m) {
                    const double phi = c.uniform(-0.999, 0.999) * std::atan(alpha);
                    const cplx z = delta * c.uniform(1e-4, 0.999) * cone.bisector() * std::polar(1.0, phi);
                    std::vector<double> local = bs;
                    for (double e : {1e-6, 1e-4, 1e-2}) {
                        local.push_back(b0 + e * std::abs(z) * 100.0);
                        local.push_back(b0 - e * std::abs(z) * 100.0);
                    }
                    local.push_back(b0);
                    for (double b : local) {
                        const cplx zeta = contour_point(b, gamma);
                        const double d2 = std::norm(zeta - z0) + std::norm(z);
                        const double ratio = std::abs(kernel_K(z, zeta, z0)) * d2 / (C * std::abs(z));
                        o.note(ratio - 1.0);
                        ++o.samples;
                    }
                }
            }
        }
    }
    o.violation = std::max(0.0, o.violation);
    return o;
}

Outcome check_C(Ctx& c, Side side) {
    Outcome o;
    o.tolerance = c.tol(1e-8);
    auto fns = corpus_side(c.g, side, true);
    if (fns.size() > 10) fns.resize(10);
    for (const auto& f : fns) {
        const BoundaryFunction b = f.boundary();
        for (Side region : {Side::Plus, Side::Minus}) {
            for (int k = 0; k < 20; ++k) {
                const cplx w = c.point_in(region, 0.05 * c.g.sigma);
                const QuadratureValue v = cauchy_transform_value(b, w, c.g, c.q);
                c.track(v, o);
                cplx expect = 0.0;
                if (region == side) expect = side == Side::Plus ? f.form(w) : -f.form(w);
                o.note(std::abs(v.value - expect));
                ++o.samples;
            }
        }
    }
    o.extra.push_back({"functions", static_cast<long long>(fns.size())});
    return o;
}

Outcome check_C3(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-4);
    const auto data = strip_data(c.g);
    const GridSpec grid{std::min(c.P.J, 5), false};
    std::vector<double> ps;
    for (double p : c.sweep(kSweep))
        if (p > 1.0) ps.push_back(p);
    std::vector<double> nf;
    double worst = 0.0;
    for (const auto& F : data) {
        QuadratureSpec qb = c.q;
        qb.tail = F.decay;
        nf.clear();
        for (double p : ps) nf.push_back(lp_norm_on_contour(F.eval, p, ContourSpec::boundary(c.g), qb).value);
        for (Side side : {Side::Plus, Side::Minus}) {
            AnalyticFunction CF = cauchy_transform_function(F, side, c.g, c.q);
            CF.eval = memoized(CF.eval);
            for (size_t k = 0; k < ps.size(); ++k) {
                const HpNormEstimate est = hp_norm_estimate(CF, ps[k], side, grid, c.q);
                const double ratio = est.value / nf[k];
                const double bound = strip_transform_bound(ps[k], side);
                worst = std::max(worst, ratio / bound);
                o.note(ratio - bound);
                ++o.samples;
            }
        }
    }
    o.violation = std::max(0.0, o.violation);
    o.extra.push_back({"grid_J", static_cast<long long>(grid.J)});
    o.extra.push_back({"boundary_data", static_cast<long long>(data.size())});
    std::ostringstream os;
    os << "largest ratio / bound " << worst;
    o.detail = os.str();
    return o;
}

Outcome check_C4(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-4);
    struct LineDatum {
        ComplexFn f;
        TailBound decay;
    };
    const std::vector<LineDatum> data = {
        {[](cplx t) { return 1.0 / (1.0 + t * t); }, TailBound::algebraic(2.0)},
        {[](cplx t) { return std::exp(-t * t) * std::cos(2.0 * t) + cplx(0.0, 1.0) * t / (1.0 + t * t * t * t); },
         TailBound::algebraic(3.0)},
    };
    const Line real_axis = gamma_line(2, c.g);
    double worst = 0.0;
    for (double p : c.sweep(kSweep)) {
        if (!(p > 1.0)) continue;
        const double Ap = constants(p).A_p;
        for (const auto& d : data) {
            const double nf = line_norm(d.f, d.decay, p, 0.0, c.q);
            double sup = 0.0;
            for (double y : {1.0, 0.1, 0.01}) {
                auto Cf = [&](cplx z) { return cauchy_transform_line(d.f, d.decay, z, real_axis, c.q); };
                sup = std::max(sup, line_norm(Cf, TailBound::algebraic(1.0), p, y, c.q));
            }
            worst = std::max(worst, sup / (Ap * nf));
            o.note(sup / nf - Ap);
            ++o.samples;
        }
    }
    o.violation = std::max(0.0, o.violation);
    std::ostringstream os;
    os << "largest ratio / A_p " << worst;
    o.detail = os.str();
    return o;
}

Outcome check_J1(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-6);
    const double s = c.g.sigma;
    for (int n = 0; n < 10; ++n) {
        const cplx a_minus = c.point_in(Side::Minus, 0.3 * s);
        const cplx a_plus = c.point_in(Side::Plus, 0.2 * s);
        const cplx c1(c.uniform(-1.0, 1.0), c.uniform(-1.0, 1.0));
        const BoundaryFunction F = rational_boundary({{1.0, a_minus}, {c1, a_plus}});
        const JumpComponents jc = jump_decompose(F, c.g, c.q);
        for (int k = 0; k < 20; ++k) {
            const cplx z0 = c.boundary_point(k % 3 + 1, 0.1 * s);
            const auto sched = default_schedule(z0, c.g);
            const NontangentialLimit lp = nontangential_limit(jc.plus, z0, 1.0, sched);
            const NontangentialLimit lm = nontangential_limit(jc.minus, z0, 1.0, sched);
            o.note(std::abs(lp.limit + lm.limit - F(z0)));
            ++o.samples;
        }
    }
    return o;
}

Outcome check_O1(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-8);
    const auto fns = corpus_side(c.g, Side::Plus, true);
    const ContourSpec gamma = ContourSpec::boundary(c.g);
    const size_t n = std::min<size_t>(10, fns.size());
    for (size_t k = 0; k < n; ++k) {
        const auto& F = fns[k];
        const auto& G = fns[(k + 1) % n];
        const QuadratureValue v = orthogonality_pairing(F.boundary(), G.boundary(), gamma, c.q);
        c.track(v, o);
        o.note(std::abs(v.value));
        ++o.samples;
    }
    // 1/(w-a) with a in Omega-, 1/(w-b) with b in Omega+: the residue at b gives 2 pi i/(b - a).
    const cplx a(c.g.sigma + 1.0, 0.0), b(0.0, 0.5 * c.g.sigma);
    const QuadratureValue v =
        orthogonality_pairing(rational_boundary({{1.0, a}}), rational_boundary({{1.0, b}}), gamma, c.q);
    c.track(v, o);
    o.note(std::abs(v.value - cplx(0.0, 2.0 * kPi) / (b - a)));
    ++o.samples;
    return o;
}

Outcome check_B1(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-8);
    int missed = 0;
    for (Side side : {Side::Plus, Side::Minus}) {
        const Side other = side == Side::Plus ? Side::Minus : Side::Plus;
        const auto probes = default_membership_probes(side, c.g, c.P.seed);
        auto members = corpus_side(c.g, side, true);
        auto others = corpus_side(c.g, other, true);
        members.resize(std::min<size_t>(5, members.size()));
        others.resize(std::min<size_t>(3, others.size()));
        for (const auto& f : members) {
            o.note(boundary_membership_test(f.boundary(), side, probes, c.g, c.q).max_abs);
            o.samples += static_cast<long long>(probes.size());
        }
        for (const auto& f : others) {
            if (boundary_membership_test(f.boundary(), side, probes, c.g, c.q).max_abs < 1e-3) ++missed;
            o.samples += static_cast<long long>(probes.size());
        }
    }
    if (missed > 0) o.note(1.0);
    o.detail = "non-members passed as members: " + std::to_string(missed);
    return o;
}

Outcome check_N1(Ctx& c) {
    Outcome o;
    o.tolerance = 1e-6;
    const GridSpec grid{c.P.J, false};
    for (Side side : {Side::Plus, Side::Minus}) {
        auto fns = corpus_side(c.g, side, false);
        fns.resize(std::min<size_t>(side == Side::Plus ? 6 : 3, fns.size()));
        for (const auto& f : fns) {
            const AnalyticFunction F = f.analytic(c.g);
            std::vector<cplx> samples;
            for (int k = 0; k < 40; ++k) samples.push_back(c.point_in(side, std::pow(10.0, c.uniform(-3.0, 0.0))));
            for (double p : c.sweep(kSweepSmall)) {
                if (!f.member(p)) continue;
                const PointwiseReport r = pointwise_bound_check(F, p, side, samples, c.q,
                                                                hp_norm_estimate(F, p, side, grid, c.q).value);
                o.note(r.max_ratio - 1.0);
                o.samples += r.samples;
            }
        }
    }
    o.violation = std::max(0.0, o.violation);
    return o;
}

double sup_on_segment(const ComplexFn& f, double u0, double u1, double v) {
    double m = 0.0;
    for (int k = 0; k <= 200; ++k) m = std::max(m, std::abs(f(cplx(u0 + (u1 - u0) * k / 200.0, v))));
    return m;
}

// Sups over |u| <= s must drop by 1e4 from v = 1 to v = 1e6; the L^2 norm over Gamma_{s,t} by 1e2.
Outcome check_N2(Ctx& c) {
    Outcome o;
    o.tolerance = 0.0;
    const double s = c.g.sigma;
    int nonmonotone = 0;
    double worst_sup = 0.0, worst_norm = 0.0;
    for (Side side : {Side::Plus, Side::Minus}) {
        auto fns = corpus_side(c.g, side, false);
        fns.resize(std::min<size_t>(5, fns.size()));
        for (const auto& f : fns) {
            const ComplexFn& F = f.form.f;
            // Plus: |u| <= s with s < sigma; minus: s1 <= |u| <= s2 with sigma < s1.
            const double u0 = side == Side::Plus ? -0.9 * s : 1.1 * s;
            const double u1 = side == Side::Plus ? 0.9 * s : 3.0 * s;
            auto sup_at = [&](double v) {
                double m = sup_on_segment(F, u0, u1, v);
                if (side == Side::Minus) m = std::max(m, sup_on_segment(F, -u1, -u0, v));
                return m;
            };
            const double first = sup_at(1.0);
            double prev = first, last = first;
            for (int e = 1; e <= 6; ++e) {
                last = sup_at(std::pow(10.0, e));
                if (last > prev * (1.0 + 1e-12)) ++nonmonotone;
                prev = last;
                ++o.samples;
            }
            worst_sup = std::max(worst_sup, last / std::max(first, 1e-300));
            o.note(last / std::max(first, 1e-300) - 1e-4);
            if (side == Side::Plus) {
                QuadratureSpec qn = c.q;
                qn.tail = f.form.decay;
                double m0 = 0.0, mprev = 0.0;
                for (int e = 0; e <= 6; ++e) {
                    const double m = lp_norm_on_contour(F, 2.0, ContourSpec{0.9 * s, std::pow(10.0, e), true, 0b111}, qn).value;
                    if (e == 0) m0 = m;
                    else if (m > mprev * (1.0 + 1e-9)) ++nonmonotone;
                    mprev = m;
                    ++o.samples;
                }
                worst_norm = std::max(worst_norm, mprev / std::max(m0, 1e-300));
                o.note(mprev / std::max(m0, 1e-300) - 1e-2);
            }
        }
    }
    if (nonmonotone > 0) o.note(1.0);
    o.violation = std::max(0.0, o.violation);
    std::ostringstream os;
    os << "largest sup decay ratio " << worst_sup << ", largest norm decay ratio " << worst_norm
       << ", non-monotone steps " << nonmonotone;
    o.detail = os.str();
    return o;
}

Outcome check_N3(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-6);
    const double s = c.g.sigma;
    const GridSpec grid{c.P.J, false};
    auto fns = corpus_side(c.g, Side::Minus, true);
    fns.resize(std::min<size_t>(4, fns.size()));
    for (const auto& f : fns) {
        const AnalyticFunction F = f.analytic(c.g);
        for (double p : c.sweep(kSweep)) {
            if (!f.member(p)) continue;
            const double est = hp_norm_estimate(F, p, Side::Minus, grid, c.q).value;
            double worst = 0.0;
            for (int j : {1, 3, 6}) {
                const double h = std::ldexp(1.0, -j);
                worst = std::max(worst, line_norm(F.eval, F.decay, p, -h, c.q));
                for (double u : {-s - h, s + h}) {
                    QuadratureSpec ql = c.q;
                    ql.tail = tail_power(F.decay, p);
                    const auto& fe = F.eval;
                    auto integrand = [&fe, p](cplx w) { return cplx(std::pow(std::abs(fe(w)), p), 0.0); };
                    const QuadratureValue v = integrate_line(integrand, Line{cplx(u, 0.0), cplx(0.0, 1.0)}, ql);
                    worst = std::max(worst, std::pow(v.value.real(), 1.0 / p));
                }
                o.samples += 3;
            }
            o.note(worst / est - 1.0);
        }
    }
    o.violation = std::max(0.0, o.violation);
    return o;
}

Outcome check_N4(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-8);
    const double s = c.g.sigma;
    const GridSpec grid{c.P.J, false};
    // Sum of half-plane members: poles left of -sigma, below the real axis, right of sigma.
    double worst = 0.0;
    for (int n = 0; n < 3; ++n) {
        const double a1 = c.uniform(0.2, 2.0), b2 = c.uniform(0.2, 2.0), a3 = c.uniform(0.2, 2.0);
        const cplx p1(-s - a1, c.uniform(-2.0, 2.0)), p2(c.uniform(-2.0, 2.0), -b2), p3(s + a3, c.uniform(-2.0, 2.0));
        const cplx k1(c.uniform(-1, 1), c.uniform(-1, 1)), k2(c.uniform(-1, 1), c.uniform(-1, 1)),
            k3(c.uniform(-1, 1), c.uniform(-1, 1));
        AnalyticFunction F;
        F.eval = [=](cplx w) { return k1 / (w - p1) + k2 / (w - p2) + k3 / (w - p3); };
        F.region = RegionTag::omega(Side::Plus);
        F.geometry = c.g;
        F.decay = TailBound::algebraic(1.0);
        for (double p : c.sweep(kSweep)) {
            if (!(p > 1.0)) continue;
            // ||1/(w - w0)|| over a line at distance d: (d^{1-p} B(1/2,(p-1)/2))^{1/p}.
            const double beta = constants(p).beta_half;
            auto hn = [&](double d) { return std::pow(std::pow(d, 1.0 - p) * beta, 1.0 / p); };
            const double bound = std::pow(2.5, 1.0 / p) * std::abs(k1) * hn(a1) +
                                 std::pow(2.0, 1.0 / p) * std::abs(k2) * hn(b2) +
                                 std::pow(2.5, 1.0 / p) * std::abs(k3) * hn(a3);
            const double est = hp_norm_estimate(F, p, Side::Plus, grid, c.q).value;
            worst = std::max(worst, est / bound);
            o.note(est / bound - 1.0);
            ++o.samples;
        }
    }
    // Leg-wise Cauchy integrals recombine to F on Omega+ and to 0 on Omega-.
    auto fns = corpus_side(c.g, Side::Plus, true);
    fns.resize(std::min<size_t>(3, fns.size()));
    for (const auto& f : fns) {
        const auto parts = decompose_into_halfplanes(f.boundary(), c.g, c.q);
        for (Side region : {Side::Plus, Side::Minus}) {
            for (int k = 0; k < 10; ++k) {
                const cplx w = c.point_in(region, 0.1 * s);
                const cplx sum = parts[0].eval(w) + parts[1].eval(w) + parts[2].eval(w);
                o.note(std::abs(sum - (region == Side::Plus ? f.form(w) : cplx(0.0))));
                ++o.samples;
            }
        }
    }
    o.violation = std::max(0.0, o.violation);
    std::ostringstream os;
    os << "largest sum-inclusion ratio " << worst;
    o.detail = os.str();
    return o;
}

Outcome check_L1(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-6);
    double worst = 0.0, exp_ratio = 0.0;
    for (const auto& f : laplace_family(c.P.seed)) {
        const LaplaceRatio r = laplace_bound_ratio(f, c.q);
        if (f.name == "exp(-t)") exp_ratio = r.ratio;
        worst = std::max(worst, r.ratio);
        o.note(r.ratio - std::sqrt(kPi));
        ++o.samples;
    }
    o.violation = std::max(0.0, o.violation);
    std::ostringstream os;
    os.precision(12);
    os << "largest ratio " << worst << ", exp(-t) ratio " << exp_ratio;
    o.detail = os.str();
    return o;
}

Outcome check_M1(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-9);
    const StripGeometry& g = c.g;
    int misplaced = 0;
    for (int k = 0; k < 100; ++k) {
        const cplx zp(c.uniform(-4.0, 4.0), c.uniform(1e-3, 4.0));
        const cplx zm(c.uniform(-4.0, 4.0), -c.uniform(1e-3, 4.0));
        o.note(std::abs(psi_plus(phi_plus(zp, g), g) - zp));
        o.note(std::abs(psi_minus(phi_minus(zm, g), g) - zm));
        o.note(std::abs(schwarz_christoffel_integral(Side::Plus, zp, g, c.q) - phi_plus(zp, g)));
        o.note(std::abs(schwarz_christoffel_integral(Side::Minus, zm, g, c.q) - phi_minus(zm, g)));
        o.note(std::abs(phi_plus_prime(zp, g) * psi_plus_prime(phi_plus(zp, g), g) - 1.0));
        o.note(std::abs(phi_minus_prime(zm, g) * psi_minus_prime(phi_minus(zm, g), g) - 1.0));
        const double x = c.uniform(-4.0, 4.0);
        if (std::abs(std::abs(x) - 1.0) > 1e-6) {
            const Region want = std::abs(x) < 1.0 ? Region::Gamma2 : (x < 0.0 ? Region::Gamma1 : Region::Gamma3);
            if (classify(phi_plus(cplx(x, 0.0), g), g) != want) ++misplaced;
            if (classify(phi_minus(cplx(x, 0.0), g), g) != want) ++misplaced;
        }
        o.samples += 7;
    }
    for (double x : {-1.0, 1.0}) {
        if (std::abs(phi_plus(cplx(x, 0.0), g) - x * g.sigma) > 1e-14 * g.sigma) ++misplaced;
        if (std::abs(phi_minus(cplx(x, 0.0), g) - x * g.sigma) > 1e-14 * g.sigma) ++misplaced;
    }
    if (misplaced > 0) o.note(1.0);
    o.detail = "boundary points mapped off their leg: " + std::to_string(misplaced);
    return o;
}

Outcome check_M2(Ctx& c) {
    Outcome o;
    o.tolerance = 0.0;
    std::vector<cplx> samples;
    for (int k = 0; k < 1000; ++k) {
        const double y = std::pow(10.0, c.uniform(-3.0, 1.0));
        const double x = k % 20 == 0 ? 0.0 : c.uniform(-5.0, 5.0);
        samples.emplace_back(x, k % 2 == 0 ? y : -y);
    }
    const DerivativeSignReport r = derivative_sign_report(samples, c.g);
    o.samples = r.samples;
    o.violation = r.violations;
    std::ostringstream os;
    os << "max |Im Phi'| / |Phi'| on the imaginary axis " << r.max_axis_imag;
    o.detail = os.str();
    return o;
}

Outcome check_M3(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-8);
    const double s = c.g.sigma;
    const std::vector<cplx> alphas = {cplx(3.0 * s, 0.0), cplx(0.0, 0.5 * s), cplx(-2.0 * s, 0.5), cplx(0.2 * s, 1.5)};
    double worst = 0.0;
    for (cplx a : alphas) {
        for (double eps : {0.5, 1.0, 2.0}) {
            for (double qe : {1.5, 2.0, 3.0}) {
                const KernelBoundReport r = conformal_kernel_bound_check(a, eps, qe, {2.0, 0.5, 0.1}, c.g, c.q);
                o.error = std::max(o.error, r.max_error_estimate);
                worst = std::max(worst, r.max_integral / r.bound);
                o.note(r.max_integral - r.bound);
                o.samples += static_cast<long long>(r.heights.size());
            }
        }
    }
    o.violation = std::max(0.0, o.violation);
    std::ostringstream os;
    os << "largest integral / bound " << worst;
    o.detail = os.str();
    return o;
}

Outcome check_T1(Ctx& c) {
    Outcome o;
    // Upper edge exact up to 0.01 grid slack; the lower edge allows 0.05.
    o.tolerance = 0.01;
    const GridSpec grid{c.P.J, false};
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, roundtrip = 0.0;
    for (Side side : {Side::Plus, Side::Minus}) {
        auto fns = corpus_side(c.g, side, side == Side::Minus);
        fns.resize(std::min<size_t>(side == Side::Plus ? 5 : 3, fns.size()));
        const double floor = std::pow(side == Side::Plus ? 5.0 : 6.0, -0.5);
        for (const auto& f : fns) {
            const AnalyticFunction F = f.analytic(c.g);
            const double est = hp_norm_estimate(F, 2.0, side, grid, c.q).value;
            double tn = 0.0;
            for (int j = 1; j <= 10; ++j) {
                const double y = std::ldexp(1.0, -j);
                tn = std::max(tn, transformed_line_norm(F, 2.0, side, side == Side::Plus ? y : -y, c.q));
            }
            const double ratio = tn / est;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            o.note(ratio - 1.0);
            o.note(floor - ratio - 0.04);
            ++o.samples;
            const AnalyticFunction TF = transform_T(F, 2.0, side);
            const AnalyticFunction back = transform_T_inv(TF, 2.0, side, c.g);
            for (int k = 0; k < 50; ++k) {
                const cplx w = c.point_in(side, 0.05 * c.g.sigma);
                roundtrip = std::max(roundtrip, std::abs(back.eval(w) - F.eval(w)) / std::max(1.0, std::abs(F.eval(w))));
            }
            o.samples += 50;
        }
    }
    if (roundtrip > 1e-9) o.note(1.0);
    o.violation = std::max(0.0, o.violation);
    std::ostringstream os;
    os << "ratio range [" << lo << ", " << hi << "], round-trip " << roundtrip;
    o.detail = os.str();
    return o;
}

Outcome check_BL1(Ctx& c) {
    Outcome o;
    o.tolerance = 1e-10;
    const StripGeometry& g = c.g;
    int interior_failures = 0;
    for (BlaschkeDomain d : {BlaschkeDomain::UpperHalfPlane, BlaschkeDomain::LowerHalfPlane, BlaschkeDomain::OmegaPlus,
                             BlaschkeDomain::OmegaMinus}) {
        for (int n = 1; n <= 8; ++n) {
            std::vector<cplx> zeros;
            for (int k = 0; k < n; ++k) {
                switch (d) {
                    case BlaschkeDomain::UpperHalfPlane: zeros.emplace_back(c.uniform(-3, 3), c.uniform(0.1, 3)); break;
                    case BlaschkeDomain::LowerHalfPlane: zeros.emplace_back(c.uniform(-3, 3), -c.uniform(0.1, 3)); break;
                    case BlaschkeDomain::OmegaPlus: zeros.push_back(c.point_in(Side::Plus, 0.1 * g.sigma)); break;
                    case BlaschkeDomain::OmegaMinus: zeros.push_back(c.point_in(Side::Minus, 0.1 * g.sigma)); break;
                }
            }
            const BlaschkeProduct B(zeros, d, g);
            for (int k = 0; k < 32; ++k) {
                cplx inside, edge;
                switch (d) {
                    case BlaschkeDomain::UpperHalfPlane:
                        inside = {c.uniform(-5, 5), c.uniform(1e-3, 5)};
                        edge = {c.uniform(-10, 10), 0.0};
                        break;
                    case BlaschkeDomain::LowerHalfPlane:
                        inside = {c.uniform(-5, 5), -c.uniform(1e-3, 5)};
                        edge = {c.uniform(-10, 10), 0.0};
                        break;
                    case BlaschkeDomain::OmegaPlus:
                        inside = c.point_in(Side::Plus, 1e-3);
                        edge = c.boundary_point(0, 1e-3);
                        break;
                    case BlaschkeDomain::OmegaMinus:
                        inside = c.point_in(Side::Minus, 1e-3);
                        edge = c.boundary_point(0, 1e-3);
                        break;
                }
                if (!(std::abs(blaschke_eval(B, inside)) < 1.0)) ++interior_failures;
                o.note(std::abs(std::abs(blaschke_eval(B, edge)) - 1.0));
                o.samples += 2;
            }
        }
    }
    if (interior_failures > 0) o.note(1.0);
    o.detail = "interior points with |B| >= 1: " + std::to_string(interior_failures);
    return o;
}

Outcome check_BL2(Ctx& c) {
    Outcome o;
    o.tolerance = 1e-9;
    const StripGeometry& g = c.g;
    const cplx I(0.0, 1.0);
    {
        const BlaschkeProduct B({I}, BlaschkeDomain::UpperHalfPlane);
        auto F = [I](cplx z) { return (z - I) / ((z + I) * (z + 2.0 * I)); };
        std::vector<cplx> probes;
        for (int k = 0; k < 50; ++k) probes.emplace_back(c.uniform(-10, 10), 0.0);
        const FactorizationReport r = factorization_modulus_check(F, {I}, B, probes);
        o.note(r.max_modulus_defect);
        if (!r.removable) o.note(1.0);
        o.samples += r.probes;
    }
    for (int n = 1; n <= 3; ++n) {
        std::vector<cplx> zeros;
        for (int k = 0; k < n; ++k) zeros.push_back(c.point_in(Side::Plus, 0.1 * g.sigma));
        const BlaschkeProduct B(zeros, BlaschkeDomain::OmegaPlus, g);
        const double a = g.sigma + 1.0;
        auto F = [&B, a](cplx w) { return blaschke_eval(B, w) / (w - a); };
        std::vector<cplx> probes;
        for (int k = 0; k < 50; ++k) probes.push_back(c.boundary_point(0, 1e-3));
        const FactorizationReport r = factorization_modulus_check(F, zeros, B, probes);
        o.note(r.max_modulus_defect);
        for (cplx z : probes) o.note(std::abs(std::abs(F(z)) - 1.0 / std::abs(z - a)));
        if (!r.removable) o.note(1.0);
        o.samples += r.probes;
    }
    return o;
}

Outcome check_NT1(Ctx& c) {
    Outcome o;
    o.tolerance = c.tol(1e-5);
    const double s = c.g.sigma;
    std::vector<BoundaryFunction> data = strip_data(c.g);
    data.push_back(BoundaryFunction::from_arclength([](double b) { return cplx(1.0 / (1.0 + b * b), 0.0); }, c.g,
                                                    TailBound::algebraic(2.0)));
    int nonmonotone = 0;
    for (int n = 0; n < 10; ++n) {
        const BoundaryFunction& F = data[n % data.size()];
        const cplx z0 = c.boundary_point(n % 3 + 1, 0.2 * s);
        const double alpha = std::array<double, 3>{0.5, 1.0, 2.0}[n % 3];
        const StripGeometry g = c.g;
        const QuadratureSpec q = c.q;
        AnalyticFunction G;
        G.region = RegionTag::omega(Side::Plus);
        G.geometry = g;
        G.eval = [F, g, q, z0](cplx w) { return cauchy_transform(F, w, g, q) - cauchy_transform(F, 2.0 * z0 - w, g, q); };
        const NontangentialLimit lim = nontangential_limit(G, z0, alpha, default_schedule(z0, g, 12));
        const cplx exact = F(z0);
        o.note(std::abs(lim.limit - exact));
        const size_t m = lim.table.size();
        for (size_t k = m - 5; k < m; ++k)
            if (std::abs(lim.table[k].value - exact) >= std::abs(lim.table[k - 1].value - exact)) ++nonmonotone;
        o.samples += static_cast<long long>(m);
    }
    if (nonmonotone > 0) o.note(1.0);
    o.detail = "non-monotone steps over the last 5 radii: " + std::to_string(nonmonotone);
    return o;
}

// ---------------------------------------------------------------------------------------------

struct Entry {
    CheckInfo info;
    Outcome (*run)(Ctx&);
};

Outcome check_C1(Ctx& c) { return check_C(c, Side::Plus); }
Outcome check_C2(Ctx& c) { return check_C(c, Side::Minus); }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = [] {
        std::vector<Entry> v = {
            {{"CHK-B1", "boundary characterization", "boundary trace characterization: (1/2 pi i) integral of F(zeta)/(zeta - alpha) dzeta = 0 for all alpha in Omega-", {"cauchy", "characterization"}}, check_B1},
            {{"CHK-BL1", "Blaschke boundary modulus", "Blaschke product on C+: |B(z)| < 1 on C+ and |B(x)| = 1 a.e.", {"blaschke"}}, check_BL1},
            {{"CHK-BL2", "factorization modulus", "factorization F = B+ G on Omega+ with ||F|| <= ||G||, |B+| = 1 on Gamma", {"blaschke"}}, check_BL2},
            {{"CHK-C1", "Cauchy representation, plus side", "Cauchy formula on Gamma: CF(w) = F(w) for w in Omega+, 0 for w in Omega-", {"cauchy"}}, check_C1},
            {{"CHK-C2", "Cauchy representation, minus side", "Cauchy formula on Gamma: CF(w) = 0 for w in Omega+, -F(w) for w in Omega-", {"cauchy"}}, check_C2},
            {{"CHK-C3", "strip transform bound", "||CF||_{H^p(Omega+)} <= (5/2)^{1/p} A_p ||F||, ||CF||_{H^p(Omega-)} <= 3^{1/p} A_p ||F||", {"bounds", "cauchy"}}, check_C3},
            {{"CHK-C4", "line transform bound", "sup_y ||Cf(. + iy)||_p <= A_p ||f||_p with A_p^p = max{p/(p-1), p^{p-1}}", {"bounds", "cauchy"}}, check_C4},
            {{"CHK-J1", "jump decomposition", "L^p(Gamma) datum is the sum of the boundary traces F+(zeta) + F-(zeta)", {"cauchy", "jump", "limits"}}, check_J1},
            {{"CHK-K1", "kernel normalization", "integral over Gamma of K_z(zeta, zeta0) dzeta = 1", {"kernel"}}, check_K1},
            {{"CHK-K2", "kernel cone bound", "|K_z(zeta, zeta0)| <= C|z| / (|zeta - zeta0|^2 + |z|^2), C = 2(1 + alpha^2)/pi", {"kernel"}}, check_K2},
            {{"CHK-L1", "Laplace bound", "||Lf||_{L^2(0,inf)} <= sqrt(pi) ||f||_{L^2(0,inf)}", {"bounds", "laplace"}}, check_L1},
            {{"CHK-M1", "conformal round trips", "Phi+(z) = (2 sigma/pi) arcsin z, Psi+(w) = sin(pi w / (2 sigma)), Phi-(z) = (4 sigma/pi) integral_0^z sqrt(1 - xi^2) dxi", {"conformal"}}, check_M1},
            {{"CHK-M2", "derivative signs", "Re Phi+'(x+iy) > 0, x Im Phi+'(x+iy) > 0 for x != 0, Im Phi+'(iy) = 0 (and the mirrored Phi-' statements)", {"conformal"}}, check_M2},
            {{"CHK-M3", "conformal kernel bound", "integral over E_y of |Phi+'(t+iy)| dt / |Phi+(t+iy) - alpha|^q <= 3 2^{q+1} / ((q-1) eps^{q-1})", {"conformal", "bounds"}}, check_M3},
            {{"CHK-N1", "pointwise bounds", "|F(w)| <= (2/pi)^{1/p} ||F|| (min{sigma - |u|, v})^{-1/p}", {"norms"}}, check_N1},
            {{"CHK-N2", "vertical decay", "F(u+iv) -> 0 uniformly for |u| <= s as v -> +inf", {"norms"}}, check_N2},
            {{"CHK-N3", "minus-side restriction", "F in H^p(Omega-) implies F in H^p(C-), H^p({Re w < -sigma}), H^p({Re w > sigma})", {"norms"}}, check_N3},
            {{"CHK-N4", "half-plane sums and decomposition", "H^p({Re w > -sigma}) + H^p(C+) + H^p({Re w < sigma}) in H^p(Omega+)", {"norms", "cauchy"}}, check_N4},
            {{"CHK-NT1", "non-tangential convergence", "lim integral over Gamma of K_z(zeta, zeta0) F(zeta) dzeta = F(zeta0) as z -> 0 in a cone", {"kernel", "limits"}}, check_NT1},
            {{"CHK-O1", "orthogonality", "integral over Gamma of F(zeta) G(zeta) dzeta = 0 for F in H^p(Omega+), G in H^q(Omega+)", {"cauchy", "orthogonality"}}, check_O1},
            {{"CHK-T1", "isomorphism norm bracket", "5^{-1/p} <= ||T+|| <= 1 and 6^{-1/p} <= ||T-|| <= 1", {"conformal", "norms"}}, check_T1},
        };
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.info.id < b.info.id; });
        return v;
    }();
    return list;
}

const Entry& find_entry(const std::string& id) {
    for (const auto& e : entries())
        if (e.info.id == id) return e;
    throw LookupError("unknown check id '" + id + "'");
}

unsigned long long id_hash(const std::string& id) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char ch : id) h = (h ^ ch) * 1099511628211ULL;
    return h;
}

}  // namespace

const std::vector<CheckInfo>& registry() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const std::map<std::string, std::string>& reference_map() {
    static const std::map<std::string, std::string> refs = [] {
        std::map<std::string, std::string> m;
        for (const auto& e : entries()) m[e.info.id] = e.info.paper_ref;
        return m;
    }();
    return refs;
}

VerificationReport run_check(const std::string& check_id, const CheckParams& params) {
    const Entry& e = find_entry(check_id);
    params.validate();
    VerificationReport rep;
    rep.check_id = e.info.id;
    rep.paper_ref = e.info.paper_ref;
    rep.tags = e.info.tags;
    rep.params = {{"sigma", params.sigma},
                  {"p", params.p},
                  {"rel_tol", params.rel_tol},
                  {"abs_tol", params.abs_tol},
                  {"J", static_cast<long long>(params.J)},
                  {"seed", static_cast<long long>(params.seed)}};

    Ctx ctx{params, StripGeometry(params.sigma), QuadratureSpec{}, std::mt19937_64(params.seed ^ id_hash(check_id))};
    ctx.q.rel_tol = params.rel_tol;
    ctx.q.abs_tol = params.abs_tol;

    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    bool numerical_error = false;
    try {
        o = e.run(ctx);
    } catch (const Error& ex) {
        numerical_error = true;
        o.detail = std::string("numerical error: ") + ex.what();
    }
    const auto t1 = std::chrono::steady_clock::now();

    rep.samples = o.samples;
    rep.tolerance = o.tolerance;
    rep.error_estimate = o.error;
    rep.detail = o.detail;
    for (auto& kv : o.extra) rep.params.push_back(kv);
    if (params.timing) rep.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (numerical_error) {
        rep.max_violation = std::numeric_limits<double>::max();
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }
    rep.max_violation = std::isfinite(o.violation) ? o.violation : std::numeric_limits<double>::max();
    if (rep.max_violation <= rep.tolerance)
        rep.verdict = Verdict::Pass;
    else if (o.error > rep.tolerance)
        rep.verdict = Verdict::Inconclusive;
    else
        rep.verdict = Verdict::Fail;
    return rep;
}

int thread_cap(int requested) {
    int n = requested;
    if (const char* env = std::getenv("HALFSTRIP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) n = static_cast<int>(v);
    }
    return std::max(1, n);
}

RunSummary run_all(const std::set<std::string>& tags, const CheckParams& params, int threads) {
    params.validate();
    std::vector<std::string> ids;
    for (const auto& info : registry()) {
        bool keep = tags.empty();
        for (const auto& t : info.tags) keep = keep || tags.count(t) > 0;
        if (keep) ids.push_back(info.id);
    }
    RunSummary out;
    out.reports.resize(ids.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < ids.size(); i = next++) out.reports[i] = run_check(ids[i], params);
    };
    const int n = std::min<int>(thread_cap(threads), static_cast<int>(std::max<size_t>(1, ids.size())));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < n; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& r : out.reports) {
        if (r.verdict == Verdict::Pass) ++out.pass;
        else if (r.verdict == Verdict::Fail) ++out.fail;
        else ++out.inconclusive;
    }
    return out;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) {
        std::visit([&params, &k = k](const auto& x) { params[k] = x; }, v);
    }
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["paper_ref"] = r.paper_ref;
    j["params"] = params;
    j["max_violation"] = r.max_violation;
    j["tolerance"] = r.tolerance;
    j["verdict"] = to_string(r.verdict);
    j["runtime_ms"] = r.runtime_ms;
    j["samples"] = r.samples;
    j["error_estimate"] = r.error_estimate;
    j["tags"] = r.tags;
    j["detail"] = r.detail;
    return j;
}

}  // namespace

std::string to_json(const VerificationReport& r) { return report_json(r).dump(2); }

std::string to_json(const RunSummary& s) {
    nlohmann::ordered_json j;
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}};
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : s.reports) j["reports"].push_back(report_json(r));
    return j.dump(2);
}

}  // namespace halfstrip
