#include "halfstrip/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

namespace halfstrip {

std::vector<double> grid_s(Side side, const StripGeometry& g, int J) {
    std::vector<double> out;
    for (int j = 1; j <= J; ++j) out.push_back(g.sigma * (side == Side::Plus ? 1.0 - std::ldexp(1.0, -j) : 1.0 + std::ldexp(1.0, -j)));
    return out;
}

std::vector<double> grid_t(Side side, int J) {
    std::vector<double> out;
    for (int j = 1; j <= J; ++j) out.push_back(side == Side::Plus ? std::ldexp(1.0, -j) : -std::ldexp(1.0, -j));
    return out;
}

HpNormEstimate hp_norm_estimate(const AnalyticFunction& F, double p, Side side, const GridSpec& grid,
                                const QuadratureSpec& q) {
    if (!(p > 0.0)) throw ParameterError("p must be positive");
    if (grid.J < 1 || grid.J > 64) throw ParameterError("grid depth J must lie in [1, 64]");
    const StripGeometry& g = F.geometry;
    const auto S = grid_s(side, g, grid.J);
    const auto T = grid_t(side, grid.J);
    HpNormEstimate out;
    out.p = p;
    out.side = side;
    QuadratureSpec qn = q;
    qn.tail = F.decay;
    const ComplexFn& eval = F.eval;  // contour points lie in the region by construction
    for (int i = 1; i <= grid.J; ++i) {
        for (int k = 1; k <= grid.J; ++k) {
            if (!grid.product && i != k) continue;
            const ContourSpec c{S[i - 1], T[k - 1], true, 0b111};
            GridPoint gp{i, k, c.s, c.t, 0.0};
            if (std::isinf(p)) {
                gp.m = sup_on_contour(eval, c);
            } else {
                const LpNorm n = lp_norm_on_contour(eval, p, c, qn);
                gp.m = n.value;
                out.accuracy_warning = out.accuracy_warning || n.accuracy_warning;
            }
            out.grid.push_back(gp);
        }
    }
    out.level_sup.assign(static_cast<size_t>(grid.J), 0.0);
    for (const auto& gp : out.grid) {
        const int level = std::max(gp.i, gp.k);
        for (int j = level; j <= grid.J; ++j) out.level_sup[j - 1] = std::max(out.level_sup[j - 1], gp.m);
    }
    out.value = out.level_sup.back();

    const int J = grid.J;
    if (out.value == 0.0) {
        out.refinement_trend = "flat";
    } else if (J >= 4) {
        auto inc = [&](int j) { return out.level_sup[j - 1] - out.level_sup[j - 2]; };
        const double d1 = inc(J), d2 = inc(J - 1), d3 = inc(J - 2);
        const bool growing = d1 > 1e-6 * std::max(1.0, out.value) && d1 >= 0.75 * d2 && d2 >= 0.75 * d3;
        out.divergence_evidence = growing;
        out.refinement_trend = growing ? "divergent-evidence" : "converging";
    } else {
        out.refinement_trend = "converging";
    }
    return out;
}

double pointwise_rho(cplx w, Side side, const StripGeometry& g) {
    const double u = w.real();
    const double v = w.imag();
    if (side == Side::Plus) return std::min(g.sigma - std::abs(u), v);
    if (std::abs(u) > g.sigma) return std::abs(u) - g.sigma;
    return std::abs(v);
}

PointwiseReport pointwise_bound_check(const AnalyticFunction& F, double p, Side side, const std::vector<cplx>& samples,
                                      const QuadratureSpec& q, std::optional<double> norm) {
    const StripGeometry& g = F.geometry;
    const Region want = side == Side::Plus ? Region::OmegaPlus : Region::OmegaMinus;
    for (cplx w : samples)
        if (classify(w, g) != want) throw DomainError("sample " + format_complex(w) + " is not in " + to_string(want));
    PointwiseReport out;
    out.norm = norm ? *norm : hp_norm_estimate(F, p, side, GridSpec{}, q).value;
    out.samples = static_cast<int>(samples.size());
    const double c = std::pow(2.0 / kPi, 1.0 / p);
    for (cplx w : samples) {
        const double bound = c * out.norm * std::pow(pointwise_rho(w, side, g), -1.0 / p);
        const double val = std::abs(F(w));
        if (bound > 0.0) out.max_ratio = std::max(out.max_ratio, val / bound);
        if (val > bound) {
            ++out.violations;
            out.max_violation = std::max(out.max_violation, val - bound);
        }
    }
    return out;
}

Constants constants(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("constants require 1 < p < infinity");
    Constants c{};
    c.A_p = std::pow(std::max(p / (p - 1.0), std::pow(p, p - 1.0)), 1.0 / p);
    c.three_pow = std::pow(3.0, 1.0 / p);
    c.five_halves_pow = std::pow(2.5, 1.0 / p);
    c.B_p = c.three_pow * p / (p - 1.0);
    c.beta_half = std::exp(std::lgamma(0.5) + std::lgamma(0.5 * (p - 1.0)) - std::lgamma(0.5 * p));
    return c;
}

double strip_transform_bound(double p, Side side) {
    const Constants c = constants(p);
    return (side == Side::Plus ? c.five_halves_pow : c.three_pow) * c.A_p;
}

namespace {

QuadratureValue half_line_integral(const std::function<cplx(double)>& h, const TailBound& decay,
                                   std::optional<double> support_end, const std::vector<double>& breaks,
                                   const QuadratureSpec& q) {
    if (support_end) return integrate_interval(h, 0.0, *support_end, q, breaks);
    QuadratureSpec qh = q;
    qh.tail = decay;
    return integrate_half_line(h, qh, breaks);
}

}  // namespace

cplx laplace_transform(const HalfLineFunction& f, double y, const QuadratureSpec& q) {
    if (!(y > 0.0)) throw DomainError("Laplace transform requires y > 0");
    const auto& fn = f.f;
    auto h = [&fn, y](double t) { return std::exp(-y * t) * fn(t); };
    // e^{-yt} lives on [0, few/y]; resolve that scale explicitly.
    std::vector<double> breaks = f.breakpoints;
    for (double c : {1.0, 8.0, 64.0}) breaks.push_back(c / y);
    return half_line_integral(h, tail_product(TailBound::exponential(y), f.decay), f.support_end, breaks, q).value;
}

LaplaceRatio laplace_bound_ratio(const HalfLineFunction& f, const QuadratureSpec& q) {
    LaplaceRatio out;
    const auto& fn = f.f;
    auto f2 = [&fn](double t) { return cplx(std::norm(fn(t)), 0.0); };
    const double nf2 = half_line_integral(f2, tail_power(f.decay, 2.0), f.support_end, f.breakpoints, q).value.real();
    out.norm_f = std::sqrt(std::max(0.0, nf2));
    if (out.norm_f == 0.0) return out;
    auto g2 = [&f, &q](double y) {
        QuadratureSpec qi = q;
        qi.abs_tol = q.abs_tol / ((1.0 + y) * (1.0 + y));
        return cplx(std::norm(laplace_transform(f, y, qi)), 0.0);
    };
    QuadratureSpec qo = q;
    qo.tail = TailBound::algebraic(2.0 - 2.0 * f.singular_order);
    const double ng2 = integrate_half_line(g2, qo).value.real();
    out.norm_g = std::sqrt(std::max(0.0, ng2));
    out.ratio = out.norm_g / out.norm_f;
    return out;
}

std::vector<HalfLineFunction> laplace_family(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> A(0.3, 4.0), B(0.5, 3.0), C(0.5, 2.5);
    std::vector<HalfLineFunction> out;
    auto add = [&out](std::string name, std::function<cplx(double)> f, TailBound d, std::vector<double> br = {},
                      std::optional<double> end = std::nullopt) {
        out.push_back({std::move(name), std::move(f), d, std::move(br), end});
    };
    add("exp(-t)", [](double t) { return cplx(std::exp(-t)); }, TailBound::exponential(1.0));
    add("1[0,1]", [](double) { return cplx(1.0); }, TailBound::none(), {}, 1.0);
    for (int k = 0; k < 3; ++k) {
        const double a = A(rng);
        add("exp(-a t)", [a](double t) { return cplx(std::exp(-a * t)); }, TailBound::exponential(a));
    }
    for (int k = 0; k < 2; ++k) {
        const double a = A(rng);
        add("t exp(-a t)", [a](double t) { return cplx(t * std::exp(-a * t)); }, TailBound::exponential(0.5 * a));
    }
    {
        const double a = A(rng);
        add("t^2 exp(-a t)", [a](double t) { return cplx(t * t * std::exp(-a * t)); }, TailBound::exponential(0.5 * a));
    }
    {
        const double c = C(rng);
        add("1[0,c]", [](double) { return cplx(1.0); }, TailBound::none(), {}, c);
    }
    {
        const double c = C(rng);
        add("1[0,c] + exp(-t)", [c](double t) { return cplx((t < c ? 1.0 : 0.0) + std::exp(-t)); },
            TailBound::exponential(1.0), {c});
    }
    add("1/(1+t)", [](double t) { return cplx(1.0 / (1.0 + t)); }, TailBound::algebraic(1.0));
    add("1/(1+t)^2", [](double t) { return cplx(1.0 / ((1.0 + t) * (1.0 + t))); }, TailBound::algebraic(2.0));
    add("(1+t)^(-3/4)", [](double t) { return cplx(std::pow(1.0 + t, -0.75)); }, TailBound::algebraic(0.75));
    add("t^(-1/4) exp(-t)", [](double t) { return cplx(std::pow(t, -0.25) * std::exp(-t)); },
        TailBound::exponential(1.0));
    out.back().singular_order = 0.25;
    {
        const double b = B(rng);
        add("exp(-t) cos(b t)", [b](double t) { return cplx(std::exp(-t) * std::cos(b * t)); },
            TailBound::exponential(1.0));
    }
    {
        const double b = B(rng);
        add("exp(-(1-ib) t)", [b](double t) { return std::exp(cplx(-1.0, b) * t); }, TailBound::exponential(1.0));
    }
    add("(1-2t) exp(-t)", [](double t) { return cplx((1.0 - 2.0 * t) * std::exp(-t)); }, TailBound::exponential(0.5));
    add("sin(t)/(1+t)^2", [](double t) { return cplx(std::sin(t) / ((1.0 + t) * (1.0 + t))); },
        TailBound::algebraic(2.0));
    {
        const double a = A(rng);
        add("exp(-t) + 3 exp(-a t)", [a](double t) { return cplx(std::exp(-t) + 3.0 * std::exp(-a * t)); },
            TailBound::exponential(std::min(1.0, a)));
    }
    add("t^(1/2) exp(-t)", [](double t) { return cplx(std::sqrt(t) * std::exp(-t)); }, TailBound::exponential(0.5));
    return out;
}

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

// Integral over Gamma of |zeta - w0|^{-2} |dzeta|.
double pole_square_integral(cplx w0, const StripGeometry& g) {
    const double s = g.sigma;
    const double a = w0.real();
    const double b = w0.imag();
    double total = 0.0;
    if (b != 0.0)
        total += (std::atan((s - a) / std::abs(b)) + std::atan((s + a) / std::abs(b))) / std::abs(b);
    else
        total += 1.0 / (a - s) - 1.0 / (a + s);
    for (double x : {-s, s}) {
        const double c = std::abs(x - a);
        if (c > 0.0)
            total += (0.5 * kPi + std::atan(b / c)) / c;
        else
            total += 1.0 / (-b);
    }
    return total;
}

}  // namespace

std::vector<TestFunction> test_corpus(const StripGeometry& g) {
    const double s = g.sigma;
    std::vector<TestFunction> out;
    auto add = [&](std::string spec, Side side) {
        ClosedForm form = parse_function(spec);
        TestFunction tf{spec, form, side, form.p_min(), {}};
        if (form.poles.size() == 1 && !form.has_exponential) {
            const Pole pole = form.poles[0];
            tf.exact_boundary_norm = [pole](double p, const StripGeometry& gg) -> std::optional<double> {
                if (std::abs(p * pole.order - 2.0) > 1e-14) return std::nullopt;
                return std::pow(pole_square_integral(pole.location, gg), 1.0 / p);
            };
        }
        out.push_back(std::move(tf));
    };
    // Poles in Omega-: members of H^p(Omega+).
    add(fmt("pole(%.17g)", s + 1.0), Side::Plus);
    add(fmt("pole(%.17g)", -s - 2.0), Side::Plus);
    add(fmt("pole(%.17g+1i)", s + 0.5), Side::Plus);
    add(fmt("pole(%.17g+2i)", -s - 0.7), Side::Plus);
    add(fmt("pole(%.17g-0.8i)", 0.3 * s), Side::Plus);
    add(fmt("pole(%.17g-1.5i,2)", -0.5 * s), Side::Plus);
    add(fmt("pole(%.17g,2)", s + 1.0), Side::Plus);
    add(fmt("pole(%.17g,3)", s + 1.0), Side::Plus);
    add(fmt("pole(%.17g)*pole(%.17g-1i)", s + 1.0, -0.4 * s), Side::Plus);
    add(fmt("pole(%.17g+0.5i)+pole(%.17g-0.5i)", -s - 1.0, 0.2 * s), Side::Plus);
    // Poles in Omega+: members of H^p(Omega-).
    add(fmt("pole(%.17gi)", 0.5 * s), Side::Minus);
    add(fmt("pole(%.17g+2i)", 0.3 * s), Side::Minus);
    add(fmt("pole(%.17g+0.4i)", -0.6 * s), Side::Minus);
    add(fmt("pole(%.17gi,2)", 0.5 * s), Side::Minus);
    add(fmt("pole(%.17g+1i)*pole(%.17g+3i)", 0.2 * s, -0.2 * s), Side::Minus);
    add(fmt("pole(%.17gi,3)", 0.7 * s), Side::Minus);
    // Exponentials e^{i lambda w}: members of H^p(Omega+) for every p > 0.
    for (double lam : {1.0, 0.5, 2.0}) {
        TestFunction tf{fmt("expw(%.17g)", lam), parse_function(fmt("expw(%.17g)", lam)), Side::Plus, 0.0, {}};
        tf.exact_boundary_norm = [lam](double p, const StripGeometry& gg) -> std::optional<double> {
            return std::pow(2.0 * gg.sigma + 2.0 / (p * lam), 1.0 / p);
        };
        out.push_back(std::move(tf));
    }
    add(fmt("expw(1)*pole(%.17g)", s + 1.0), Side::Plus);
    return out;
}

double line_norm(const ComplexFn& F, const TailBound& decay, double p, double t, const QuadratureSpec& q) {
    QuadratureSpec ql = q;
    ql.tail = tail_power(decay, p);
    auto h = [&F, p](cplx w) { return cplx(std::pow(std::abs(F(w)), p), 0.0); };
    const QuadratureValue v = integrate_line(h, Line{cplx(0.0, t), cplx(1.0, 0.0)}, ql);
    return std::pow(std::max(0.0, v.value.real()), 1.0 / p);
}

}  // namespace halfstrip
