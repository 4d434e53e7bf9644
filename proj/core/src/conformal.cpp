#include "halfstrip/conformal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace halfstrip {

namespace {

// Closed half-plane point with real-axis points tagged by a signed zero imaginary part,
// so the principal functions pick the limit from the map's half-plane.
cplx tag_axis(cplx z, Side side) {
    if (z.imag() == 0.0) return {z.real(), side == Side::Plus ? 0.0 : -0.0};
    return z;
}

void require_half_plane(cplx z, Side side, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(what) + ": non-finite argument");
    if ((side == Side::Plus && z.imag() < 0.0) || (side == Side::Minus && z.imag() > 0.0))
        throw DomainError(std::string(what) + ": " + format_complex(z) + " is not in the closed " +
                          (side == Side::Plus ? "upper" : "lower") + " half-plane");
}

// sqrt(1 - z^2) = sqrt(1 - z) sqrt(1 + z), principal roots.
cplx root(cplx z) { return std::sqrt(cplx(1.0 - z.real(), -z.imag())) * std::sqrt(cplx(1.0 + z.real(), z.imag())); }

double scale(const StripGeometry& g) { return 2.0 * g.sigma / kPi; }

}  // namespace

cplx phi_plus(cplx z, const StripGeometry& g) {
    require_half_plane(z, Side::Plus, "phi_plus");
    return scale(g) * std::asin(tag_axis(z, Side::Plus));
}

cplx phi_plus_prime(cplx z, const StripGeometry& g) {
    require_half_plane(z, Side::Plus, "phi_plus_prime");
    const cplx s = root(tag_axis(z, Side::Plus));
    if (s == cplx{}) throw SingularityError("phi_plus_prime: branch point " + format_complex(z));
    return scale(g) / s;
}

cplx psi_plus(cplx w, const StripGeometry& g) {
    if (classify(w, g) == Region::OmegaMinus) throw DomainError("psi_plus: " + format_complex(w) + " is in Omega-");
    return std::sin(w / scale(g));
}

cplx psi_plus_prime(cplx w, const StripGeometry& g) {
    if (classify(w, g) == Region::OmegaMinus)
        throw DomainError("psi_plus_prime: " + format_complex(w) + " is in Omega-");
    return std::cos(w / scale(g)) / scale(g);
}

cplx phi_minus(cplx z, const StripGeometry& g) {
    require_half_plane(z, Side::Minus, "phi_minus");
    const cplx zt = tag_axis(z, Side::Minus);
    return scale(g) * (zt * root(zt) + std::asin(zt));
}

cplx phi_minus_prime(cplx z, const StripGeometry& g) {
    require_half_plane(z, Side::Minus, "phi_minus_prime");
    return 2.0 * scale(g) * root(tag_axis(z, Side::Minus));
}

namespace {

cplx clamp_lower(cplx z) { return z.imag() > 0.0 ? cplx(z.real(), -0.0) : z; }

std::vector<cplx> newton_starts(cplx w, const StripGeometry& g) {
    const double s = g.sigma;
    std::vector<cplx> out;
    out.push_back(kPi * w / (4.0 * s));
    const cplx big = std::sqrt(cplx(0.0, -kPi / (2.0 * s)) * w);
    out.push_back(big.imag() > 0.0 ? -big : big);
    // Near z = +-1: Phi- -+ sigma ~ -+(8 sqrt2 sigma / 3 pi)(1 -+ z)^{3/2}.
    const double c = 8.0 * std::sqrt(2.0) * s / (3.0 * kPi);
    for (int sign : {1, -1}) {
        const cplx e = -static_cast<double>(sign) * (w - static_cast<double>(sign) * s) / c;
        const cplx base = std::pow(e, 2.0 / 3.0);
        for (int k = 0; k < 3; ++k) {
            const cplx rot = std::polar(1.0, 4.0 * kPi * k / 3.0);
            const cplx d = base * rot;
            out.push_back(sign > 0 ? 1.0 - d : -1.0 + d);
        }
    }
    for (auto& z : out) z = clamp_lower(z);
    return out;
}

}  // namespace

cplx psi_minus(cplx w, const StripGeometry& g) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw DomainError("psi_minus: non-finite argument");
    if (classify(w, g) == Region::OmegaPlus) throw DomainError("psi_minus: " + format_complex(w) + " is in Omega+");
    const double wscale = std::max(1.0, std::abs(w));
    auto residual = [&](cplx z) { return std::abs(phi_minus(z, g) - w); };

    cplx z = 0.0;
    double r = std::numeric_limits<double>::infinity();
    for (cplx c : newton_starts(w, g)) {
        const double rc = residual(c);
        if (rc < r) {
            r = rc;
            z = c;
        }
    }
    const double target = 4.0 * std::numeric_limits<double>::epsilon() * wscale;
    for (int it = 0; it < 200 && r > target; ++it) {
        cplx d = phi_minus_prime(z, g);
        if (d == cplx{}) d = cplx(1e-8, 0.0);
        const cplx step = (phi_minus(z, g) - w) / d;
        double lam = 1.0;
        bool improved = false;
        for (int h = 0; h < 40; ++h, lam *= 0.5) {
            const cplx zn = clamp_lower(z - lam * step);
            const double rn = residual(zn);
            if (rn < r) {
                z = zn;
                r = rn;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    if (r <= 1e-12 * wscale) return z;

    // Imaginary axis: Phi-(-iY) = -i (2 sigma/pi)(Y sqrt(1+Y^2) + asinh Y), increasing in Y.
    if (w.real() == 0.0 && w.imag() < 0.0) {
        double lo = 0.0, hi = 1.0;
        while (-phi_minus(cplx(0.0, -hi), g).imag() < -w.imag()) hi *= 2.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (-phi_minus(cplx(0.0, -mid), g).imag() < -w.imag())
                lo = mid;
            else
                hi = mid;
        }
        return {0.0, -0.5 * (lo + hi)};
    }
    throw InversionError("psi_minus did not converge at " + format_complex(w) + ", residual " + std::to_string(r));
}

cplx psi_minus_prime(cplx w, const StripGeometry& g) {
    const cplx d = phi_minus_prime(psi_minus(w, g), g);
    if (std::abs(d) < 1e-300) throw SingularityError("psi_minus_prime: corner " + format_complex(w));
    return 1.0 / d;
}

cplx phi(Side side, cplx z, const StripGeometry& g) {
    return side == Side::Plus ? phi_plus(z, g) : phi_minus(z, g);
}
cplx phi_prime(Side side, cplx z, const StripGeometry& g) {
    return side == Side::Plus ? phi_plus_prime(z, g) : phi_minus_prime(z, g);
}
cplx psi(Side side, cplx w, const StripGeometry& g) {
    return side == Side::Plus ? psi_plus(w, g) : psi_minus(w, g);
}
cplx psi_prime(Side side, cplx w, const StripGeometry& g) {
    return side == Side::Plus ? psi_plus_prime(w, g) : psi_minus_prime(w, g);
}

cplx schwarz_christoffel_integral(Side side, cplx z, const StripGeometry& g, const QuadratureSpec& q) {
    require_half_plane(z, side, "schwarz_christoffel_integral");
    const double k = scale(g);
    auto h = [&](double t) {
        const cplx xi = tag_axis(t * z, side);
        const cplx s = root(xi);
        return side == Side::Plus ? z * k / s : z * 2.0 * k * s;
    };
    std::vector<double> breaks;
    for (double c : {-1.0, 1.0}) {
        // Parameter of the point on the segment closest to the branch point c.
        const double n = std::norm(z);
        if (n == 0.0) break;
        const double t = (c * z.real()) / n;
        if (t > 0.0 && t < 1.0) breaks.push_back(t);
    }
    return integrate_interval(h, 0.0, 1.0, q, breaks).value;
}

BranchedMap conformal_map(Side side, const StripGeometry& g) {
    BranchedMap m;
    m.forward = [side, g](cplx z) { return phi(side, z, g); };
    m.derivative = [side, g](cplx z) { return phi_prime(side, z, g); };
    m.inverse = [side, g](cplx w) { return psi(side, w, g); };
    m.inverse_derivative = [side, g](cplx w) { return psi_prime(side, w, g); };
    m.source = RegionTag::half_plane(side);
    m.target = RegionTag::omega(side);
    m.branch_rule = side == Side::Plus ? "arg(1-z) in (-pi,0), arg(1+z) in (0,pi) on C+"
                                       : "arg(1-z) in (0,pi), arg(1+z) in (-pi,0) on C-";
    return m;
}

AnalyticFunction transform_T(const AnalyticFunction& F, double p, Side side) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("transform_T requires 0 < p < infinity");
    if (F.region.kind != RegionTag::omega(side).kind)
        throw ParameterError("transform_T: function lives on " + F.region.name() + ", not " +
                             RegionTag::omega(side).name());
    const StripGeometry g = F.geometry;
    auto f = F.eval;
    AnalyticFunction out;
    out.eval = [f, p, side, g](cplx z) { return f(phi(side, z, g)) * std::pow(phi_prime(side, z, g), 1.0 / p); };
    out.region = RegionTag::half_plane(side);
    out.geometry = g;
    out.decay = TailBound::algebraic(1.0 / p);
    return out;
}

AnalyticFunction transform_T_inv(const AnalyticFunction& f, double p, Side side, const StripGeometry& g,
                                 TailBound decay) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("transform_T_inv requires 0 < p < infinity");
    if (f.region.kind != RegionTag::half_plane(side).kind)
        throw ParameterError("transform_T_inv: function lives on " + f.region.name() + ", not " +
                             RegionTag::half_plane(side).name());
    auto h = f.eval;
    AnalyticFunction out;
    out.eval = [h, p, side, g](cplx w) { return h(psi(side, w, g)) * std::pow(psi_prime(side, w, g), 1.0 / p); };
    out.region = RegionTag::omega(side);
    out.geometry = g;
    out.decay = decay;
    out.continuous_to_boundary = f.continuous_to_boundary;
    return out;
}

namespace {

// Right half of the image curve Phi+({Im z = y}) parametrized by height v:
// cos(a) sinh(b) = y with a = u/k, b = v/k, k = 2 sigma/pi.
struct ImageCurve {
    double k;
    double y;
    cplx point(double v) const {
        const double r = y / std::sinh(v / k);
        return {k * std::acos(std::min(1.0, r)), v};
    }
    // |dw/dv| for the right half.
    double speed(double v) const {
        const double b = v / k;
        const double r = y / std::sinh(b);
        const double du = r / (std::tanh(b) * std::sqrt(std::max(0.0, 1.0 - r * r)));
        return std::sqrt(1.0 + du * du);
    }
};

struct PlusSplit {
    double X;
    double vX;
    ImageCurve curve;
};

PlusSplit plus_split(double y, const StripGeometry& g) {
    const double X = 2.0 + y;
    return {X, phi_plus(cplx(X, y), g).imag(), ImageCurve{scale(g), y}};
}

std::vector<double> crossings(const std::function<double(double)>& d, double a, double b, int n) {
    std::vector<double> out;
    if (!(b > a)) return out;
    double x0 = a, d0 = d(a);
    for (int i = 1; i <= n; ++i) {
        const double x1 = a + (b - a) * i / n;
        const double d1 = d(x1);
        if ((d0 < 0.0) != (d1 < 0.0)) {
            double lo = x0, hi = x1;
            const bool lo_neg = d0 < 0.0;
            for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((d(mid) < 0.0) == lo_neg)
                    lo = mid;
                else
                    hi = mid;
            }
            out.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        d0 = d1;
    }
    return out;
}

}  // namespace

double transformed_line_norm(const AnalyticFunction& F, double p, Side side, double y, const QuadratureSpec& q) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("transformed_line_norm requires 0 < p < infinity");
    if ((side == Side::Plus && !(y > 0.0)) || (side == Side::Minus && !(y < 0.0)))
        throw DomainError("transformed_line_norm: height has the wrong sign for the side");
    const StripGeometry& g = F.geometry;
    const auto& f = F.eval;
    if (side == Side::Minus) {
        // |F(Phi-)|^p |Phi-'| ~ |x|^{1 - 2 d p} when |F| ~ |w|^{-d}.
        QuadratureSpec ql = q;
        ql.tail = F.decay.kind == TailBound::Kind::Algebraic ? TailBound::algebraic(2.0 * F.decay.rate * p - 1.0)
                                                              : TailBound::none();
        auto h = [&](cplx z) {
            const cplx zt(z.real(), y);
            return cplx(std::pow(std::abs(f(phi_minus(zt, g))), p) * std::abs(phi_minus_prime(zt, g)), 0.0);
        };
        const QuadratureValue v = integrate_line(h, Line{cplx(0.0, 0.0), cplx(1.0, 0.0)}, ql);
        return std::pow(std::max(0.0, v.value.real()), 1.0 / p);
    }
    const PlusSplit sp = plus_split(y, g);
    auto center = [&](double t) {
        const cplx z(t, y);
        return cplx(std::pow(std::abs(f(phi_plus(z, g))), p) * std::abs(phi_plus_prime(z, g)), 0.0);
    };
    const QuadratureValue c = integrate_interval(center, -sp.X, sp.X, q, {-1.0, 1.0});
    QuadratureSpec qt = q;
    qt.tail = tail_power(F.decay, p);
    double tails = 0.0;
    for (double sgn : {1.0, -1.0}) {
        auto h = [&, sgn](double r) {
            const double v = sp.vX + r;
            const cplx w0 = sp.curve.point(v);
            const cplx w(sgn * w0.real(), w0.imag());
            return cplx(std::pow(std::abs(f(w)), p) * sp.curve.speed(v), 0.0);
        };
        tails += integrate_half_line(h, qt).value.real();
    }
    return std::pow(std::max(0.0, c.value.real() + tails), 1.0 / p);
}

DerivativeSignReport derivative_sign_report(const std::vector<cplx>& samples, const StripGeometry& g) {
    DerivativeSignReport rep;
    for (cplx z : samples) {
        if (z.imag() == 0.0) throw ParameterError("derivative_sign_report: sample " + format_complex(z) + " is real");
        const cplx d = z.imag() > 0.0 ? phi_plus_prime(z, g) : phi_minus_prime(z, g);
        ++rep.samples;
        bool bad = false;
        if (!(d.real() > 0.0)) {
            ++rep.re_positive_failures;
            bad = true;
        }
        if (z.real() != 0.0) {
            if (!(z.real() * d.imag() > 0.0)) {
                ++rep.x_im_positive_failures;
                bad = true;
            }
        } else {
            const double rel = std::abs(d.imag()) / std::abs(d);
            rep.max_axis_imag = std::max(rep.max_axis_imag, rel);
            if (rel > 1e-12) {
                ++rep.axis_failures;
                bad = true;
            }
        }
        if (bad) ++rep.violations;
    }
    return rep;
}

KernelBoundReport conformal_kernel_bound_check(cplx alpha, double eps, double q_exp, const std::vector<double>& heights,
                                               const StripGeometry& g, const QuadratureSpec& q) {
    if (!(eps > 0.0)) throw ParameterError("conformal_kernel_bound_check requires eps > 0");
    if (!(q_exp > 1.0) || !std::isfinite(q_exp)) throw ParameterError("conformal_kernel_bound_check requires 1 < q < inf");
    KernelBoundReport rep;
    rep.bound = 3.0 * std::pow(2.0, q_exp + 1.0) / ((q_exp - 1.0) * std::pow(eps, q_exp - 1.0));
    for (double y : heights) {
        if (!(y > 0.0)) throw ParameterError("conformal_kernel_bound_check requires positive heights");
        const PlusSplit sp = plus_split(y, g);
        auto weight = [&](cplx w) {
            const double d = std::abs(w - alpha);
            return d >= eps ? std::pow(d, -q_exp) : 0.0;
        };
        auto center = [&](double t) {
            const cplx z(t, y);
            return cplx(weight(phi_plus(z, g)) * std::abs(phi_plus_prime(z, g)), 0.0);
        };
        auto dist_center = [&](double t) { return std::abs(phi_plus(cplx(t, y), g) - alpha) - eps; };
        std::vector<double> br = crossings(dist_center, -sp.X, sp.X, 4000);
        br.push_back(-1.0);
        br.push_back(1.0);
        const QuadratureValue c = integrate_interval(center, -sp.X, sp.X, q, br);
        double total = c.value.real();
        double err = c.error_estimate;
        QuadratureSpec qt = q;
        qt.tail = TailBound::algebraic(q_exp);
        const double vmax = alpha.imag() + eps + 1.0;
        for (double sgn : {1.0, -1.0}) {
            auto at = [&, sgn](double r) {
                const cplx w0 = sp.curve.point(sp.vX + r);
                return cplx(sgn * w0.real(), w0.imag());
            };
            auto dist_tail = [&](double r) { return std::abs(at(r) - alpha) - eps; };
            const std::vector<double> tb = crossings(dist_tail, 0.0, vmax - sp.vX, 2000);
            auto h = [&](double r) { return cplx(weight(at(r)) * sp.curve.speed(sp.vX + r), 0.0); };
            const QuadratureValue t = integrate_half_line(h, qt, tb);
            total += t.value.real();
            err += t.error_estimate;
        }
        rep.heights.push_back(y);
        rep.integrals.push_back(total);
        rep.max_integral = std::max(rep.max_integral, total);
        rep.max_error_estimate = std::max(rep.max_error_estimate, err);
        if (total - err > rep.bound) rep.within_bound = false;
    }
    return rep;
}

}  // namespace halfstrip
