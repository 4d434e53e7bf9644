#include "halfstrip/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace halfstrip {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct PanelResult {
    cplx value;
    double error;
};

cplx sample(const std::function<cplx(double)>& g, double x) {
    const cplx y = g(x);
    if (!finite(y)) {
        std::ostringstream os;
        os.precision(17);
        os << "non-finite integrand sample at parameter " << x;
        throw EvaluationError(os.str());
    }
    return y;
}

PanelResult gk15(const std::function<cplx(double)>& g, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::array<cplx, 15> fv;
    fv[7] = sample(g, c);
    for (int j = 0; j < 7; ++j) {
        fv[j] = sample(g, c - h * kXgk[j]);
        fv[14 - j] = sample(g, c + h * kXgk[j]);
    }
    cplx rk = fv[7] * kWgk[7];
    cplx rg = fv[7] * kWg[3];
    double resabs = std::abs(fv[7]) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const cplx pair = fv[j] + fv[14 - j];
        rk += kWgk[j] * pair;
        resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1) rg += kWg[j / 2] * pair;
    }
    const cplx mean = 0.5 * rk;
    double resasc = kWgk[7] * std::abs(fv[7] - mean);
    for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
    const double ah = std::abs(h);
    resabs *= ah;
    resasc *= ah;
    double err = std::abs((rk - rg) * h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
    return {rk * h, err};
}

struct Panel {
    int piece;
    double a, b;
    cplx value;
    double error;
};

// Log map from the left end: r = left + expm1(x), x in [0, log1p(right - left)].
QuadraturePiece log_piece(const std::function<cplx(double)>& h, double left, double right, int slot) {
    return {[h, left](double x) {
                const double e = std::exp(x);
                return h(left + std::expm1(x)) * e;
            },
            0.0, std::log1p(right - left), slot};
}

QuadraturePiece linear_piece(const std::function<cplx(double)>& h, double a, double b, int slot) {
    return {h, a, b, slot};
}

std::vector<double> clean_breaks(std::vector<double> br, double lo, double hi) {
    std::vector<double> out;
    for (double x : br)
        if (std::isfinite(x) && x > lo && x < hi) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TailBound tail_product(const TailBound& a, const TailBound& b) {
    using K = TailBound::Kind;
    if (a.kind == K::None || b.kind == K::None) return TailBound::none();
    if (a.kind == K::Exponential && b.kind == K::Exponential) return TailBound::exponential(a.rate + b.rate);
    if (a.kind == K::Exponential) return TailBound::exponential(a.rate);
    if (b.kind == K::Exponential) return TailBound::exponential(b.rate);
    return TailBound::algebraic(a.rate + b.rate);
}

TailBound tail_sum(const TailBound& a, const TailBound& b) {
    using K = TailBound::Kind;
    if (a.kind == K::None || b.kind == K::None) return TailBound::none();
    if (a.kind == K::Exponential && b.kind == K::Exponential) return TailBound::exponential(std::min(a.rate, b.rate));
    if (a.kind == K::Exponential) return TailBound::algebraic(b.rate);
    if (b.kind == K::Exponential) return TailBound::algebraic(a.rate);
    return TailBound::algebraic(std::min(a.rate, b.rate));
}

TailBound tail_power(const TailBound& a, double p) {
    if (a.kind == TailBound::Kind::None) return a;
    TailBound out{a.kind, a.rate * p, std::nullopt};
    if (a.constant) out.constant = std::pow(*a.constant, p);
    return out;
}

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw ParameterError("quadrature tolerances must be positive");
    if (max_subdivisions < 1) throw ParameterError("max_subdivisions must be at least 1");
}

AdaptiveResult integrate_pieces(const std::vector<QuadraturePiece>& pieces, int slots, const QuadratureSpec& q,
                                double reserved_error) {
    AdaptiveResult out;
    out.slot_values.assign(static_cast<size_t>(slots), cplx{});
    std::vector<Panel> panels;
    auto cmp = [&panels](int l, int r) {
        if (panels[l].error != panels[r].error) return panels[l].error < panels[r].error;
        return l > r;
    };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> heap(cmp);
    cplx total{};
    double total_err = 0.0;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const auto& pc = pieces[i];
        if (!(pc.b > pc.a)) continue;
        const double mid = 0.5 * (pc.a + pc.b);
        for (auto [a, b] : {std::pair{pc.a, mid}, std::pair{mid, pc.b}}) {
            const PanelResult r = gk15(pc.g, a, b);
            out.evaluations += 15;
            panels.push_back({static_cast<int>(i), a, b, r.value, r.error});
            heap.push(static_cast<int>(panels.size()) - 1);
            total += r.value;
            total_err += r.error;
        }
    }
    std::vector<char> alive(panels.size(), 1);
    int splits = 0;
    while (!heap.empty()) {
        const double target = std::max(q.abs_tol, q.rel_tol * std::abs(total)) - reserved_error;
        if (total_err <= target) break;
        if (splits >= q.max_subdivisions) {
            out.accuracy_warning = true;
            break;
        }
        const int idx = heap.top();
        const Panel worst = panels[idx];
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) || (worst.b - worst.a) <= 4.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            out.accuracy_warning = true;
            break;
        }
        heap.pop();
        alive[idx] = 0;
        ++splits;
        const auto& g = pieces[worst.piece].g;
        const PanelResult l = gk15(g, worst.a, mid);
        const PanelResult r = gk15(g, mid, worst.b);
        out.evaluations += 30;
        total += l.value + r.value - worst.value;
        total_err += l.error + r.error - worst.error;
        panels.push_back({worst.piece, worst.a, mid, l.value, l.error});
        panels.push_back({worst.piece, mid, worst.b, r.value, r.error});
        alive.push_back(1);
        alive.push_back(1);
        heap.push(static_cast<int>(panels.size()) - 2);
        heap.push(static_cast<int>(panels.size()) - 1);
    }
    // Fixed summation order: by piece, then by position.
    std::vector<int> order;
    for (size_t i = 0; i < panels.size(); ++i)
        if (alive[i]) order.push_back(static_cast<int>(i));
    std::sort(order.begin(), order.end(), [&panels](int l, int r) {
        if (panels[l].piece != panels[r].piece) return panels[l].piece < panels[r].piece;
        return panels[l].a < panels[r].a;
    });
    double err = 0.0;
    for (int i : order) {
        out.slot_values[pieces[panels[i].piece].slot] += panels[i].value;
        err += panels[i].error;
    }
    out.error_estimate = err;
    return out;
}

RayPlan plan_ray(const std::function<cplx(double)>& h, std::vector<double> breakpoints, const QuadratureSpec& q,
                 int slot) {
    RayPlan plan;
    const auto br = clean_breaks(std::move(breakpoints), 0.0, std::numeric_limits<double>::infinity());
    const double base = br.empty() ? 0.0 : br.back();
    const TailBound& tb = q.tail;

    double reach = 0.0;  // R - base
    if (tb.kind == TailBound::Kind::None) {
        plan.truncation = std::numeric_limits<double>::infinity();
    } else {
        auto height_sample = [&](double d) {
            const cplx v = h(base + d);
            if (!finite(v)) {
                std::ostringstream os;
                os.precision(17);
                os << "non-finite integrand sample at ray height " << base + d;
                throw EvaluationError(os.str());
            }
            return std::abs(v);
        };
        const double lam = tb.rate;
        if (tb.kind == TailBound::Kind::Algebraic) {
            if (!(lam > 1.0)) throw TruncationError("divergent tail: algebraic decay rate must exceed 1");
            double c = 0.0;
            for (int k = -10; k <= 10; ++k) {
                const double d = std::ldexp(1.0, k);
                c = std::max(c, height_sample(d) * std::pow(1.0 + base + d, lam));
            }
            if (tb.constant) {
                if (c > *tb.constant * (1.0 + 1e-9)) throw TruncationError("declared tail constant is exceeded near the ray start");
                c = *tb.constant;
            } else {
                c *= 2.0;
            }
            for (int k = 11; k <= 29; ++k) {
                const double d = std::ldexp(1.0, k);
                if (height_sample(d) * std::pow(1.0 + base + d, lam) > c * (1.0 + 1e-9)) {
                    std::ostringstream os;
                    os << "tail bound violated at ray height " << base + d;
                    throw TruncationError(os.str());
                }
            }
            if (c > 0.0) {
                const double goal = 0.1 * q.abs_tol;
                double one_plus = std::pow(c / ((lam - 1.0) * goal), 1.0 / (lam - 1.0));
                if (!std::isfinite(one_plus) || one_plus > 1e250) one_plus = 1e250;
                reach = std::max(0.0, one_plus - 1.0 - base);
                plan.tail_error = c * std::pow(1.0 + base + reach, 1.0 - lam) / (lam - 1.0);
                if (plan.tail_error > q.abs_tol) throw TruncationError("tail decays too slowly to truncate within abs_tol");
            }
        } else {
            if (!(lam > 0.0)) throw TruncationError("divergent tail: exponential decay rate must be positive");
            double logc = -std::numeric_limits<double>::infinity();
            // Heights in units of the decay length, so fast decay is still sampled.
            const double unit = std::min(1.0, 1.0 / lam);
            for (int k = -10; k <= 10; ++k) {
                const double d = unit * std::ldexp(1.0, k);
                const double v = height_sample(d);
                if (v > 0.0) logc = std::max(logc, std::log(v) + lam * (base + d));
            }
            if (tb.constant) {
                if (logc > std::log(*tb.constant) + 1e-9) throw TruncationError("declared tail constant is exceeded near the ray start");
                logc = std::log(*tb.constant);
            } else {
                logc += std::log(2.0);
            }
            for (int k = 11; k <= 29; ++k) {
                const double d = unit * std::ldexp(1.0, k);
                const double v = height_sample(d);
                if (v > 0.0 && std::log(v) + lam * (base + d) > logc + 1e-9) {
                    std::ostringstream os;
                    os << "tail bound violated at ray height " << base + d;
                    throw TruncationError(os.str());
                }
            }
            if (std::isfinite(logc)) {
                reach = std::max(0.0, (logc - std::log(lam * 0.1 * q.abs_tol)) / lam - base);
                plan.tail_error = std::exp(logc - lam * (base + reach)) / lam;
            }
        }
        reach = std::max(reach, q.min_truncation_height - base);
        plan.truncation = base + reach;
    }

    // [0, b1], [b1, b2], ..., [base, R]
    double left = 0.0;
    for (size_t i = 0; i < br.size(); ++i) {
        if (i == 0)
            plan.pieces.push_back(log_piece(h, 0.0, br[0], slot));
        else
            plan.pieces.push_back(linear_piece(h, left, br[i], slot));
        left = br[i];
    }
    if (tb.kind == TailBound::Kind::None) {
        plan.pieces.push_back({[h, base](double u) {
                                   const double om = 1.0 - u;
                                   return h(base + u / om) / (om * om);
                               },
                               0.0, 1.0, slot});
    } else if (reach > 0.0) {
        plan.pieces.push_back(log_piece(h, base, base + reach, slot));
    }
    return plan;
}

QuadratureValue integrate_half_line(const std::function<cplx(double)>& h, const QuadratureSpec& q,
                                    std::vector<double> breakpoints) {
    q.validate();
    RayPlan plan = plan_ray(h, std::move(breakpoints), q, 0);
    AdaptiveResult r = integrate_pieces(plan.pieces, 1, q, plan.tail_error);
    QuadratureValue out;
    out.value = r.slot_values[0];
    out.leg_values = {out.value, cplx{}, cplx{}};
    out.error_estimate = r.error_estimate + plan.tail_error;
    out.truncation_height = plan.truncation;
    out.accuracy_warning = r.accuracy_warning;
    out.evaluations = r.evaluations;
    return out;
}

QuadratureValue integrate_interval(const std::function<cplx(double)>& h, double a, double b, const QuadratureSpec& q,
                                   std::vector<double> breakpoints) {
    q.validate();
    if (!(std::isfinite(a) && std::isfinite(b))) throw ParameterError("interval endpoints must be finite");
    const double sign = b < a ? -1.0 : 1.0;
    if (b < a) std::swap(a, b);
    std::vector<QuadraturePiece> pieces;
    double left = a;
    for (double x : clean_breaks(std::move(breakpoints), a, b)) {
        pieces.push_back(linear_piece(h, left, x, 0));
        left = x;
    }
    pieces.push_back(linear_piece(h, left, b, 0));
    AdaptiveResult r = integrate_pieces(pieces, 1, q);
    QuadratureValue out;
    out.value = sign * r.slot_values[0];
    out.leg_values = {out.value, cplx{}, cplx{}};
    out.error_estimate = r.error_estimate;
    out.accuracy_warning = r.accuracy_warning;
    out.evaluations = r.evaluations;
    return out;
}

namespace {

std::function<cplx(double)> checked(const ComplexFn& f, std::function<cplx(double)> point, cplx weight) {
    return [f, point = std::move(point), weight](double r) {
        const cplx z = point(r);
        const cplx y = f(z);
        if (!finite(y)) throw EvaluationError("non-finite integrand sample at " + format_complex(z));
        return y * weight;
    };
}

QuadratureValue contour_impl(const ComplexFn& f, const ContourSpec& c, const QuadratureSpec& q, bool arclength) {
    q.validate();
    c.validate();
    const double orient = (arclength || c.domain_on_left) ? 1.0 : -1.0;
    const double s = c.s;
    const double t = c.t;

    std::vector<QuadraturePiece> pieces;
    double tail_error = 0.0;
    double trunc = t;
    QuadratureSpec qr = q;
    qr.min_truncation_height = q.min_truncation_height - t;

    std::vector<double> br_left, br_right, br_mid;
    if (std::abs(t) > 1.0) {
        br_left.push_back(16.0 * std::abs(t));
        br_right.push_back(16.0 * std::abs(t));
    }
    for (cplx phi : q.focus) {
        if (phi.imag() > t) {
            br_left.push_back(phi.imag() - t);
            br_right.push_back(phi.imag() - t);
        }
        br_mid.push_back(phi.real());
        br_left.push_back(4.0 * std::abs(phi - cplx(-s, t)));
        br_right.push_back(4.0 * std::abs(phi - cplx(s, t)));
    }

    if (c.has_leg(1)) {
        const cplx w = arclength ? cplx(1.0) : cplx(0.0, -1.0) * orient;
        auto h = checked(f, [s, t](double r) { return cplx(-s, t + r); }, w);
        RayPlan plan = plan_ray(h, br_left, qr, 0);
        tail_error += plan.tail_error;
        trunc = std::max(trunc, t + plan.truncation);
        for (auto& pc : plan.pieces) pieces.push_back(std::move(pc));
    }
    if (c.has_leg(2)) {
        auto h = checked(f, [t](double u) { return cplx(u, t); }, cplx(orient));
        double left = -s;
        for (double x : clean_breaks(br_mid, -s, s)) {
            pieces.push_back(linear_piece(h, left, x, 1));
            left = x;
        }
        pieces.push_back(linear_piece(h, left, s, 1));
    }
    if (c.has_leg(3)) {
        const cplx w = arclength ? cplx(1.0) : cplx(0.0, 1.0) * orient;
        auto h = checked(f, [s, t](double r) { return cplx(s, t + r); }, w);
        RayPlan plan = plan_ray(h, br_right, qr, 2);
        tail_error += plan.tail_error;
        trunc = std::max(trunc, t + plan.truncation);
        for (auto& pc : plan.pieces) pieces.push_back(std::move(pc));
    }

    AdaptiveResult r = integrate_pieces(pieces, 3, q, tail_error);
    QuadratureValue out;
    out.leg_values = {r.slot_values[0], r.slot_values[1], r.slot_values[2]};
    out.value = out.leg_values[0] + out.leg_values[1] + out.leg_values[2];
    out.error_estimate = r.error_estimate + tail_error;
    out.truncation_height = trunc;
    out.accuracy_warning = r.accuracy_warning;
    out.evaluations = r.evaluations;
    return out;
}

}  // namespace

QuadratureValue integrate_contour(const ComplexFn& f, const ContourSpec& c, const QuadratureSpec& q) {
    return contour_impl(f, c, q, false);
}

QuadratureValue integrate_contour_arclength(const ComplexFn& f, const ContourSpec& c, const QuadratureSpec& q) {
    return contour_impl(f, c, q, true);
}

QuadratureValue integrate_line(const ComplexFn& f, const Line& line, const QuadratureSpec& q) {
    q.validate();
    const cplx o = line.origin;
    const cplx d = line.direction / std::abs(line.direction);
    std::vector<double> br_pos, br_neg;
    // Decay is in distance from 0, the ray coordinate starts at o.
    if (std::abs(o) > 1.0) {
        br_pos.push_back(16.0 * std::abs(o));
        br_neg.push_back(16.0 * std::abs(o));
    }
    for (cplx phi : q.focus) {
        const double tau = ((phi - o) / d).real();
        if (tau > 0.0) br_pos.push_back(tau);
        if (tau < 0.0) br_neg.push_back(-tau);
        // Far-field start, so the tail fit sees the asymptotic regime on both rays.
        const double far = 4.0 * std::abs(phi - o);
        br_pos.push_back(far);
        br_neg.push_back(far);
    }
    auto hp = checked(f, [o, d](double r) { return o + d * r; }, d);
    auto hn = checked(f, [o, d](double r) { return o - d * r; }, d);
    RayPlan neg = plan_ray(hn, br_neg, q, 0);
    RayPlan pos = plan_ray(hp, br_pos, q, 2);
    std::vector<QuadraturePiece> pieces = std::move(neg.pieces);
    for (auto& pc : pos.pieces) pieces.push_back(std::move(pc));
    const double tail = neg.tail_error + pos.tail_error;
    AdaptiveResult r = integrate_pieces(pieces, 3, q, tail);
    QuadratureValue out;
    out.leg_values = {r.slot_values[0], cplx{}, r.slot_values[2]};
    out.value = out.leg_values[0] + out.leg_values[2];
    out.error_estimate = r.error_estimate + tail;
    out.truncation_height = std::max(neg.truncation, pos.truncation);
    out.accuracy_warning = r.accuracy_warning;
    out.evaluations = r.evaluations;
    return out;
}

LpNorm lp_norm_on_contour(const ComplexFn& F, double p, const ContourSpec& c, const QuadratureSpec& q) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("p must be a positive finite number");
    QuadratureSpec qp = q;
    qp.tail = tail_power(q.tail, p);
    auto g = [&F, p](cplx w) { return cplx(std::pow(std::abs(F(w)), p), 0.0); };
    const QuadratureValue v = integrate_contour_arclength(g, c, qp);
    LpNorm out;
    const double total = std::max(0.0, v.value.real());
    out.value = std::pow(total, 1.0 / p);
    out.error_estimate = v.error_estimate;
    out.leg_pth = {v.leg_values[0].real(), v.leg_values[1].real(), v.leg_values[2].real()};
    out.truncation_height = v.truncation_height;
    out.quasi_norm = p < 1.0;
    out.accuracy_warning = v.accuracy_warning;
    return out;
}

double sup_on_contour(const ComplexFn& F, const ContourSpec& c) {
    c.validate();
    constexpr int kPanels = 256;
    double best = 0.0;
    auto visit = [&](double a, double b, auto&& point) {
        const double mid = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        for (int j = 0; j < 8; ++j)
            for (double sgn : {-1.0, 1.0}) {
                const double v = std::abs(F(point(mid + sgn * h * kXgk[j])));
                if (std::isfinite(v)) best = std::max(best, v);
            }
    };
    const double s = c.s;
    const double t = c.t;
    for (int k = 0; k < kPanels; ++k) {
        const double a = -s + 2.0 * s * k / kPanels;
        const double b = -s + 2.0 * s * (k + 1) / kPanels;
        if (c.has_leg(2)) visit(a, b, [t](double u) { return cplx(u, t); });
        const double xa = 40.0 * k / kPanels;
        const double xb = 40.0 * (k + 1) / kPanels;
        if (c.has_leg(1)) visit(xa, xb, [s, t](double x) { return cplx(-s, t + std::expm1(x)); });
        if (c.has_leg(3)) visit(xa, xb, [s, t](double x) { return cplx(s, t + std::expm1(x)); });
    }
    return best;
}

}  // namespace halfstrip
