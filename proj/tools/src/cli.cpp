#include "cli.hpp"

#include "run_config.hpp"

#include "halfstrip/cauchy.hpp"
#include "halfstrip/conformal.hpp"
#include "halfstrip/functions.hpp"
#include "halfstrip/geometry.hpp"
#include "halfstrip/hardy.hpp"
#include "halfstrip/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace halfstrip::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ojson cjson(cplx z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

class Csv {
public:
    explicit Csv(std::vector<std::string> header) : width_(header.size()) { row_strings(header); }
    void row(const std::vector<std::string>& cells) {
        if (cells.size() != width_) throw std::logic_error("ragged CSV row");
        row_strings(cells);
    }
    std::string str() const { return os_.str(); }

private:
    void row_strings(const std::vector<std::string>& cells) {
        for (size_t k = 0; k < cells.size(); ++k) os_ << (k ? "," : "") << cells[k];
        os_ << '\n';
    }
    size_t width_;
    std::ostringstream os_;
};

std::vector<double> parse_p_list(const std::string& text) {
    std::vector<double> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        while (used < tok.size() && tok[used] == ' ') ++used;
        if (used == 0 || used != tok.size()) throw ParameterError("malformed p list '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParameterError("empty p list");
    return out;
}

Side parse_side(const std::string& s) {
    if (s == "plus") return Side::Plus;
    if (s == "minus") return Side::Minus;
    throw ParameterError("side must be plus or minus");
}

QuadratureSpec quad(const RunConfig& c) {
    QuadratureSpec q;
    q.rel_tol = c.rel_tol;
    q.abs_tol = c.abs_tol;
    return q;
}

struct Emit {
    std::string text;
    int code = kOk;
};

Emit cmd_verify(const RunConfig& cfg, const std::vector<std::string>& checks, bool all,
                const std::vector<std::string>& tags, const std::string& p_list, int threads, bool timing) {
    if (checks.empty() && !all && tags.empty()) throw ParameterError("verify needs --check ID, --tag TAG or --all");
    CheckParams P;
    P.sigma = cfg.sigma;
    P.rel_tol = cfg.rel_tol;
    P.abs_tol = cfg.abs_tol;
    P.J = cfg.J;
    P.seed = cfg.seed;
    P.timing = timing;
    if (!p_list.empty()) P.p = parse_p_list(p_list);
    else if (cfg.p) P.p = {*cfg.p};
    P.validate();

    const auto& refs = reference_map();
    for (const auto& id : checks)
        if (!refs.count(id)) throw LookupError("unknown check id '" + id + "'");

    RunSummary s;
    if (!checks.empty()) {
        std::set<std::string> ids(checks.begin(), checks.end());
        for (const auto& id : ids) s.reports.push_back(run_check(id, P));
        for (const auto& r : s.reports) {
            if (r.verdict == Verdict::Pass) ++s.pass;
            else if (r.verdict == Verdict::Fail) ++s.fail;
            else ++s.inconclusive;
        }
    } else {
        s = run_all(all ? std::set<std::string>{} : std::set<std::string>(tags.begin(), tags.end()), P, threads);
    }

    Emit e;
    if (cfg.format == "csv") {
        Csv csv({"check_id", "verdict", "max_violation", "tolerance", "samples", "error_estimate", "runtime_ms"});
        for (const auto& r : s.reports)
            csv.row({r.check_id, to_string(r.verdict), num(r.max_violation), num(r.tolerance), std::to_string(r.samples),
                     num(r.error_estimate), num(r.runtime_ms)});
        e.text = csv.str();
    } else if (s.reports.size() == 1 && !checks.empty()) {
        e.text = to_json(s.reports.front()) + "\n";
    } else {
        e.text = to_json(s) + "\n";
    }
    e.code = s.fail > 0 ? kFail : (s.inconclusive > 0 ? kNumerical : kOk);
    return e;
}

Emit cmd_eval_cauchy(const RunConfig& cfg, const std::string& fn, const std::string& at) {
    const ClosedForm F = parse_function(fn);
    const auto points = parse_points(at);
    const StripGeometry g(cfg.sigma);
    const BoundaryFunction b = F.boundary();
    const QuadratureSpec q = quad(cfg);
    Emit e;
    if (cfg.format == "csv") {
        Csv csv({"w_re", "w_im", "region", "value_re", "value_im", "error_estimate"});
        for (cplx w : points) {
            const QuadratureValue v = cauchy_transform_value(b, w, g, q);
            csv.row({num(w.real()), num(w.imag()), to_string(classify(w, g)), num(v.value.real()), num(v.value.imag()),
                     num(v.error_estimate)});
        }
        e.text = csv.str();
    } else {
        ojson rows = ojson::array();
        for (cplx w : points) {
            const QuadratureValue v = cauchy_transform_value(b, w, g, q);
            rows.push_back(ojson{{"w", cjson(w)},
                                 {"region", to_string(classify(w, g))},
                                 {"value", cjson(v.value)},
                                 {"error_estimate", v.error_estimate}});
        }
        e.text = ojson{{"fn", F.text}, {"sigma", cfg.sigma}, {"cauchy", rows}}.dump(2) + "\n";
    }
    return e;
}

Emit cmd_norm(const RunConfig& cfg, const std::string& fn, std::optional<double> p_opt, const std::string& side_text) {
    const ClosedForm F = parse_function(fn);
    const Side side = parse_side(side_text);
    const double p = p_opt ? *p_opt : (cfg.p ? *cfg.p : 2.0);
    const StripGeometry g(cfg.sigma);
    const HpNormEstimate est = hp_norm_estimate(F.analytic(side, g), p, side, GridSpec{cfg.J, true}, quad(cfg));
    Emit e;
    if (cfg.format == "json") {
        ojson grid = ojson::array();
        for (const auto& gp : est.grid) grid.push_back(ojson{{"s", gp.s}, {"t", gp.t}, {"m", gp.m}});
        e.text = ojson{{"fn", F.text},
                       {"p", p},
                       {"side", side_text},
                       {"value", est.value},
                       {"refinement_trend", est.refinement_trend},
                       {"divergence_evidence", est.divergence_evidence},
                       {"grid", grid}}
                     .dump(2) +
                 "\n";
    } else {
        Csv csv({"s", "t", "m"});
        for (const auto& gp : est.grid) csv.row({num(gp.s), num(gp.t), num(gp.m)});
        e.text = csv.str();
    }
    return e;
}

Emit cmd_map(const RunConfig& cfg, const std::string& which, const std::string& at) {
    const StripGeometry g(cfg.sigma);
    ComplexFn f, df;
    if (which == "phi+") {
        f = [&g](cplx z) { return phi_plus(z, g); };
        df = [&g](cplx z) { return phi_plus_prime(z, g); };
    } else if (which == "phi-") {
        f = [&g](cplx z) { return phi_minus(z, g); };
        df = [&g](cplx z) { return phi_minus_prime(z, g); };
    } else if (which == "psi+") {
        f = [&g](cplx z) { return psi_plus(z, g); };
        df = [&g](cplx z) { return psi_plus_prime(z, g); };
    } else if (which == "psi-") {
        f = [&g](cplx z) { return psi_minus(z, g); };
        df = [&g](cplx z) { return psi_minus_prime(z, g); };
    } else {
        throw ParameterError("--which must be one of phi+, phi-, psi+, psi-");
    }
    const auto points = parse_points(at);
    Emit e;
    if (cfg.format == "csv") {
        Csv csv({"in_re", "in_im", "out_re", "out_im", "deriv_re", "deriv_im"});
        for (cplx z : points) {
            const cplx w = f(z), d = df(z);
            csv.row({num(z.real()), num(z.imag()), num(w.real()), num(w.imag()), num(d.real()), num(d.imag())});
        }
        e.text = csv.str();
    } else {
        ojson rows = ojson::array();
        for (cplx z : points) rows.push_back(ojson{{"in", cjson(z)}, {"out", cjson(f(z))}, {"derivative", cjson(df(z))}});
        e.text = ojson{{"map", which}, {"sigma", cfg.sigma}, {"points", rows}}.dump(2) + "\n";
    }
    return e;
}

Emit cmd_decompose(const RunConfig& cfg, const std::string& fn, const std::string& at) {
    const ClosedForm F = parse_function(fn);
    const auto points = parse_points(at);
    const StripGeometry g(cfg.sigma);
    const BoundaryFunction b = F.boundary();
    const JumpComponents jc = jump_decompose(b, g, quad(cfg));
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    struct Row {
        cplx w;
        Region region;
        cplx plus{nan, nan}, minus{nan, nan};
    };
    std::vector<Row> rows;
    for (cplx w : points) {
        Row r{w, classify(w, g)};
        if (r.region == Region::OmegaPlus) {
            r.plus = jc.plus.eval(w);
        } else if (r.region == Region::OmegaMinus) {
            r.minus = jc.minus.eval(w);
        } else if (is_corner(r.region)) {
            throw DomainError("decompose: " + format_complex(w) + " is a corner of Gamma");
        } else {
            const auto sched = default_schedule(w, g);
            r.plus = nontangential_limit(jc.plus, w, 1.0, sched).limit;
            r.minus = nontangential_limit(jc.minus, w, 1.0, sched).limit;
        }
        rows.push_back(r);
    }
    Emit e;
    if (cfg.format == "csv") {
        Csv csv({"w_re", "w_im", "region", "plus_re", "plus_im", "minus_re", "minus_im", "f_re", "f_im"});
        for (const auto& r : rows) {
            const cplx f = F(r.w);
            csv.row({num(r.w.real()), num(r.w.imag()), to_string(r.region), num(r.plus.real()), num(r.plus.imag()),
                     num(r.minus.real()), num(r.minus.imag()), num(f.real()), num(f.imag())});
        }
        e.text = csv.str();
    } else {
        ojson arr = ojson::array();
        for (const auto& r : rows) {
            auto opt = [](cplx z) { return std::isnan(z.real()) ? ojson(nullptr) : cjson(z); };
            arr.push_back(ojson{{"w", cjson(r.w)},
                                {"region", to_string(r.region)},
                                {"plus", opt(r.plus)},
                                {"minus", opt(r.minus)},
                                {"f", cjson(F(r.w))}});
        }
        e.text = ojson{{"fn", F.text}, {"sigma", cfg.sigma}, {"components", arr}}.dump(2) + "\n";
    }
    return e;
}

Emit cmd_limit(const RunConfig& cfg, const std::string& fn, const std::string& zeta0_text, double alpha, int K) {
    const ClosedForm F = parse_function(fn);
    const cplx z0 = parse_complex(zeta0_text);
    const StripGeometry g(cfg.sigma);
    const Region reg = classify(z0, g);
    if (!is_boundary(reg) || is_corner(reg)) throw DomainError("zeta0 must be a non-corner point of Gamma");
    const BoundaryFunction b = F.boundary();
    const QuadratureSpec q = quad(cfg);
    // Difference of Cauchy integrals at z0 + z and z0 - z: the K_z kernel applied to F.
    AnalyticFunction G;
    G.region = RegionTag::omega(Side::Plus);
    G.geometry = g;
    G.eval = [b, g, q, z0](cplx w) { return cauchy_transform(b, w, g, q) - cauchy_transform(b, 2.0 * z0 - w, g, q); };
    const NontangentialLimit lim = nontangential_limit(G, z0, alpha, default_schedule(z0, g, K));
    const cplx exact = F(z0);
    Emit e;
    if (cfg.format == "json") {
        ojson table = ojson::array();
        for (const auto& row : lim.table)
            table.push_back(ojson{{"r", row.r}, {"value", cjson(row.value)}, {"abs_error", std::abs(row.value - exact)}});
        e.text = ojson{{"fn", F.text},
                       {"zeta0", cjson(z0)},
                       {"alpha", alpha},
                       {"limit", cjson(lim.limit)},
                       {"boundary_value", cjson(exact)},
                       {"converged", lim.converged},
                       {"table", table}}
                     .dump(2) +
                 "\n";
    } else {
        Csv csv({"r", "value_re", "value_im", "abs_error"});
        for (const auto& row : lim.table)
            csv.row({num(row.r), num(row.value.real()), num(row.value.imag()), num(std::abs(row.value - exact))});
        e.text = csv.str();
    }
    if (!lim.converged) e.code = kNumerical;
    return e;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hardy spaces on the half-strip: numerical checks and experiments", "halfstrip"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<double> sigma, rel_tol, abs_tol;
    std::optional<int> J;
    std::optional<unsigned long long> seed;
    std::optional<std::string> output, format;
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--sigma", sigma, "half-width of the strip");
    app.add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
    app.add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
    app.add_option("--J", J, "grid depth, 4..24");
    app.add_option("--seed", seed, "sampling seed");
    app.add_option("--output", output, "output file (default stdout)");
    app.add_option("--format", format, "json or csv");

    auto* verify = app.add_subcommand("verify", "run registered checks");
    std::vector<std::string> checks, tags;
    bool all = false, timing = false;
    std::string p_list;
    int threads = 1;
    verify->add_option("--check", checks, "check id (repeatable)");
    verify->add_flag("--all", all, "run every check");
    verify->add_option("--tag", tags, "run checks carrying a tag (repeatable)");
    verify->add_option("--p", p_list, "comma-separated exponents replacing each check's sweep");
    verify->add_option("--threads", threads, "worker cap (HALFSTRIP_THREADS overrides)");
    verify->add_flag("--timing", timing, "record wall time in runtime_ms");

    auto* eval = app.add_subcommand("eval", "evaluate transforms");
    eval->require_subcommand(1);
    auto* eval_cauchy = eval->add_subcommand("cauchy", "Cauchy transform of the boundary trace");
    std::string fn, at;
    eval_cauchy->add_option("--fn", fn, "function spec")->required();
    eval_cauchy->add_option("--at", at, "evaluation points")->required();

    auto* norm = app.add_subcommand("norm", "H^p norm grid estimate");
    std::optional<double> p_norm;
    std::string side;
    norm->add_option("--fn", fn, "function spec")->required();
    norm->add_option("--p", p_norm, "exponent");
    norm->add_option("--side", side, "plus or minus")->required();

    auto* map = app.add_subcommand("map", "conformal maps");
    std::string which;
    map->add_option("--which", which, "phi+, phi-, psi+ or psi-")->required();
    map->add_option("--at", at, "points")->required();

    auto* decompose = app.add_subcommand("decompose", "jump components F+ and F-");
    decompose->add_option("--fn", fn, "function spec")->required();
    decompose->add_option("--at", at, "points")->required();

    auto* limit = app.add_subcommand("limit", "non-tangential convergence table");
    std::string zeta0;
    double alpha = 1.0;
    int radii = 16;
    limit->add_option("--fn", fn, "function spec")->required();
    limit->add_option("--zeta0", zeta0, "non-corner boundary point")->required();
    limit->add_option("--alpha", alpha, "cone aperture");
    limit->add_option("--radii", radii, "number of radii in the schedule");

    for (auto* sc : {verify, eval, norm, map, decompose, limit}) sc->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (sigma) cfg.sigma = *sigma;
        if (rel_tol) cfg.rel_tol = *rel_tol;
        if (abs_tol) cfg.abs_tol = *abs_tol;
        if (J) cfg.J = *J;
        if (seed) cfg.seed = *seed;
        if (output) cfg.output = *output;
        if (format) cfg.format = *format;
        cfg.validate();

        Emit e;
        if (verify->parsed()) e = cmd_verify(cfg, checks, all, tags, p_list, threads, timing);
        else if (eval_cauchy->parsed()) e = cmd_eval_cauchy(cfg, fn, at);
        else if (norm->parsed()) e = cmd_norm(cfg, fn, p_norm, side);
        else if (map->parsed()) e = cmd_map(cfg, which, at);
        else if (decompose->parsed()) e = cmd_decompose(cfg, fn, at);
        else e = cmd_limit(cfg, fn, zeta0, alpha, radii);

        if (cfg.output.empty()) {
            out << e.text;
        } else {
            std::ofstream f(cfg.output, std::ios::binary);
            if (!f) throw ParameterError("cannot write '" + cfg.output + "'");
            f << e.text;
        }
        return e.code;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const LookupError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SingularityError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace halfstrip::cli
