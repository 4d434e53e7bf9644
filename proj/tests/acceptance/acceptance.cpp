// Acceptance suite: one PASS/FAIL line per criterion. argv[1] is the path of the halfstrip CLI.

#include "halfstrip/conformal.hpp"
#include "halfstrip/functions.hpp"
#include "halfstrip/hardy.hpp"
#include "halfstrip/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace halfstrip;

namespace {

struct Outcome {
    bool ok;
    std::string note;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// Report passes and its measured violation is under the criterion's own threshold.
Outcome report_under(const std::string& id, double limit) {
    const VerificationReport r = run_check(id);
    const bool ok = r.verdict == Verdict::Pass && r.max_violation < limit;
    return {ok, id + " " + to_string(r.verdict) + ", violation " + fmt(r.max_violation) + " (limit " + fmt(limit) + ")" +
                    (r.detail.empty() ? "" : "; " + r.detail)};
}

Outcome all_of(std::initializer_list<Outcome> parts) {
    Outcome o{true, ""};
    for (const auto& p : parts) {
        o.ok = o.ok && p.ok;
        o.note += (o.note.empty() ? "" : " | ") + p.note;
    }
    return o;
}

Outcome laplace() {
    const Outcome family = report_under("CHK-L1", 1e-6);
    QuadratureSpec q;
    for (const auto& f : laplace_family(1)) {
        if (f.name != "exp(-t)") continue;
        const double err = std::abs(laplace_bound_ratio(f, q).ratio - std::sqrt(2.0));
        return all_of({family, {err < 1e-8, "|exp(-t) ratio - sqrt 2| " + fmt(err)}});
    }
    return {false, "exp(-t) missing from the family"};
}

Outcome conformal_round_trips() {
    const StripGeometry g(1.0);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> x(-4.0, 4.0), ly(std::log(1e-3), std::log(4.0));
    std::uniform_real_distribution<double> u(-1.0, 1.0), v(1e-3, 5.0);
    double round = 0.0, sc = 0.0;
    QuadratureSpec q;
    for (int k = 0; k < 100; ++k) {
        const cplx zp(x(rng), std::exp(ly(rng)));
        const cplx zm = std::conj(cplx(x(rng), std::exp(ly(rng))));
        round = std::max(round, std::abs(psi_plus(phi_plus(zp, g), g) - zp));
        round = std::max(round, std::abs(psi_minus(phi_minus(zm, g), g) - zm));
        const cplx wp(u(rng), v(rng));
        round = std::max(round, std::abs(phi_plus(psi_plus(wp, g), g) - wp));
        sc = std::max(sc, std::abs(schwarz_christoffel_integral(Side::Plus, zp, g, q) - phi_plus(zp, g)));
    }
    const Outcome m1 = report_under("CHK-M1", 1e-9);
    return all_of({m1, {round < 1e-10, "round trip " + fmt(round)}, {sc < 1e-9, "Schwarz-Christoffel " + fmt(sc)}});
}

Outcome derivative_signs() {
    const VerificationReport r = run_check("CHK-M2");
    return {r.verdict == Verdict::Pass && r.max_violation == 0.0 && r.samples >= 1000,
            std::to_string(r.samples) + " samples, violations " + fmt(r.max_violation)};
}

Outcome norm_sanity() {
    const StripGeometry g(1.0);
    const auto F = parse_function("expw(1)").analytic(Side::Plus, g);
    const double v = hp_norm_estimate(F, 2.0, Side::Plus, GridSpec{12, false}, {}).value;
    return {v >= std::sqrt(3.0) - 1e-3 && v <= std::sqrt(3.0), "estimate " + std::to_string(v)};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome determinism(const std::string& cli) {
    if (cli.empty()) return {false, "no CLI path given"};
    const auto dir = std::filesystem::temp_directory_path();
    const std::string a = (dir / "halfstrip_acceptance_a.json").string();
    const std::string b = (dir / "halfstrip_acceptance_b.json").string();
    double worst = 0.0;
    int codes[2];
    for (int k = 0; k < 2; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string cmd = "\"" + cli + "\" --output \"" + (k ? b : a) + "\" verify --all";
        codes[k] = std::system(cmd.c_str());
        worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    const std::string ja = slurp(a), jb = slurp(b);
    std::remove(a.c_str());
    std::remove(b.c_str());
    const bool same = !ja.empty() && ja == jb;
    return {same && codes[0] == 0 && codes[1] == 0 && worst < 600.0,
            std::string(same ? "byte-identical" : "outputs differ") + ", exit " + std::to_string(codes[0]) + "/" +
                std::to_string(codes[1]) + ", slowest run " + fmt(worst) + " s"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"kernel normalization", [] { return report_under("CHK-K1", 1e-7); }},
        {"Cauchy representation", [] { return all_of({report_under("CHK-C1", 1e-7), report_under("CHK-C2", 1e-7)}); }},
        {"jump completeness", [] { return report_under("CHK-J1", 1e-4); }},
        {"orthogonality", [] { return report_under("CHK-O1", 1e-7); }},
        {"transform-bound constants", [] { return report_under("CHK-C3", 1e-4); }},
        {"Laplace bound", laplace},
        {"conformal round trips", conformal_round_trips},
        {"derivative signs", derivative_signs},
        {"isomorphism bracket", [] { return report_under("CHK-T1", 0.01); }},
        {"Blaschke modulus", [] { return report_under("CHK-BL1", 1e-10); }},
        {"non-tangential convergence", [] { return report_under("CHK-NT1", 1e-5); }},
        {"norm estimator sanity", norm_sanity},
        {"determinism", [&cli] { return determinism(cli); }},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first << ": " << o.note << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
