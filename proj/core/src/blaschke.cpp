#include "halfstrip/blaschke.hpp"

#include "halfstrip/conformal.hpp"

#include <algorithm>
#include <cmath>

namespace halfstrip {

std::string to_string(BlaschkeDomain d) {
    switch (d) {
        case BlaschkeDomain::UpperHalfPlane: return "C+";
        case BlaschkeDomain::LowerHalfPlane: return "C-";
        case BlaschkeDomain::OmegaPlus: return "Omega+";
        case BlaschkeDomain::OmegaMinus: return "Omega-";
    }
    return "?";
}

namespace {

bool upper(BlaschkeDomain d) { return d == BlaschkeDomain::UpperHalfPlane || d == BlaschkeDomain::OmegaPlus; }

cplx special_point(BlaschkeDomain d) { return upper(d) ? cplx(0.0, 1.0) : cplx(0.0, -1.0); }

bool interior(cplx p, BlaschkeDomain d, const StripGeometry& g) {
    switch (d) {
        case BlaschkeDomain::UpperHalfPlane: return p.imag() > 0.0;
        case BlaschkeDomain::LowerHalfPlane: return p.imag() < 0.0;
        case BlaschkeDomain::OmegaPlus: return classify(p, g) == Region::OmegaPlus;
        case BlaschkeDomain::OmegaMinus: return classify(p, g) == Region::OmegaMinus;
    }
    return false;
}

cplx pull_back(cplx p, BlaschkeDomain d, const StripGeometry& g) {
    switch (d) {
        case BlaschkeDomain::OmegaPlus: return psi_plus(p, g);
        case BlaschkeDomain::OmegaMinus: return psi_minus(p, g);
        default: return p;
    }
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, BlaschkeDomain domain, StripGeometry g)
    : zeros_(std::move(zeros)), domain_(domain), g_(g) {
    const cplx sp = special_point(domain_);
    for (cplx w : zeros_) {
        if (!interior(w, domain_, g_))
            throw DomainError("Blaschke zero " + format_complex(w) + " is not inside " + to_string(domain_));
        const cplx z = pull_back(w, domain_, g_);
        if (std::abs(z - sp) <= 1e-14) {
            ++m_;
            continue;
        }
        z_zeros_.push_back(z);
        // |z^2+1|/(z^2+1) = exp(-i (arg(z-i) + arg(z+i)))
        unimodular_.push_back(std::polar(1.0, -(std::arg(z - cplx(0.0, 1.0)) + std::arg(z + cplx(0.0, 1.0)))));
    }
}

bool BlaschkeProduct::on_boundary(cplx point) const {
    if (domain_ == BlaschkeDomain::UpperHalfPlane || domain_ == BlaschkeDomain::LowerHalfPlane)
        return point.imag() == 0.0;
    return is_boundary(classify(point, g_));
}

cplx BlaschkeProduct::to_half_plane(cplx point) const {
    if (!interior(point, domain_, g_) && !on_boundary(point))
        throw DomainError("point " + format_complex(point) + " is outside the closure of " + to_string(domain_));
    return pull_back(point, domain_, g_);
}

cplx blaschke_eval(const BlaschkeProduct& B, cplx point) {
    const cplx z = B.to_half_plane(point);
    const cplx sp = special_point(B.domain_);
    cplx out = 1.0;
    if (B.m_ > 0) out = std::pow((z - sp) / (z + sp), B.m_);
    for (size_t n = 0; n < B.z_zeros_.size(); ++n) {
        const cplx zn = B.z_zeros_[n];
        const cplx den = z - std::conj(zn);
        if (den == cplx{}) throw SingularityError("Blaschke factor pole at " + format_complex(point));
        out *= B.unimodular_[n] * (z - zn) / den;
    }
    return out;
}

ConvergenceRecord convergence_criterion(const std::vector<cplx>& zeros, BlaschkeDomain domain, const StripGeometry& g) {
    ConvergenceRecord rec;
    double s = 0.0;
    for (cplx w : zeros) {
        if (!interior(w, domain, g)) throw DomainError("zero " + format_complex(w) + " is not inside " + to_string(domain));
        const cplx z = pull_back(w, domain, g);
        const double y = upper(domain) ? z.imag() : -z.imag();
        s += y / (1.0 + std::norm(z));
        rec.partial_sums.push_back(s);
    }
    rec.sum = s;
    const size_t N = zeros.size();
    if (N < 16) {
        rec.verdict = "summable-evidence";
        return rec;
    }
    const double sN = rec.partial_sums[N - 1];
    const double sH = rec.partial_sums[N / 2 - 1];
    const double sQ = rec.partial_sums[N / 4 - 1];
    const double last = sN - sH;
    const double prev = sH - sQ;
    rec.block_ratio = prev > 0.0 ? last / prev : 0.0;
    // A harmonic tail c/n contributes c ln 2 to every dyadic block.
    const bool divergent = rec.block_ratio > 0.9 && last > 1e-12 * std::max(1.0, sN);
    rec.verdict = divergent ? "divergent-evidence" : "summable-evidence";
    if (!divergent && rec.block_ratio > 0.0) rec.tail_estimate = last * rec.block_ratio / (1.0 - rec.block_ratio);
    return rec;
}

FactorizationReport factorization_modulus_check(const ComplexFn& F, const std::vector<cplx>& f_zeros,
                                                const BlaschkeProduct& B, const std::vector<cplx>& probes) {
    std::vector<cplx> a = f_zeros;
    std::vector<cplx> b = B.zeros();
    auto less = [](cplx x, cplx y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    bool match = a.size() == b.size();
    for (size_t k = 0; match && k < a.size(); ++k) match = std::abs(a[k] - b[k]) <= 1e-12 * std::max(1.0, std::abs(a[k]));
    if (!match) throw ParameterError("factorization_modulus_check: Blaschke zeros differ from the zeros of F");

    FactorizationReport rep;
    const bool half_plane = B.domain() == BlaschkeDomain::UpperHalfPlane || B.domain() == BlaschkeDomain::LowerHalfPlane;
    for (cplx z : probes) {
        if (!half_plane && is_corner(classify(z, B.geometry()))) {
            ++rep.skipped_corners;
            continue;
        }
        if (!B.on_boundary(z)) throw DomainError("probe " + format_complex(z) + " is not on the boundary");
        const cplx f = F(z);
        const cplx bz = blaschke_eval(B, z);
        ++rep.probes;
        rep.max_unimodular_defect = std::max(rep.max_unimodular_defect, std::abs(std::abs(bz) - 1.0));
        rep.max_modulus_defect = std::max(rep.max_modulus_defect, std::abs(std::abs(f) - std::abs(f / bz)));
    }
    // Quotient near each zero, approached from four directions.
    for (cplx w0 : B.zeros()) {
        const double h = 1e-5 * std::max(1.0, std::abs(w0));
        std::vector<cplx> vals;
        for (int k = 0; k < 4; ++k) {
            const cplx w = w0 + std::polar(h, 0.5 * kPi * k + 0.3);
            vals.push_back(F(w) / blaschke_eval(B, w));
        }
        double spread = 0.0;
        for (const cplx& v : vals) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) rep.removable = false;
            spread = std::max(spread, std::abs(v - vals[0]) / std::max(1.0, std::abs(vals[0])));
        }
        rep.max_removable_spread = std::max(rep.max_removable_spread, spread);
        if (spread > 1e-3) rep.removable = false;
    }
    return rep;
}

}  // namespace halfstrip
