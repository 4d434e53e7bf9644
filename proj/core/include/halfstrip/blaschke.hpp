#pragma once

#include "halfstrip/common.hpp"
#include "halfstrip/geometry.hpp"

#include <string>
#include <vector>

namespace halfstrip {

enum class BlaschkeDomain { UpperHalfPlane, LowerHalfPlane, OmegaPlus, OmegaMinus };

std::string to_string(BlaschkeDomain d);

// Finite Blaschke product. On the half-planes
//   B(z) = ((z - i)/(z + i))^m prod (|z_n^2 + 1|/(z_n^2 + 1)) (z - z_n)/(z - conj z_n)
// (with +-i swapped on C-); on Omega+- the zeros and the point are pulled back by Psi+-.
class BlaschkeProduct {
public:
    BlaschkeProduct(std::vector<cplx> zeros, BlaschkeDomain domain, StripGeometry g = StripGeometry{1.0});

    const std::vector<cplx>& zeros() const { return zeros_; }
    BlaschkeDomain domain() const { return domain_; }
    const StripGeometry& geometry() const { return g_; }
    // Zeros sitting at the special point (i on the upper side, -i on the lower side).
    int m() const { return m_; }
    // Zeros in the half-plane variable.
    const std::vector<cplx>& z_zeros() const { return z_zeros_; }

    // Point of the domain closure mapped to the half-plane variable.
    cplx to_half_plane(cplx point) const;
    bool on_boundary(cplx point) const;

private:
    std::vector<cplx> zeros_;
    BlaschkeDomain domain_;
    StripGeometry g_;
    std::vector<cplx> z_zeros_;
    std::vector<cplx> unimodular_;  // |z_n^2+1|/(z_n^2+1), via arguments
    int m_ = 0;

    friend cplx blaschke_eval(const BlaschkeProduct& B, cplx point);
};

cplx blaschke_eval(const BlaschkeProduct& B, cplx point);

struct ConvergenceRecord {
    double sum = 0.0;
    std::vector<double> partial_sums;
    std::string verdict;        // "summable-evidence" or "divergent-evidence"
    double block_ratio = 0.0;   // (S_N - S_{N/2}) / (S_{N/2} - S_{N/4})
    double tail_estimate = 0.0;  // geometric extrapolation of the remaining sum
};

// Sum of Im z_n / (1 + |z_n|^2) (with -Im on the lower side), z_n the half-plane images.
ConvergenceRecord convergence_criterion(const std::vector<cplx>& zeros, BlaschkeDomain domain,
                                        const StripGeometry& g = StripGeometry{1.0});

struct FactorizationReport {
    int probes = 0;
    int skipped_corners = 0;
    double max_modulus_defect = 0.0;  // max | |F| - |F/B| | at the probes
    double max_unimodular_defect = 0.0;  // max | |B| - 1 |
    bool removable = true;             // F/B has finite, direction-independent limits at the zeros
    double max_removable_spread = 0.0;
};

// F must vanish exactly at B's zeros (given as f_zeros); otherwise ParameterError.
FactorizationReport factorization_modulus_check(const ComplexFn& F, const std::vector<cplx>& f_zeros,
                                                const BlaschkeProduct& B, const std::vector<cplx>& probes);

}  // namespace halfstrip
