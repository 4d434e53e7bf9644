#pragma once

// Seeded generators for property tests.

#include "halfstrip/common.hpp"
#include "halfstrip/geometry.hpp"

#include <random>
#include <vector>

namespace gen {

using halfstrip::cplx;

class Source {
public:
    explicit Source(unsigned long long seed) : rng_(seed) {}

    double real(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
    double log_uniform(double a, double b) { return std::exp(real(std::log(a), std::log(b))); }

    cplx upper(double lo = 1e-3, double hi = 4.0) { return {real(-4.0, 4.0), log_uniform(lo, hi)}; }
    cplx lower(double lo = 1e-3, double hi = 4.0) { return std::conj(upper(lo, hi)); }

    // Point of Omega+ at distance >= d from Gamma.
    cplx omega_plus(double sigma, double d) { return {real(-sigma + d, sigma - d), real(d, 5.0 * sigma)}; }

    // Point of Omega- at distance >= d from Gamma.
    cplx omega_minus(double sigma, double d) {
        switch (integer(0, 2)) {
            case 0: return {real(-sigma - 5.0, -sigma - d), real(-3.0, 5.0)};
            case 1: return {real(sigma + d, sigma + 5.0), real(-3.0, 5.0)};
            default: return {real(-sigma - 3.0, sigma + 3.0), real(-5.0, -d)};
        }
    }

    // Non-corner boundary point at distance >= d from the corners.
    cplx boundary(double sigma, double d, int leg = 0) {
        if (leg == 0) leg = integer(1, 3);
        if (leg == 1) return {-sigma, real(d, 6.0 * sigma)};
        if (leg == 3) return {sigma, real(d, 6.0 * sigma)};
        return {real(-sigma + d, sigma - d), 0.0};
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace gen
