#include "halfstrip/cauchy.hpp"
#include "halfstrip/conformal.hpp"
#include "halfstrip/functions.hpp"
#include "halfstrip/hardy.hpp"
#include "halfstrip/quadrature.hpp"

#include <benchmark/benchmark.h>

using namespace halfstrip;

static void BM_ContourNorm(benchmark::State& state) {
    const StripGeometry g(1.0);
    QuadratureSpec q;
    q.tail = TailBound::algebraic(1.0);
    const cplx a(2.0, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(lp_norm_on_contour([a](cplx z) { return 1.0 / (z - a); }, 2.0, ContourSpec::boundary(g), q));
}
BENCHMARK(BM_ContourNorm);

static void BM_CauchyTransform(benchmark::State& state) {
    const StripGeometry g(1.0);
    const BoundaryFunction F = parse_function("pole(2) + pole(-1.5+2i)").boundary();
    QuadratureSpec q;
    q.rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cauchy_transform(F, {0.3, 0.7}, g, q));
}
BENCHMARK(BM_CauchyTransform)->Arg(6)->Arg(10)->Arg(12);

static void BM_PhiPlus(benchmark::State& state) {
    const StripGeometry g(1.0);
    cplx z(0.3, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(phi_plus(z, g));
}
BENCHMARK(BM_PhiPlus);

static void BM_PsiMinus(benchmark::State& state) {
    const StripGeometry g(1.0);
    const cplx w = phi_minus({0.7, -1.3}, g);
    for (auto _ : state) benchmark::DoNotOptimize(psi_minus(w, g));
}
BENCHMARK(BM_PsiMinus);

static void BM_SchwarzChristoffel(benchmark::State& state) {
    const StripGeometry g(1.0);
    QuadratureSpec q;
    for (auto _ : state) benchmark::DoNotOptimize(schwarz_christoffel_integral(Side::Minus, {0.7, -1.3}, g, q));
}
BENCHMARK(BM_SchwarzChristoffel);

static void BM_HpNormEstimate(benchmark::State& state) {
    const StripGeometry g(1.0);
    const auto F = parse_function("expw(1)").analytic(Side::Plus, g);
    const GridSpec grid{static_cast<int>(state.range(0)), false};
    for (auto _ : state) benchmark::DoNotOptimize(hp_norm_estimate(F, 2.0, Side::Plus, grid, {}));
}
BENCHMARK(BM_HpNormEstimate)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
