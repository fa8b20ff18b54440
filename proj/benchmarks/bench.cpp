#include <benchmark/benchmark.h>

#include <cmath>

#include "fht/airfoil.hpp"
#include "fht/chebyshev.hpp"
#include "fht/operators.hpp"
#include "fht/quadrature.hpp"
#include "fht/rearrangement.hpp"

namespace {

void BM_RhoRecurrence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double t = -0.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fht::fht_cheb_rho(n, t));
        t = (t >= 0.9) ? -0.9 : t + 1e-3;
    }
}
BENCHMARK(BM_RhoRecurrence)->Arg(8)->Arg(64)->Arg(256);

void BM_PVSubtraction(benchmark::State& state) {
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    fht::FunctionHandle f = fht::smooth([](double x) { return std::sin(3 * x) + x * x; });
    for (auto _ : state) {
        benchmark::DoNotOptimize(fht::pv_fht(f, 0.37, tol).value);
    }
}
BENCHMARK(BM_PVSubtraction)->Arg(6)->Arg(9)->Arg(11);

void BM_PVIndicator(benchmark::State& state) {
    fht::FunctionHandle f = fht::chi(-0.25, 0.6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fht::pv_fht(f, 0.9, 1e-10).value);
    }
}
BENCHMARK(BM_PVIndicator);

void BM_SpectralSeries(benchmark::State& state) {
    fht::ChebSeries p;
    p.coeffs.assign(static_cast<size_t>(state.range(0)) + 1, 0.0);
    for (size_t n = 0; n < p.coeffs.size(); ++n) p.coeffs[n] = 1.0 / (1.0 + double(n * n));
    double t = -0.99;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fht::fht_series(p, t));
        t = (t >= 0.99) ? -0.99 : t + 1e-3;
    }
}
BENCHMARK(BM_SpectralSeries)->Arg(16)->Arg(64)->Arg(256);

void BM_RearrangeNorm(benchmark::State& state) {
    fht::IntervalUnion u{{{-0.7, -0.2}, {0.1, 0.4}, {0.6, 0.9}}};
    const int cells = static_cast<int>(state.range(0));
    for (auto _ : state) {
        fht::StepRearrangement r = u.transform_rearrangement(cells);
        benchmark::DoNotOptimize(fht::norm_lexp(r, 1.0));
    }
}
BENCHMARK(BM_RearrangeNorm)->Arg(1024)->Arg(8192);

void BM_AirfoilSolve(benchmark::State& state) {
    fht::ChebSeries p{{0.4, -1.0, 0.25, 0.0, 0.6}};
    fht::FunctionHandle g;
    g.eval = [p](double t) { return fht::fht_series(p, t); };
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fht::solve(g, 1e-9, false, order).solution.coeffs[1]);
    }
}
BENCHMARK(BM_AirfoilSolve)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
