#include <numbers>

#include <benchmark/benchmark.h>

#include "sqz/mathieu.hpp"
#include "sqz/packet.hpp"
#include "sqz/propagate.hpp"
#include "sqz/theta_design.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalf = kPi / 2;

void BM_PropagateHalfPeriod(benchmark::State& state) {
    auto p = sqz::mathieu_profile({1.217, 0.844});
    sqz::StepControl sc{1.0 / static_cast<double>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqz::propagate(p, -kHalf, kHalf, sc));
    }
}
BENCHMARK(BM_PropagateHalfPeriod)->Arg(1000)->Arg(10000);

void BM_Monodromy(benchmark::State& state) {
    sqz::MathieuParams mp{1.217, 0.844};
    sqz::StepControl sc{1.0 / static_cast<double>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqz::monodromy(mp, kHalf, sc));
    }
}
BENCHMARK(BM_Monodromy)->Arg(1000)->Arg(10000);

void BM_ScanNode(benchmark::State& state) {
    // one raster cell at the default tracing step
    sqz::ScanGrid g;
    g.n0 = 1;
    g.n1 = 1;
    g.beta0_lo = g.beta0_hi = 1.217;
    g.beta1_lo = g.beta1_hi = 0.844;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqz::strutt_map(g));
    }
}
BENCHMARK(BM_ScanNode);

void BM_SolveCoefficients(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqz::solve_coefficients(2.0, -3.0, 0.0, sqz::GammaSpec::sin2()));
    }
}
BENCHMARK(BM_SolveCoefficients);

void BM_BetaFromTheta(benchmark::State& state) {
    auto d = sqz::solve_coefficients(2.0, -3.0, 0.0, sqz::GammaSpec::sin2());
    double tau = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqz::beta_from_theta(d, tau));
        tau = tau < 1.5 ? tau + 1e-3 : 0.3;
    }
}
BENCHMARK(BM_BetaFromTheta);

void BM_Shadow(benchmark::State& state) {
    auto d = sqz::solve_coefficients(2.0, -3.0, 0.0, sqz::GammaSpec::sin2());
    auto p = sqz::design_profile(d);
    sqz::GaussianPacket pk{1.0, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sqz::uncertainty_shadow(p, -kHalf, kHalf, pk, sqz::kShadowW999, 64, {1e-3}));
    }
}
BENCHMARK(BM_Shadow);

}  // namespace

BENCHMARK_MAIN();
