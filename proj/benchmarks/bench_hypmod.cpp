#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "hypmod/numeric.hpp"

using namespace hypmod;

namespace {

const QuadratureSpec kBenchSpec{16, 16, 1e-9};

void BM_dist(benchmark::State& state) {
    const HPoint p(1.3, -0.4);
    const HPoint q(2.7, 3.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(dist(p, q));
}
BENCHMARK(BM_dist);

void BM_apply_isometry(benchmark::State& state) {
    const MobiusIsometry m(1.2, 0.3, -0.5, 0.9);
    const HPoint p(1.3, -0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(m.apply(p));
}
BENCHMARK(BM_apply_isometry);

void BM_from_cartesian(benchmark::State& state) {
    const HPoint p(0.3, 1.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(from_cartesian(p));
}
BENCHMARK(BM_from_cartesian);

void BM_ti2_small(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ti2(0.5));
}
BENCHMARK(BM_ti2_small);

void BM_ti2_near_one(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ti2(0.999));
}
BENCHMARK(BM_ti2_near_one);

void BM_curve_integral_radial(benchmark::State& state) {
    const Annulus ann(HPoint(1, 0), 1.0, 2.0);
    const DensityField rho = extremal_density(FamilyKind::annulus_joining, ann);
    const auto curves = sample_subfamily(FamilyKind::annulus_joining, ann, 1, 33);
    for (auto _ : state)
        benchmark::DoNotOptimize(curve_integral(rho, curves[0], kBenchSpec));
}
BENCHMARK(BM_curve_integral_radial);

void BM_energy_annulus(benchmark::State& state) {
    const Annulus ann(HPoint(1, 0), 1.0, 2.0);
    const DensityField rho = extremal_density(FamilyKind::annulus_joining, ann);
    QuadratureSpec spec{static_cast<int>(state.range(0)), 16, 1e-9};
    for (auto _ : state)
        benchmark::DoNotOptimize(energy(rho, spec));
}
BENCHMARK(BM_energy_annulus)->Arg(4)->Arg(8)->Arg(16);

void BM_foliated_modulus(benchmark::State& state) {
    const Annulus ann(HPoint(1, 0), 1.0, 2.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            foliated_modulus(FamilyKind::annulus_separating, ann, n, kBenchSpec));
}
BENCHMARK(BM_foliated_modulus)->Arg(64)->Arg(256);

void BM_euclidean_ring_modulus(benchmark::State& state) {
    const EuclideanCircle inner = to_euclidean(HyperbolicCircle(HPoint(2, 3), 1.0));
    const EuclideanCircle outer = to_euclidean(HyperbolicCircle(HPoint(2, 3), 2.0));
    for (auto _ : state)
        benchmark::DoNotOptimize(euclidean_ring_modulus(inner, outer));
}
BENCHMARK(BM_euclidean_ring_modulus);

} // namespace

int main(int argc, char* argv[]) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
