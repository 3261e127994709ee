#include <benchmark/benchmark.h>

#include "structsums/conductivity.hpp"
#include "structsums/features.hpp"
#include "structsums/microgen.hpp"

using namespace structsums;

namespace {

DiskConfiguration sample_config(int n, double nu) {
    GeneratorSpec spec;
    spec.n = n;
    spec.concentration = nu;
    spec.seed = 7;
    return gen_rsa(spec);
}

void BM_LatticeConstruction(benchmark::State& state) {
    for (auto _ : state) {
        Lattice lat = Lattice::hexagonal(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(lat.sum_table().data());
    }
}
BENCHMARK(BM_LatticeConstruction)->Arg(64)->Arg(360);

void BM_EisensteinEval(benchmark::State& state) {
    const auto lat = make_square_lattice();
    const EisensteinEvaluator ev(lat);
    const int n = static_cast<int>(state.range(0));
    const cplx z(0.31, -0.27);
    for (auto _ : state) benchmark::DoNotOptimize(ev.eval(n, z));
}
BENCHMARK(BM_EisensteinEval)->Arg(2)->Arg(5)->Arg(10);

void BM_EisensteinMatrix(benchmark::State& state) {
    const auto config = sample_config(static_cast<int>(state.range(0)), 0.4);
    const EisensteinEvaluator ev(config.lattice_ptr());
    for (auto _ : state) {
        SumCache cache;
        benchmark::DoNotOptimize(cache.eisenstein_matrix(config, ev, 2).data());
    }
}
BENCHMARK(BM_EisensteinMatrix)->Arg(64)->Arg(128);

void BM_BuildX6(benchmark::State& state) {
    const auto config = sample_config(static_cast<int>(state.range(0)), 0.4);
    const EisensteinEvaluator ev(config.lattice_ptr());
    for (auto _ : state) {
        SumCache cache;
        benchmark::DoNotOptimize(build_Xq(config, 6, ev, cache).values().data());
    }
}
BENCHMARK(BM_BuildX6)->Arg(64)->Arg(128);

void BM_WalkCycle(benchmark::State& state) {
    GeneratorSpec spec;
    spec.protocol = Protocol::mc_walk;
    spec.n = static_cast<int>(state.range(0));
    spec.concentration = 0.5;
    spec.cycles = 1;
    spec.seed = 21;
    const auto initial = gen_rsa(spec);
    for (auto _ : state) benchmark::DoNotOptimize(gen_mc_walk(spec, initial).centers().data());
}
BENCHMARK(BM_WalkCycle)->Arg(64)->Arg(256);

void BM_EffectiveConductivity(benchmark::State& state) {
    const auto config = sample_config(64, 0.4);
    const EisensteinEvaluator ev(config.lattice_ptr());
    for (auto _ : state) {
        SumCache cache;
        benchmark::DoNotOptimize(effective_conductivity(config, 10.0, 6, ev, cache).lambda);
    }
}
BENCHMARK(BM_EffectiveConductivity);

} // namespace

BENCHMARK_MAIN();
