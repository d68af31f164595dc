// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "svt/checks.hpp"
#include "svt/enumerate.hpp"
#include "svt/expansions.hpp"

using namespace svt;

namespace {

const SkewShape kShape(Partition{4, 3, 2}, Partition{1});
const Flag kFlag{3, 3, 3};

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_GeneratingFunction(benchmark::State& state)
{
    auto ts = enumerate_svt(kShape, kFlag);
    for (auto _ : state)
        benchmark::DoNotOptimize(svt_generating_function(ts, 3, mode(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(ts.size()));
}

void BM_Keys(benchmark::State& state)
{
    auto ts = enumerate_svt(kShape, kFlag);
    for (auto _ : state)
        benchmark::DoNotOptimize(svt_keys(ts, kFlag, mode(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(ts.size()));
}

void BM_Classify(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_svt(kShape, kFlag, 3, std::nullopt, mode(state)));
}

void BM_CrystalAxioms(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(check_crystal_axioms(5, 3, mode(state)));
}

}  // namespace

BENCHMARK(BM_GeneratingFunction)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Keys)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrystalAxioms)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
