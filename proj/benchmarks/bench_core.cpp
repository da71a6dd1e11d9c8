#include <benchmark/benchmark.h>

#include "etaq/catalog.hpp"
#include "etaq/congruence.hpp"
#include "etaq/forms.hpp"
#include "etaq/hauptmodul.hpp"
#include "etaq/hecke.hpp"
#include "etaq/moments.hpp"
#include "etaq/sequences.hpp"
#include "etaq/towers.hpp"

using namespace etaq;

static void BM_SeriesProduct(benchmark::State& state)
{
    const long n = state.range(0);
    QSeries a = forms::eisenstein(4, n), b = forms::euler_product(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesProduct)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

static void BM_PartitionNumbers(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(forms::partition_power(1, state.range(0)));
}
BENCHMARK(BM_PartitionNumbers)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_PointValue(benchmark::State& state)
{
    // A fresh store each round, so the kernel is rebuilt.
    for (auto _ : state) {
        sequences::SequenceStore store;
        benchmark::DoNotOptimize(store.value("eta2", state.range(0)));
    }
}
BENCHMARK(BM_PointValue)->Arg(5000)->Arg(27000)->Unit(benchmark::kMillisecond);

static void BM_AtkinU(benchmark::State& state)
{
    QSeries s = forms::e_sequence(4, 125 * 200);
    for (auto _ : state)
        benchmark::DoNotOptimize(atkin_U(s, 125));
}
BENCHMARK(BM_AtkinU)->Unit(benchmark::kMillisecond);

static void BM_ModularEquation(benchmark::State& state)
{
    const long ell = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(hauptmodul::derive_modular_equation(ell, ell == 13 ? 500 : 200));
}
BENCHMARK(BM_ModularEquation)->Arg(5)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_TowerRows(benchmark::State& state)
{
    for (auto _ : state) {
        towers::ATable t(towers::Family::L45);
        benchmark::DoNotOptimize(t.row(state.range(0)));
    }
}
BENCHMARK(BM_TowerRows)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_HeckeStructure(benchmark::State& state)
{
    auto ctx = hecke::make_context(4, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(hecke::verify_hecke_structure(ctx, 1, 20));
}
BENCHMARK(BM_HeckeStructure)->Unit(benchmark::kMillisecond);

static void BM_QuasimodularSolve(benchmark::State& state)
{
    auto basis = moments::moment_basis(6, moments::Statistic::Crank);
    QSeries target = moments::moment_series(moments::Statistic::Crank, 12, 80);
    for (auto _ : state)
        benchmark::DoNotOptimize(moments::quasimodular_solve(target, basis, 80));
}
BENCHMARK(BM_QuasimodularSolve)->Unit(benchmark::kMillisecond);

static void BM_VerifyClaim(benchmark::State& state)
{
    const auto& claim = catalog::find_claim("e4-5");
    const auto& inst = claim.instances.back();
    for (auto _ : state) {
        sequences::SequenceStore store;
        benchmark::DoNotOptimize(congruence::verify_instance(claim, inst, {}, store));
    }
}
BENCHMARK(BM_VerifyClaim)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
