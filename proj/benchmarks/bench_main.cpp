#include <jwcat/functor_ck.hpp>
#include <jwcat/functor_p.hpp>
#include <jwcat/homotopy.hpp>
#include <jwcat/k0.hpp>
#include <jwcat/koszul.hpp>
#include <jwcat/reduce.hpp>
#include <jwcat/reference.hpp>
#include <jwcat/suite.hpp>
#include <jwcat/zigzag.hpp>

#include <benchmark/benchmark.h>

using namespace jwcat;

namespace
{

ComplexPtr point(int vertex)
{
    const AlgebraPtr &B = zigzag().B;
    return make_complex(Complex::from_summand(B, projective_summand(B, vertex, 0), 0));
}

// Window size is the benchmark argument throughout.

void BM_ReduceCKofP2(benchmark::State &state)
{
    const ComplexPtr x = ck_of_p2_raw(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_reduce(x));
}
BENCHMARK(BM_ReduceCKofP2)->RangeMultiplier(2)->Range(8, 64);

void BM_ProjectorOnP1(benchmark::State &state)
{
    const ComplexPtr x = point(V1);
    for (auto _ : state) benchmark::DoNotOptimize(P_on_object(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ProjectorOnP1)->RangeMultiplier(2)->Range(8, 64);

void BM_KoszulOfPP1(benchmark::State &state)
{
    const ComplexPtr p = P_on_object(point(V1), static_cast<int>(state.range(0))).output();
    for (auto _ : state) benchmark::DoNotOptimize(koszul_D_on_object(p));
}
BENCHMARK(BM_KoszulOfPP1)->RangeMultiplier(2)->Range(8, 64);

void BM_CKofDP1(benchmark::State &state)
{
    const ComplexPtr d = koszul_D_on_object(point(V1));
    for (auto _ : state) benchmark::DoNotOptimize(CK_on_object(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CKofDP1)->RangeMultiplier(2)->Range(8, 64);

void BM_TheoremIsoP1(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const ComplexPtr dp = koszul_D_on_object(P_on_object(point(V1), n + 2).output());
    const ComplexPtr ckd = CK_on_object(koszul_D_on_object(point(V1)), n + 2).raw;
    for (auto _ : state) benchmark::DoNotOptimize(iso_in_homotopy_category(dp, ckd, n));
}
BENCHMARK(BM_TheoremIsoP1)->RangeMultiplier(2)->Range(8, 32);

void BM_EulerClassPP1(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    const ComplexPtr p = P_on_object(point(V1), order + 2).output();
    for (auto _ : state) benchmark::DoNotOptimize(euler_class(*p, order));
}
BENCHMARK(BM_EulerClassPP1)->RangeMultiplier(2)->Range(8, 128);

void BM_JonesWenzlSquare(benchmark::State &state)
{
    const SeriesMatrix p = jones_wenzl_reference(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(series_matmul(p, p));
}
BENCHMARK(BM_JonesWenzlSquare)->RangeMultiplier(2)->Range(8, 128);

void BM_FullSuite(benchmark::State &state)
{
    VerificationConfig cfg;
    cfg.window = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}
BENCHMARK(BM_FullSuite)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
