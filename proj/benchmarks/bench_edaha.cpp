// Timing for the hot paths: pexp products, generator recursion, the braid
// check, relator sweeps and the Laumon sum.

#include "edaha/laumon.hpp"
#include "edaha/representation.hpp"

#include <benchmark/benchmark.h>

using namespace edaha;
using LP = LaurentPoly;

static void BM_PexpProduct(benchmark::State& st) {
    const LP Q = LP::mono(1), p = LP::mono(0, 1), s = LP::mono(0, 0, 1);
    const RingElement x = RingElement::pexp(FormalFraction::ps(Q * p * s - Q.pow(3) * p, {{2, 0}, {0, 2}}));
    const RingElement y = RingElement::pexp(FormalFraction::ps(Q * s * s, {{1, 1}, {0, 2}}));
    for (auto _ : st) benchmark::DoNotOptimize(x * y * x.inverseUnit());
}
BENCHMARK(BM_PexpProduct);

static void BM_GeneratorRecursion(benchmark::State& st) {
    const auto words = wordsUpTo(int(st.range(0)));
    for (auto _ : st) {
        GeneratorCache cache;
        for (auto& w : words) benchmark::DoNotOptimize(oMatrix(Family::A, w, cache));
    }
    st.counters["words"] = double(words.size());
}
BENCHMARK(BM_GeneratorRecursion)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Braid(benchmark::State& st) {
    NumericPolicy pol;
    for (auto _ : st) benchmark::DoNotOptimize(checkBraid(pol));
}
BENCHMARK(BM_Braid)->Unit(benchmark::kMillisecond);

static void BM_RelatorSweep(benchmark::State& st) {
    NumericPolicy pol;
    for (auto _ : st) benchmark::DoNotOptimize(relationSuite(pol, 1, 0, 0));
}
BENCHMARK(BM_RelatorSweep)->Unit(benchmark::kMillisecond);

static void BM_PochEval(benchmark::State& st) {
    NumericPolicy pol;
    PrecisionScope scope(pol.precisionDigits);
    const Cx z = cx(0.4, -0.3), p = cx(0.21, 0.17), q = cx(-0.15, 0.22);
    for (auto _ : st) benchmark::DoNotOptimize(pochEval(z, {p, q}, pol));
}
BENCHMARK(BM_PochEval)->Unit(benchmark::kMicrosecond);

static void BM_LaumonSum(benchmark::State& st) {
    LaumonParams P = specialization(1, 2);
    P.maxBoxes = int(st.range(0));
    P.maxPHalf = 8;
    const SamplePoint pt = SamplePoint::make(cx(0.98, 0.38), cx(0.1), cx(0.15));
    size_t tuples = 0;
    for (auto _ : st) tuples = laumonF(P, pt, 1e-6).tuples;
    st.counters["tuples"] = double(tuples);
}
BENCHMARK(BM_LaumonSum)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
