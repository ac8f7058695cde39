#include <benchmark/benchmark.h>

#include "qrat/hnauto.hpp"
#include "qrat/qboundary.hpp"
#include "qrat/qfarey.hpp"
#include "qrat/qknots.hpp"
#include "qrat/qrationals.hpp"
#include "qrat/stabmass.hpp"

using namespace qrat;

namespace {

// ratio of consecutive Fibonacci numbers, all digits 1
Rational fib_ratio(int n)
{
    BigInt a = 1, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return Rational(b, a);
}

void BM_LaurentMul(benchmark::State& st)
{
    LaurentPoly p = LaurentPoly::q_int(st.range(0));
    LaurentPoly r = p.shifted(-st.range(0) / 2);
    for (auto _ : st)
        benchmark::DoNotOptimize(p * r);
}
BENCHMARK(BM_LaurentMul)->Arg(16)->Arg(128)->Arg(1024);

void BM_DeformBraid(benchmark::State& st)
{
    Rational x = fib_ratio(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(deform_braid(x, Side::Sharp));
}
BENCHMARK(BM_DeformBraid)->Arg(8)->Arg(32)->Arg(64);

void BM_DeformCF(benchmark::State& st)
{
    Rational x = fib_ratio(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(deform_cf(x, Side::Sharp));
}
BENCHMARK(BM_DeformCF)->Arg(8)->Arg(32)->Arg(64);

void BM_Orbit(benchmark::State& st)
{
    std::vector<int> letters;
    for (int i = 0; i < st.range(0); ++i)
        letters.push_back(i % 3 == 0 ? -1 : 2);
    BraidWord w(letters);
    for (auto _ : st)
        benchmark::DoNotOptimize(orbit(w));
}
BENCHMARK(BM_Orbit)->Arg(8)->Arg(32)->Arg(128);

void BM_ClosuresDP(benchmark::State& st)
{
    Quiver g = build_quiver(fib_ratio(static_cast<int>(st.range(0))), QuiverFamily::GSharp);
    for (auto _ : st)
        benchmark::DoNotOptimize(count_closures_dp(g));
}
BENCHMARK(BM_ClosuresDP)->Arg(10)->Arg(18)->Arg(40);

void BM_ClosuresBruteForce(benchmark::State& st)
{
    Quiver g = build_quiver(fib_ratio(static_cast<int>(st.range(0))), QuiverFamily::GSharp);
    for (auto _ : st)
        benchmark::DoNotOptimize(count_closures_bruteforce(g));
}
BENCHMARK(BM_ClosuresBruteForce)->Arg(10)->Arg(18);

void BM_FareyGenerate(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(generate(FareyHalf::Positive, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_FareyGenerate)->Arg(4)->Arg(8)->Arg(12);

void BM_ClassifyFloat(benchmark::State& st)
{
    QValue q = QValue::from_double(0.3);
    for (auto _ : st)
        benchmark::DoNotOptimize(classify_boundary_point(1.2345678, q, 64));
}
BENCHMARK(BM_ClassifyFloat);

void BM_ClassifyExact(benchmark::State& st)
{
    QValue q = QValue::parse("3/10");
    for (auto _ : st)
        benchmark::DoNotOptimize(classify_boundary_point(1.2345678, q, 64));
}
BENCHMARK(BM_ClassifyExact);

void BM_BoundaryLimit(benchmark::State& st)
{
    BraidWord w = BraidWord::parse("s1^-2 s2^2");
    auto probes = default_probes();
    for (auto _ : st)
        benchmark::DoNotOptimize(boundary_limit(w, 0.5, probes, st.range(0)));
}
BENCHMARK(BM_BoundaryLimit)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
