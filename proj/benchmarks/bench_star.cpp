#include <benchmark/benchmark.h>

#include <dwstar/oracle.hpp>
#include <dwstar/random.hpp>
#include <dwstar/star.hpp>

namespace
{

using namespace dwstar;

void BM_StarRandomPair(benchmark::State &state)
{
    Rng rng(1);
    const auto degree = static_cast<unsigned>(state.range(0));
    const CrossedElement a = random_crossed(rng, {degree, 5, true, 60});
    const CrossedElement b = random_crossed(rng, {degree, 5, true, 60});
    for (auto _ : state) {
        benchmark::DoNotOptimize(star(a, b));
    }
}
BENCHMARK(BM_StarRandomPair)->DenseRange(2, 6, 2);

void BM_AssociativityTriple(benchmark::State &state)
{
    Rng rng(2);
    const CrossedElement a = random_crossed(rng, {4, 5, true, 60});
    const CrossedElement b = random_crossed(rng, {4, 5, true, 60});
    const CrossedElement c = random_crossed(rng, {4, 5, true, 60});
    for (auto _ : state) {
        benchmark::DoNotOptimize(star(star(a, b), c) == star(a, star(b, c)));
    }
}
BENCHMARK(BM_AssociativityTriple);

void BM_NormalFormMultiply(benchmark::State &state)
{
    const auto e = static_cast<unsigned>(state.range(0));
    const NormalForm p = NormalForm::basis({0, e, false});
    const NormalForm x = NormalForm::basis({e, 0, true});
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiply(p, x));
    }
}
BENCHMARK(BM_NormalFormMultiply)->DenseRange(2, 8, 2);

void BM_ExpansionProduct(benchmark::State &state)
{
    const auto e = static_cast<unsigned>(state.range(0));
    const MultiPoly a = MultiPoly::var(kP, e);
    const MultiPoly b = MultiPoly::var(kX, e);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expansion_product(a, b));
    }
}
BENCHMARK(BM_ExpansionProduct)->DenseRange(2, 6, 2);

} // namespace
BENCHMARK_MAIN();
