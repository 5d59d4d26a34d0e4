#include <benchmark/benchmark.h>

#include <random>

#include "gaussphi/division.hpp"
#include "gaussphi/euclid.hpp"
#include "gaussphi/expansion.hpp"
#include "gaussphi/phi.hpp"
#include "gaussphi/random.hpp"

namespace {

using namespace gaussphi;

void BM_Phi(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const GInt z = random_gint(static_cast<std::uint64_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(phi(z));
}
BENCHMARK(BM_Phi)->RangeMultiplier(8)->Range(1 << 10, 1 << 17);

void BM_GaussDivide(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto bits = static_cast<std::uint64_t>(state.range(0));
    const GInt a = random_gint(2 * bits, rng);
    const GInt b = random_gint(bits, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gauss_divide(a, b));
}
BENCHMARK(BM_GaussDivide)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

void BM_MinimalDivide(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto bits = static_cast<std::uint64_t>(state.range(0));
    const GInt a = random_gint(2 * bits, rng);
    const GInt b = random_gint(bits, rng);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_divide(a, b));
}
BENCHMARK(BM_MinimalDivide)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

void BM_GcdEngine(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const GInt a = random_gint(static_cast<std::uint64_t>(state.range(0)), rng);
    const GInt b = random_gint(static_cast<std::uint64_t>(state.range(0)), rng);
    const Engine engine = state.range(1) == 0 ? Engine::Minimal : Engine::Norm;
    for (auto _ : state) benchmark::DoNotOptimize(gcd_trace(a, b, engine));
    state.SetLabel(std::string(to_string(engine)));
}
BENCHMARK(BM_GcdEngine)->ArgsProduct({{64, 256, 1024}, {0, 1}});

void BM_MinimalExpansion(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const GInt z = random_gint(static_cast<std::uint64_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_expansion(z));
}
BENCHMARK(BM_MinimalExpansion)->Arg(16)->Arg(64)->Arg(256);

void BM_MinDegreeBfs(benchmark::State& state) {
    const GInt z(state.range(0), state.range(0) / 3 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(min_degree_bfs(z));
}
BENCHMARK(BM_MinDegreeBfs)->Arg(40)->Arg(400)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
