#include <benchmark/benchmark.h>

#include <sphm/domains.hpp>
#include <sphm/engine.hpp>
#include <sphm/mechanisms.hpp>
#include <sphm/types.hpp>

// Growth of the two screening protocols on the families that matter: the
// worst-case family (quadratic crawler, linear diver) runs on the implicit
// O(1)-memory view, random markets on dense rank tables.

namespace {

void crawl_worstcase(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const sphm::WorstCaseView view(n);
    for (auto _ : state) {
        sphm::CountingSink sink(n);
        benchmark::DoNotOptimize(sphm::crawl(view, sink));
        benchmark::DoNotOptimize(sink.total_bits());
    }
    state.SetComplexityN(n);
}
BENCHMARK(crawl_worstcase)->RangeMultiplier(2)->Range(256, 16384)->Complexity();

void dive_worstcase(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const sphm::WorstCaseView view(n);
    for (auto _ : state) {
        sphm::CountingSink sink(n);
        benchmark::DoNotOptimize(sphm::dive(view, sink));
        benchmark::DoNotOptimize(sink.total_bits());
    }
    state.SetComplexityN(n);
}
BENCHMARK(dive_worstcase)->RangeMultiplier(2)->Range(256, 65536)->Complexity();

void crawl_random(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const sphm::NormalizeResult norm = sphm::normalize(sphm::gen_random_sp(n, 1));
    const sphm::DenseView view(norm.instance);
    for (auto _ : state) {
        sphm::CountingSink sink(n);
        benchmark::DoNotOptimize(sphm::crawl(view, sink));
    }
    state.SetComplexityN(n);
}
BENCHMARK(crawl_random)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void dive_random(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const sphm::NormalizeResult norm = sphm::normalize(sphm::gen_random_sp(n, 1));
    const sphm::DenseView view(norm.instance);
    for (auto _ : state) {
        sphm::CountingSink sink(n);
        benchmark::DoNotOptimize(sphm::dive(view, sink));
    }
    state.SetComplexityN(n);
}
BENCHMARK(dive_random)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void ttc_random(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const sphm::Instance instance = sphm::gen_random_sp(n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sphm::ttc(instance));
    }
    state.SetComplexityN(n);
}
BENCHMARK(ttc_random)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void crawler_full_pipeline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const sphm::Instance instance = sphm::gen_random_sp(n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sphm::crawler(instance));
    }
    state.SetComplexityN(n);
}
BENCHMARK(crawler_full_pipeline)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
