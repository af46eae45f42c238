#include <benchmark/benchmark.h>

#include "hec/census.hpp"
#include "hec/obstruct.hpp"
#include "hec/stats.hpp"
#include "hec/zeta.hpp"

namespace {

using namespace hec;

void BM_FieldMul(benchmark::State& state) {
    const Field& F = Field::get(static_cast<int>(state.range(0)));
    fe a = 3 % F.q(), b = F.q() - 1;
    for (auto _ : state) {
        a = F.mul(a, b) | 1;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(8)->Arg(16)->Arg(18);

void BM_EnumerateGenus(benchmark::State& state) {
    const Field& F = Field::get(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto census = enumerate_genus(3, F);
        benchmark::DoNotOptimize(census.size());
    }
}
BENCHMARK(BM_EnumerateGenus)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_PointCounts(benchmark::State& state) {
    const Field& F2 = Field::get(1);
    auto census = enumerate_genus(3, F2);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::int64_t total = 0;
        for (const auto& c : census) total += count_points(c, k);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_PointCounts)->Arg(1)->Arg(3)->Arg(6);

void BM_W3ClassCounts(benchmark::State& state) {
    const std::int64_t q = std::int64_t(1) << state.range(0);
    for (auto _ : state) {
        auto table = w3_class_counts(q);
        benchmark::DoNotOptimize(table.total);
    }
}
BENCHMARK(BM_W3ClassCounts)->Arg(6)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Obstructions(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto list = generate_obstructions(g);
        benchmark::DoNotOptimize(list.size());
    }
}
BENCHMARK(BM_Obstructions)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
