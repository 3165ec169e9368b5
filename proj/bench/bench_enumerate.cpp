#include <benchmark/benchmark.h>
#include <omp.h>

#include "qfano/fano_constraints.hpp"

using qfano::Rational;

namespace {

qfano::SearchConfig wide_window()
{
    qfano::SearchConfig config;
    config.q_range = {5, 6, 7, 8};
    config.ratio_lo = Rational(0);
    config.ratio_hi = Rational(100);
    return config;
}

qfano::SmallC2C1Config small_config()
{
    qfano::SmallC2C1Config config;
    config.threshold = Rational(qfano::Integer(1), qfano::Integer(10));
    config.ratio_bound = Rational(qfano::Integer(25), qfano::Integer(8));
    return config;
}

void BM_WindowedSerial(benchmark::State &state)
{
    const auto config = wide_window();
    for (auto _ : state)
        benchmark::DoNotOptimize(qfano::enumerate_windowed_serial(config));
}

void BM_WindowedParallel(benchmark::State &state)
{
    const auto config = wide_window();
    omp_set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qfano::enumerate_windowed(config));
}

void BM_SmallSerial(benchmark::State &state)
{
    const auto config = small_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(qfano::enumerate_small_c2c1_serial(config));
}

void BM_SmallParallel(benchmark::State &state)
{
    const auto config = small_config();
    omp_set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qfano::enumerate_small_c2c1(config));
}

} // namespace

BENCHMARK(BM_WindowedSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WindowedParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SmallSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SmallParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
