#include <benchmark/benchmark.h>

#include "meansense/constructions.hpp"
#include "meansense/distance.hpp"
#include "meansense/occurrence.hpp"
#include "meansense/schedule.hpp"

namespace ms = meansense;

static void BM_BuildS3Depth4(benchmark::State& state) {
  for (auto _ : state) {
    ms::WordFamily f(ms::build_schedule_s3(4));
    benchmark::DoNotOptimize(f.a(4).size());
  }
}
BENCHMARK(BM_BuildS3Depth4)->Unit(benchmark::kMillisecond);

static void BM_MaxWindowA4(benchmark::State& state) {
  const ms::WordFamily f(ms::build_schedule_s3(4));
  const ms::OccurrenceIndex idx(f.a(4));
  const ms::Length window = f.schedule().level(static_cast<unsigned>(state.range(0))).t;
  for (auto _ : state) benchmark::DoNotOptimize(idx.max_window(window));
}
BENCHMARK(BM_MaxWindowA4)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_DistanceSequence(benchmark::State& state) {
  const ms::WordFamily f(ms::build_schedule_s3(4));
  const ms::PointView x = ms::transitive_prefix(f, f.a(4).size());
  const ms::Length steps = static_cast<ms::Length>(state.range(0));
  const ms::Length depth = 4096;
  const ms::Length off = f.a(3).size() + f.schedule().level(3).k;
  const ms::PointView a = ms::make_point(ms::subword_at(x.prefix, 1, steps + depth));
  const ms::PointView b = ms::make_point(ms::subword_at(x.prefix, off + 1, steps + depth));
  for (auto _ : state) benchmark::DoNotOptimize(ms::distance_sequence(a, b, steps, depth));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(steps));
}
BENCHMARK(BM_DistanceSequence)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
