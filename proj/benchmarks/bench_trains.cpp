#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "trains/exact.hpp"
#include "trains/io.hpp"
#include "trains/model.hpp"
#include "trains/schedulers.hpp"

namespace {

using namespace trains;

// Deterministic mixed-sign network with the requested number of lines; a wide
// coordinate range keeps overlap rejection cheap.
TrainNetwork make_network(int dimension, std::int64_t train_length, std::size_t n_lines) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Coord> coord(-50, 50);
  std::uniform_int_distribution<int> axis(0, dimension - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<TrainLine> lines;
  while (lines.size() < n_lines) {
    TrainLine line;
    line.axis = axis(rng);
    line.sign = coin(rng) == 1 ? -1 : +1;
    line.train_length = train_length;
    line.departure = {coord(rng), coord(rng), dimension == 2 ? 0 : coord(rng)};
    bool ok = true;
    for (const TrainLine& existing : lines)
      if (tracks_overlap(existing, line)) ok = false;
    if (ok) lines.push_back(line);
  }
  return TrainNetwork(dimension, lines);
}

void BM_BuildGraph(benchmark::State& state) {
  const TrainNetwork net = generate_grid(state.range(0));
  const std::int64_t budget = 2 * state.range(0) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_graph(net, budget));
  }
}
BENCHMARK(BM_BuildGraph)->DenseRange(1, 4);

void BM_MaxClique(benchmark::State& state) {
  const TrainNetwork net = generate_grid(state.range(0));
  const CompatibilityGraph g = build_graph(net, 2 * state.range(0) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_clique(g));
  }
}
BENCHMARK(BM_MaxClique)->DenseRange(1, 4);

void BM_MinDelayGrid(benchmark::State& state) {
  const TrainNetwork net = generate_grid(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_delay(net));
  }
}
BENCHMARK(BM_MinDelayGrid)->DenseRange(1, 4);

void BM_Schedule2d(benchmark::State& state) {
  const TrainNetwork net = make_network(2, 2, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(schedule_2d(net));
  }
}
BENCHMARK(BM_Schedule2d)->RangeMultiplier(4)->Range(8, 128);

void BM_Schedule3dUnit(benchmark::State& state) {
  const TrainNetwork net = make_network(3, 1, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(schedule_3d_unit(net));
  }
}
BENCHMARK(BM_Schedule3dUnit)->RangeMultiplier(4)->Range(8, 128);

void BM_ValidateSchedule(benchmark::State& state) {
  const TrainNetwork net = make_network(2, 2, state.range(0));
  const Schedule s = schedule_2d(net);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_schedule(net, s));
  }
}
BENCHMARK(BM_ValidateSchedule)->RangeMultiplier(4)->Range(8, 128);

void BM_ExportCliquer(benchmark::State& state) {
  const TrainNetwork net = generate_grid(state.range(0));
  const std::int64_t budget = 2 * state.range(0) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(export_cliquer(net, budget));
  }
}
BENCHMARK(BM_ExportCliquer)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
