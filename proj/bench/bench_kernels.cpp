// Serial reference versus OpenMP kernels on the 784-392-196-10 network.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "caprelu/kernels.hpp"
#include "caprelu/random.hpp"

using namespace caprelu;

namespace {

const Network& net() {
  static const Network n = build_relu_network(std::vector<Index>{784, 392, 196, 10}, 1);
  return n;
}

Matrix batch(Index rows) {
  Rng rng(7);
  Matrix x(rows, 784);
  for (Index i = 0; i < x.size(); ++i) x(i) = rng.uniform();
  return x;
}

Matrix seed(Index rows) { return Matrix::Constant(rows, 10, 0.1); }

void BM_ReferenceForward(benchmark::State& state) {
  const Matrix x = batch(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::forward(net(), x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_KernelForward(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(1)));
  const Matrix x = batch(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::forward(net(), x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ReferenceBackprop(benchmark::State& state) {
  const Matrix x = batch(state.range(0));
  const ForwardTrace t = reference::forward(net(), x);
  const Matrix s = seed(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::backprop(net(), x, t, s, true, true));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_KernelBackprop(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(1)));
  const Matrix x = batch(state.range(0));
  const ForwardTrace t = kernels::forward(net(), x);
  const Matrix s = seed(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::backprop(net(), x, t, s, true, true));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void thread_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (const int rows : {128, 1000}) {
    for (int t = 1; t <= max_threads; t *= 2) b->Args({rows, t});
  }
}

}  // namespace

BENCHMARK(BM_ReferenceForward)->Arg(128)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelForward)->Apply(thread_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReferenceBackprop)->Arg(128)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelBackprop)->Apply(thread_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
