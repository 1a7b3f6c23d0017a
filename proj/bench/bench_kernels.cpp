// Serial reference paths against the OpenMP kernels, and the convolution-power
// recursion against the literal composition streams.

#include <benchmark/benchmark.h>

#include "galleon/kernels.hpp"
#include "galleon/labeled.hpp"
#include "galleon/unlabeled.hpp"

using namespace galleon;
using kernels::Exec;

namespace {

std::vector<Integer> ramp(std::size_t n) {
  std::vector<Integer> v(n);
  Integer x = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = x;
    x = x * 3 + 1;  // grows like multi-limb coefficients do
  }
  return v;
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = ramp(n + 1), b = ramp(n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve(a, b, n, exec_of(state)));
}
BENCHMARK(BM_Convolve)->ArgsProduct({{100, 400, 1600}, {0, 1}})->ArgNames({"order", "parallel"});

void BM_Convolve2d(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  const std::size_t u = 8;
  const auto a = ramp((t + 1) * (u + 1)), b = ramp((t + 1) * (u + 1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve2d(a, b, t, u, exec_of(state)));
}
BENCHMARK(BM_Convolve2d)->ArgsProduct({{50, 200}, {0, 1}})->ArgNames({"t_order", "parallel"});

void BM_ConvolutionPowers(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Exec exec = exec_of(state);
  for (auto _ : state) {
    kernels::ConvolutionPowers p(4, false);
    for (std::size_t m = 1; m <= n; ++m) {
      p.extend_powers(exec);
      std::vector<Integer> row(5, 0);
      row[0] = Integer(m);
      row[1] = Integer(m * m);
      p.add_base_row(std::move(row));
    }
    benchmark::DoNotOptimize(p.power(2, n, 1));
  }
}
BENCHMARK(BM_ConvolutionPowers)->ArgsProduct({{20, 40}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_UnlabeledRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RecursionOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(unlabeled::recursion_table(n, 6, opts));
}
BENCHMARK(BM_UnlabeledRecursion)->ArgsProduct({{20, 40}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_LabeledRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RecursionOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(labeled::recursion_table(n, 6, opts));
}
BENCHMARK(BM_LabeledRecursion)->ArgsProduct({{20, 40}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_RecursionStreams(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unlabeled::recursion_table_reference(n, 4));
}
BENCHMARK(BM_RecursionStreams)->Arg(9)->Arg(11)->ArgName("n");

void BM_RecursionPowers(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unlabeled::recursion_table(n, 4));
}
BENCHMARK(BM_RecursionPowers)->Arg(9)->Arg(11)->ArgName("n");

}  // namespace

BENCHMARK_MAIN();
