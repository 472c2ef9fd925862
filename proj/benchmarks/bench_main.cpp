#include <agscale/cf_core.hpp>
#include <agscale/pressure.hpp>
#include <agscale/thermodynamics.hpp>
#include <agscale/transfer_operator.hpp>

#include <benchmark/benchmark.h>

using namespace agscale;

static void BM_OperatorAssembly(benchmark::State& state) {
  OperatorSpec spec;
  spec.alphabet = AlphabetSpec::full(state.range(0));
  for (auto _ : state) {
    TransferOperator op(spec);
    benchmark::DoNotOptimize(op.matrix().data());
  }
}
BENCHMARK(BM_OperatorAssembly)->Arg(200)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_LeadingEigenvalue(benchmark::State& state) {
  OperatorSpec spec;
  spec.t = 0.8;
  spec.beta = 0.3;
  spec.alphabet = AlphabetSpec::full(200);
  spec.degree = static_cast<int>(state.range(0));
  const TransferOperator op(spec);
  for (auto _ : state) benchmark::DoNotOptimize(leading_eigenvalue(op, 1e-13).log_lambda);
}
BENCHMARK(BM_LeadingEigenvalue)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_PartitionSum(benchmark::State& state) {
  PressureQuery q;
  q.alphabet = AlphabetSpec::truncated(30);
  q.depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partition_sum(q));
}
BENCHMARK(BM_PartitionSum)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_SolveT(benchmark::State& state) {
  const double beta = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_t(beta, 1e-11).t);
}
BENCHMARK(BM_SolveT)->Arg(-5)->Arg(0)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_LogQTrace(benchmark::State& state) {
  const DigitWord w = constant_word(7, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(log_q_trace(w).back().log_q);
}
BENCHMARK(BM_LogQTrace)->Arg(1000)->Arg(100000);
BENCHMARK_MAIN();
